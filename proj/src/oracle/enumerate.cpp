#include <algorithm>
#include <string>

#include "orthodb/error.hpp"
#include "orthodb/oracle.hpp"

namespace orthodb::oracle {

namespace {

Sequence least_rotation(const Sequence& s) {
  Sequence best = s;
  Sequence cur = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

struct DbEnumerator {
  std::size_t sigma;
  std::size_t k;
  std::size_t n;          // target length = |L|
  std::size_t modulus;    // sigma^k
  std::size_t guard;
  std::vector<bool> member;
  std::vector<bool> used;
  Sequence seq;
  std::vector<Sequence> found;

  std::size_t rank_at(std::size_t pos) const {
    std::size_t r = 0;
    for (std::size_t j = 0; j < k; ++j) r = r * sigma + seq[(pos + j) % n];
    return r;
  }

  void close() {
    std::vector<std::size_t> marked;
    bool ok = true;
    for (std::size_t i = n - k + 1; i < n && ok; ++i) {
      const std::size_t r = rank_at(i);
      if (!member[r] || used[r]) {
        ok = false;
      } else {
        used[r] = true;
        marked.push_back(r);
      }
    }
    for (std::size_t r : marked) used[r] = false;
    if (!ok) return;
    if (found.size() >= guard) {
      throw Error(ErrorCode::GuardExceeded,
                  "more than " + std::to_string(guard) + " sequences", {guard});
    }
    found.push_back(least_rotation(seq));
  }

  void extend(std::size_t pos, std::size_t prev_rank) {
    if (pos == n) {
      close();
      return;
    }
    for (Symbol s = 0; s < sigma; ++s) {
      const std::size_t r = (prev_rank * sigma + s) % modulus;
      if (!member[r] || used[r]) continue;
      used[r] = true;
      seq[pos] = s;
      extend(pos + 1, r);
      used[r] = false;
    }
  }
};

}  // namespace

std::vector<Sequence> enumerate_db_words(std::span<const Sequence> language,
                                         std::size_t sigma, std::size_t guard) {
  if (language.empty()) throw Error(ErrorCode::InvalidArgument, "empty language");
  const std::size_t k = language.front().size();
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "empty words in language");
  DbEnumerator e{sigma, k, language.size(), power(sigma, k), guard, {}, {}, {}, {}};
  e.member.assign(e.modulus, false);
  e.used.assign(e.modulus, false);
  for (const auto& w : language) {
    if (w.size() != k) throw Error(ErrorCode::InvalidArgument, "mixed word lengths");
    std::size_t r = 0;
    for (Symbol x : w) {
      if (x >= sigma) throw Error(ErrorCode::InvalidArgument, "symbol outside alphabet");
      r = r * sigma + x;
    }
    if (e.member[r]) throw Error(ErrorCode::InvalidArgument, "duplicate word in language");
    e.member[r] = true;
  }
  if (e.n < k) {
    throw Error(ErrorCode::InvalidArgument, "language smaller than the word length");
  }
  // every sequence contains the least word once; start there
  const Sequence start = *std::min_element(language.begin(), language.end());
  e.seq.assign(e.n, 0);
  std::copy(start.begin(), start.end(), e.seq.begin());
  std::size_t r0 = 0;
  for (Symbol x : start) r0 = r0 * sigma + x;
  e.used[r0] = true;
  e.extend(k, r0);
  std::sort(e.found.begin(), e.found.end());
  e.found.erase(std::unique(e.found.begin(), e.found.end()), e.found.end());
  return e.found;
}

std::vector<Sequence> enumerate_db_words(std::size_t sigma, std::size_t k, std::size_t guard) {
  const auto lang = brute_force_language(sigma, k);
  return enumerate_db_words(lang, sigma, guard);
}

namespace {

struct MaxSearch {
  std::size_t ell;
  std::size_t upper;  // ell * (sigma - 1): each word uses one window 0^k b, b != 0
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::vector<std::uint32_t>> windows;  // per word, (k+1)-window ranks
  std::vector<std::size_t> load;                    // per window
  std::size_t best = 0;

  bool fits(std::size_t w) const {
    for (auto x : windows[w]) {
      if (load[x] >= ell) return false;
    }
    return true;
  }

  void search(std::size_t start, std::size_t depth) {
    if (++nodes > budget) {
      throw Error(ErrorCode::GuardExceeded,
                  "search exceeded " + std::to_string(budget) + " nodes",
                  {static_cast<std::size_t>(budget)});
    }
    best = std::max(best, depth);
    for (std::size_t w = start; w < windows.size() && best < upper; ++w) {
      if (depth + (windows.size() - w) <= best) return;
      if (!fits(w)) continue;
      for (auto x : windows[w]) ++load[x];
      search(w + 1, depth + 1);
      for (auto x : windows[w]) --load[x];
    }
  }
};

}  // namespace

std::size_t exact_max_orthogonal(std::size_t sigma, std::size_t k, std::size_t ell,
                                 const SearchLimits& limits) {
  if (sigma < 2 || k == 0 || ell == 0) {
    throw Error(ErrorCode::InvalidArgument, "exact_max_orthogonal needs sigma >= 2, k, ell >= 1");
  }
  const auto words = enumerate_db_words(sigma, k, limits.word_guard);
  MaxSearch s{ell, ell * (sigma - 1), limits.node_budget, 0, {}, {}, 0};
  s.load.assign(power(sigma, k + 1), 0);
  for (const auto& w : words) {
    std::vector<std::uint32_t> ws;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t r = 0;
      for (std::size_t j = 0; j <= k; ++j) r = r * sigma + w[(i + j) % w.size()];
      ws.push_back(static_cast<std::uint32_t>(r));
    }
    std::sort(ws.begin(), ws.end());
    s.windows.push_back(std::move(ws));
  }
  s.search(0, 0);
  return s.best;
}

}  // namespace orthodb::oracle

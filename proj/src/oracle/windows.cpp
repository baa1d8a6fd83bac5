#include <algorithm>
#include <set>
#include <string>

#include "orthodb/error.hpp"
#include "orthodb/oracle.hpp"

namespace orthodb::oracle {

namespace {

std::string join(std::span<const Symbol> w) {
  std::string s;
  for (Symbol x : w) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

VerificationReport fail(VerificationReport r, std::span<const Symbol> items, std::string why) {
  r.holds = false;
  r.witness = Witness{std::vector<std::size_t>(items.begin(), items.end()), std::move(why)};
  return r;
}

VerificationReport fail_ids(VerificationReport r, std::vector<std::size_t> ids, std::string why) {
  r.holds = false;
  r.witness = Witness{std::move(ids), std::move(why)};
  return r;
}

std::optional<VerificationReport> check_range(const VerificationReport& r,
                                              std::span<const Symbol> word,
                                              std::size_t sigma) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] >= sigma) {
      return fail(r, word.subspan(i, 1),
                  "symbol " + std::to_string(word[i]) + " at position " + std::to_string(i) +
                      " outside alphabet of size " + std::to_string(sigma));
    }
  }
  return std::nullopt;
}

// Every word of `language` exactly b times, nothing else, total length
// b * |language|.
VerificationReport exact_cover(std::string property, std::span<const Symbol> word,
                               std::size_t k, std::span<const Sequence> language,
                               std::size_t b) {
  VerificationReport r{std::move(property), true, std::nullopt, {}};
  if (word.size() < k || word.empty()) {
    return fail(r, word, "word shorter than the window length " + std::to_string(k));
  }
  const auto counts = circular_window_counts(word, k);
  std::set<Sequence> lang(language.begin(), language.end());
  for (const auto& w : lang) {
    auto it = counts.find(w);
    ++r.histogram[it == counts.end() ? 0 : it->second];
  }
  for (const auto& [w, n] : counts) {
    if (!lang.count(w)) ++r.histogram[n];
  }
  for (const auto& [w, n] : counts) {
    if (!lang.count(w)) return fail(r, w, "window " + join(w) + " is outside the language");
  }
  for (const auto& w : lang) {
    auto it = counts.find(w);
    const std::size_t n = it == counts.end() ? 0 : it->second;
    if (n != b) {
      return fail(r, w,
                  "window " + join(w) + " occurs " + std::to_string(n) + " times, expected " +
                      std::to_string(b));
    }
  }
  if (word.size() != b * lang.size()) {
    return fail(r, {}, "length " + std::to_string(word.size()) + ", expected " +
                           std::to_string(b * lang.size()));
  }
  return r;
}

std::optional<VerificationReport> check_no_repeat(const VerificationReport& r,
                                                  std::span<const Symbol> word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::size_t j = (i + 1) % word.size();
    if (word.size() > 1 && word[i] == word[j]) {
      const Sequence pair{word[i], word[j]};
      return fail(r, pair, "adjacent equal symbols at position " + std::to_string(i));
    }
  }
  return std::nullopt;
}

}  // namespace

WindowCounts circular_window_counts(std::span<const Symbol> word, std::size_t n) {
  if (n == 0 || n > word.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "window length " + std::to_string(n) + " invalid for word of length " +
                    std::to_string(word.size()));
  }
  WindowCounts counts;
  Sequence w(n);
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) w[j] = word[(i + j) % word.size()];
    ++counts[w];
  }
  return counts;
}

std::vector<Sequence> brute_force_language(std::size_t sigma, std::size_t k,
                                           const LanguageFilter& filter) {
  std::vector<Sequence> out;
  if (sigma == 0 || k == 0) return out;
  Sequence w(k, 0);
  while (true) {
    bool ok = true;
    if (filter.kautz) {
      for (std::size_t i = 1; i < k && ok; ++i) ok = w[i] != w[i - 1];
    }
    if (ok && !filter.weighted.empty()) {
      std::size_t weight = 0;
      for (Symbol x : w) weight += filter.weighted.at(x) ? 1 : 0;
      ok = weight >= filter.w_min && weight <= filter.w_max;
    }
    if (ok) out.push_back(w);
    std::size_t i = k;
    while (i > 0 && w[i - 1] + 1 == sigma) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

VerificationReport is_de_bruijn(std::span<const Symbol> word, std::size_t sigma,
                                std::size_t k) {
  return is_b_balanced(word, sigma, k, 1);
}

VerificationReport is_b_balanced(std::span<const Symbol> word, std::size_t sigma,
                                 std::size_t k, std::size_t b) {
  const std::string name = b == 1 ? "de Bruijn" : std::to_string(b) + "-balanced";
  VerificationReport r{name, true, std::nullopt, {}};
  if (auto bad = check_range(r, word, sigma)) return *bad;
  const auto lang = brute_force_language(sigma, k);
  return exact_cover(name, word, k, lang, b);
}

VerificationReport is_kautz_word(std::span<const Symbol> word, std::size_t sigma,
                                 std::size_t k) {
  return is_b_balanced_kautz(word, sigma, k, 1);
}

VerificationReport is_b_balanced_kautz(std::span<const Symbol> word, std::size_t sigma,
                                       std::size_t k, std::size_t b) {
  const std::string name = b == 1 ? "Kautz" : std::to_string(b) + "-balanced Kautz";
  VerificationReport r{name, true, std::nullopt, {}};
  if (auto bad = check_range(r, word, sigma)) return *bad;
  if (auto bad = check_no_repeat(r, word)) return *bad;
  LanguageFilter f;
  f.kautz = true;
  const auto lang = brute_force_language(sigma, k, f);
  return exact_cover(name, word, k, lang, b);
}

VerificationReport is_fixed_weight_db(std::span<const Symbol> word,
                                      std::span<const Sequence> language) {
  if (language.empty()) {
    return fail(VerificationReport{"de Bruijn w.r.t. language", true, std::nullopt, {}}, {},
                "empty language");
  }
  return exact_cover("de Bruijn w.r.t. language", word, language.front().size(), language, 1);
}

VerificationReport is_self_orthogonal(std::span<const Symbol> word, std::size_t k) {
  return is_l_orthogonal(std::vector<Sequence>{Sequence(word.begin(), word.end())}, k, 1);
}

VerificationReport is_l_orthogonal(std::span<const Sequence> collection, std::size_t k,
                                   std::size_t ell) {
  const std::string name =
      collection.size() == 1 && ell == 1 ? "self-orthogonal" : std::to_string(ell) + "-orthogonal";
  VerificationReport r{name, true, std::nullopt, {}};
  WindowCounts total;
  for (const auto& s : collection) {
    for (const auto& [w, n] : circular_window_counts(s, k + 1)) total[w] += n;
  }
  for (const auto& [w, n] : total) ++r.histogram[n];
  for (const auto& [w, n] : total) {
    if (n > ell) {
      return fail(r, w,
                  "window " + join(w) + " occurs " + std::to_string(n) + " times (limit " +
                      std::to_string(ell) + ")");
    }
  }
  return r;
}

VerificationReport are_compatible(const DirectedMultigraph& g,
                                  std::span<const Circuit> circuits) {
  VerificationReport r = pair_usage_within(g, circuits, 1);
  r.property = "compatible";
  return r;
}

VerificationReport pair_usage_within(const DirectedMultigraph& g,
                                     std::span<const Circuit> circuits, std::size_t ell) {
  VerificationReport r{"arc-pair usage <= " + std::to_string(ell), true, std::nullopt, {}};
  std::map<std::pair<ArcId, ArcId>, std::size_t> uses;
  for (std::size_t ci = 0; ci < circuits.size(); ++ci) {
    const auto& arcs = circuits[ci].arcs;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const ArcId a = arcs[i];
      const ArcId b = arcs[(i + 1) % arcs.size()];
      if (a >= g.arc_count() || b >= g.arc_count() || g.arc(a).head != g.arc(b).tail) {
        return fail_ids(r, {ci, i}, "circuit " + std::to_string(ci) + " breaks at position " +
                                        std::to_string(i));
      }
      ++uses[{a, b}];
    }
  }
  for (const auto& [p, n] : uses) ++r.histogram[n];
  for (const auto& [p, n] : uses) {
    if (n > ell) {
      return fail_ids(r, {p.first, p.second},
                      "arc pair (" + std::to_string(p.first) + ", " + std::to_string(p.second) +
                          ") at vertex " + std::to_string(g.arc(p.first).head) + " used " +
                          std::to_string(n) + " times");
    }
  }
  return r;
}

VerificationReport are_arc_disjoint(const DirectedMultigraph& g,
                                    std::span<const Circuit> walks) {
  VerificationReport r{"arc-disjoint", true, std::nullopt, {}};
  std::vector<std::size_t> owner(g.arc_count(), walks.size());
  for (std::size_t wi = 0; wi < walks.size(); ++wi) {
    for (ArcId a : walks[wi].arcs) {
      if (a >= g.arc_count()) return fail_ids(r, {a}, "arc id out of range");
      if (owner[a] != walks.size() && owner[a] != wi) {
        return fail_ids(r, {a}, "arc " + std::to_string(a) + " shared by walks " +
                                    std::to_string(owner[a]) + " and " + std::to_string(wi));
      }
      owner[a] = wi;
    }
  }
  return r;
}

VerificationReport is_b_circuit(const DirectedMultigraph& g, const Circuit& walk,
                                std::size_t b) {
  VerificationReport r{std::to_string(b) + "-circuit", true, std::nullopt, {}};
  const auto& arcs = walk.arcs;
  if (arcs.empty()) return fail_ids(r, {}, "empty walk");
  std::vector<std::size_t> visits(g.vertex_count(), 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const ArcId a = arcs[i];
    const ArcId nxt = arcs[(i + 1) % arcs.size()];
    if (a >= g.arc_count() || nxt >= g.arc_count() || g.arc(a).head != g.arc(nxt).tail) {
      return fail_ids(r, {i}, "walk breaks at position " + std::to_string(i));
    }
    ++visits[g.arc(a).tail];
  }
  for (std::size_t n : visits) ++r.histogram[n];
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (visits[v] != b) {
      return fail_ids(r, {v}, "vertex " + std::to_string(v) + " visited " +
                                  std::to_string(visits[v]) + " times");
    }
  }
  return r;
}

VerificationReport is_eulerian_circuit(const DirectedMultigraph& g, const Circuit& c) {
  VerificationReport r{"Eulerian", true, std::nullopt, {}};
  if (c.arcs.size() != g.arc_count()) {
    return fail_ids(r, {c.arcs.size()}, "circuit has " + std::to_string(c.arcs.size()) +
                                            " arcs, graph has " + std::to_string(g.arc_count()));
  }
  std::vector<std::size_t> used(g.arc_count(), 0);
  for (std::size_t i = 0; i < c.arcs.size(); ++i) {
    const ArcId a = c.arcs[i];
    const ArcId nxt = c.arcs[(i + 1) % c.arcs.size()];
    if (a >= g.arc_count() || nxt >= g.arc_count() || g.arc(a).head != g.arc(nxt).tail) {
      return fail_ids(r, {i}, "walk breaks at position " + std::to_string(i));
    }
    if (used[a]++) return fail_ids(r, {a}, "arc " + std::to_string(a) + " repeated");
  }
  return r;
}

}  // namespace orthodb::oracle

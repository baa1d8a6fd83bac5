#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "certify.hpp"
#include "orthodb/constructions.hpp"
#include "orthodb/error.hpp"
#include "orthodb/language.hpp"
#include "orthodb/rewire.hpp"
#include "orthodb/tensor.hpp"

namespace orthodb {

namespace {

std::map<std::size_t, std::size_t> factorize(std::size_t n) {
  std::map<std::size_t, std::size_t> f;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

// Symbols of a prime-power alphabet read as e base-p digits; translation
// adds digitwise mod p. The modular variant adds mod sigma.
struct Translation {
  std::size_t sigma;
  std::size_t p;
  bool digitwise;

  Symbol apply(Symbol a, Symbol c, bool subtract) const {
    if (!digitwise) {
      return static_cast<Symbol>(subtract ? (a + sigma - c) % sigma : (a + c) % sigma);
    }
    Symbol out = 0;
    std::size_t place = 1;
    for (std::size_t x = a, y = c; place < sigma; x /= p, y /= p, place *= p) {
      const std::size_t dx = x % p;
      const std::size_t dy = y % p;
      out += static_cast<Symbol>(((subtract ? dx + p - dy : dx + dy) % p) * place);
    }
    return out;
  }
};

// Hamiltonian cycle on G_{sigma,k+1} minus the vertex 0^k, using each
// translation class of arcs at most once. Classes are arc words modulo
// adding a constant word, so translates of the cycle are arc-disjoint.
class BaseCycleSearch {
 public:
  BaseCycleSearch(std::size_t sigma, std::size_t k, Translation tr, std::uint64_t budget)
      : sigma_(sigma), n_(ipow(sigma, k)), tr_(tr), budget_(budget) {
    cls_.resize(n_ * sigma_);
    for (std::size_t a = 0; a < n_ * sigma_; ++a) {
      auto w = word_unrank(a, k + 1, sigma_);
      const Symbol first = w[0];
      for (auto& x : w) x = tr_.apply(x, first, true);
      cls_[a] = word_rank(w, sigma_);
    }
    members_.resize(n_);
    for (std::size_t a = 0; a < n_ * sigma_; ++a) members_[cls_[a]].push_back(a);
  }

  // Vertex sequence starting at 1, or empty if the budget ran out first.
  std::vector<VertexId> run() {
    visited_.assign(n_, false);
    class_used_.assign(n_, false);
    class_used_[0] = true;  // loops
    visited_[0] = true;     // the avoided vertex 0^k
    path_ = {1};
    visited_[1] = true;
    if (dfs(1)) return path_;
    return {};
  }

  bool budget_exceeded() const { return exceeded_; }

 private:
  VertexId head(VertexId u, Symbol s) const { return (u * sigma_ + s) % n_; }

  VertexId pred(VertexId v, Symbol x) const { return x * (n_ / sigma_) + v / sigma_; }

  bool viable(VertexId v, VertexId cur) const {
    if (visited_[v]) return true;
    const VertexId start = path_.front();
    bool in = false;
    bool out = false;
    for (Symbol s = 0; s < sigma_ && !out; ++s) {
      const VertexId w = head(v, s);
      out = (!visited_[w] || w == start) && w != v && !class_used_[cls_[v * sigma_ + s]];
    }
    for (Symbol x = 0; x < sigma_ && !in; ++x) {
      const VertexId u = pred(v, x);
      in = (!visited_[u] || u == cur) && u != v && !class_used_[cls_[u * sigma_ + v % sigma_]];
    }
    return in && out;
  }

  // Only vertices next to prev or cur, or touching class c, changed status.
  bool alive(VertexId prev, VertexId cur, std::size_t c) const {
    for (Symbol s = 0; s < sigma_; ++s) {
      if (!viable(head(prev, s), cur) || !viable(pred(cur, s), cur)) return false;
    }
    for (ArcId a : members_[c]) {
      if (!viable(a / sigma_, cur) || !viable(a % n_, cur)) return false;
    }
    return true;
  }

  bool dfs(VertexId cur) {
    if (++nodes_ > budget_) {
      exceeded_ = true;
      return false;
    }
    const VertexId start = path_.front();
    if (path_.size() == n_ - 1) {
      for (Symbol s = 0; s < sigma_; ++s) {
        if (head(cur, s) == start && !class_used_[cls_[cur * sigma_ + s]]) return true;
      }
      return false;
    }
    for (Symbol s = 0; s < sigma_; ++s) {
      const VertexId nxt = head(cur, s);
      const std::size_t c = cls_[cur * sigma_ + s];
      if (visited_[nxt] || class_used_[c]) continue;
      visited_[nxt] = true;
      class_used_[c] = true;
      path_.push_back(nxt);
      if (alive(cur, nxt, c) && dfs(nxt)) return true;
      path_.pop_back();
      class_used_[c] = false;
      visited_[nxt] = false;
      if (exceeded_) return false;
    }
    return false;
  }

  std::size_t sigma_;
  std::size_t n_;
  Translation tr_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  std::vector<std::size_t> cls_;
  std::vector<std::vector<ArcId>> members_;  // arcs of each class
  std::vector<bool> visited_;
  std::vector<bool> class_used_;
  std::vector<VertexId> path_;
};

// GF(p^e) with elements stored as base-p digit vectors packed into integers,
// so field addition is the digitwise Translation above.
class PrimePowerField {
 public:
  PrimePowerField(std::size_t p, std::size_t e) : p_(p), q_(ipow(p, e)) {
    if (e == 1) {
      mul_.resize(q_ * q_);
      for (std::size_t a = 0; a < q_; ++a)
        for (std::size_t b = 0; b < q_; ++b) mul_[a * q_ + b] = static_cast<Symbol>(a * b % p);
      return;
    }
    // first monic modulus of degree e whose product table has no zero divisors
    for (std::size_t low = 0; low < q_; ++low) {
      if (build(low, e)) return;
    }
    throw Error(ErrorCode::SearchExhausted, "no irreducible modulus found");
  }

  std::size_t size() const { return q_; }
  Symbol add(Symbol a, Symbol b) const { return Translation{q_, p_, true}.apply(a, b, false); }
  Symbol mul(Symbol a, Symbol b) const { return mul_[a * q_ + b]; }

 private:
  bool build(std::size_t low, std::size_t e) {
    // low holds the coefficients of x^0..x^{e-1} of the modulus
    std::vector<std::size_t> mod(e);
    for (std::size_t i = 0, x = low; i < e; ++i, x /= p_) mod[i] = x % p_;
    if (mod[0] == 0) return false;
    mul_.assign(q_ * q_, 0);
    for (std::size_t a = 0; a < q_; ++a) {
      for (std::size_t b = 0; b < q_; ++b) {
        std::vector<std::size_t> prod(2 * e, 0);
        for (std::size_t i = 0, x = a; i < e; ++i, x /= p_)
          for (std::size_t j = 0, y = b; j < e; ++j, y /= p_)
            prod[i + j] = (prod[i + j] + (x % p_) * (y % p_)) % p_;
        for (std::size_t d = 2 * e - 1; d >= e; --d) {
          const std::size_t top = prod[d];
          if (top == 0) continue;
          prod[d] = 0;
          for (std::size_t i = 0; i < e; ++i)
            prod[d - e + i] = (prod[d - e + i] + (p_ - mod[i]) * top) % p_;
        }
        std::size_t packed = 0;
        for (std::size_t i = e; i-- > 0;) packed = packed * p_ + prod[i];
        if (a != 0 && b != 0 && packed == 0) return false;
        mul_[a * q_ + b] = static_cast<Symbol>(packed);
      }
    }
    return true;
  }

  std::size_t p_;
  std::size_t q_;
  std::vector<Symbol> mul_;
};

// Maximal-period linear recurrence of order k over GF(q). Its (k+1)-windows
// lie in a subspace with no nonzero constant word, so they meet each
// translation class at most once and never form a loop.
std::vector<VertexId> m_sequence_cycle(std::size_t p, std::size_t e, std::size_t k) {
  const PrimePowerField f(p, e);
  const std::size_t q = f.size();
  const std::size_t n = ipow(q, k);
  std::vector<Symbol> coef(k, 0);  // s[t+k] = sum coef[i] * s[t+i]
  for (std::size_t code = 0; code < n; ++code) {
    for (std::size_t i = 0, x = code; i < k; ++i, x /= q) coef[i] = static_cast<Symbol>(x % q);
    if (coef[0] == 0) continue;
    std::vector<Symbol> state(k, 0);
    state[k - 1] = 1;
    const auto start = state;
    std::vector<Symbol> seq;
    do {
      seq.push_back(state[0]);
      Symbol next = 0;
      for (std::size_t i = 0; i < k; ++i) next = f.add(next, f.mul(coef[i], state[i]));
      state.erase(state.begin());
      state.push_back(next);
    } while (state != start && seq.size() < n);
    if (seq.size() != n - 1) continue;
    std::vector<VertexId> path;
    for (std::size_t t = 0; t < seq.size(); ++t) {
      std::vector<Symbol> w(k);
      for (std::size_t i = 0; i < k; ++i) w[i] = seq[(t + i) % seq.size()];
      path.push_back(word_rank(w, q));
    }
    return path;
  }
  throw Error(ErrorCode::SearchExhausted, "no primitive recurrence found");
}

}  // namespace

bool is_prime_power(std::size_t n) { return n >= 2 && factorize(n).size() == 1; }

std::size_t smallest_prime_power_at_least(std::size_t n) {
  std::size_t q = std::max<std::size_t>(n, 2);
  while (!is_prime_power(q)) ++q;
  return q;
}

std::vector<Circuit> find_arc_disjoint_avoiding_cycles(std::size_t sigma, std::size_t k,
                                                       const AvoidingCycleOptions& opts) {
  if (sigma < 2 || k < 1) {
    throw Error(ErrorCode::ParameterOutOfRange, "needs sigma >= 2 and k >= 1");
  }
  const auto f = factorize(sigma);
  const bool prime_power = f.size() == 1;
  if (!prime_power && !opts.allow_non_prime_power) {
    throw Error(ErrorCode::NotPrimePower,
                std::to_string(sigma) + " is not a prime power; pass allow_non_prime_power");
  }
  const Translation tr{sigma, prime_power ? f.begin()->first : sigma, prime_power};
  const auto g = de_bruijn_graph(sigma, k + 1);
  const std::size_t n = ipow(sigma, k);

  std::vector<std::vector<Symbol>> base;  // arc words of cycle 0
  if (n == 2) {
    base.push_back({1, 1});
  } else {
    BaseCycleSearch search(sigma, k, tr, opts.node_budget);
    auto path = search.run();
    if (path.empty() && search.budget_exceeded() && prime_power) {
      path = m_sequence_cycle(f.begin()->first, f.begin()->second, k);
    }
    if (path.empty()) {
      if (search.budget_exceeded()) {
        throw Error(ErrorCode::GuardExceeded,
                    "avoiding-cycle search exceeded " + std::to_string(opts.node_budget) +
                        " nodes",
                    {static_cast<std::size_t>(opts.node_budget)});
      }
      throw Error(ErrorCode::SearchExhausted,
                  "no translation-free base cycle for sigma = " + std::to_string(sigma));
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      auto w = word_unrank(path[i], k, sigma);
      w.push_back(static_cast<Symbol>(path[(i + 1) % path.size()] % sigma));
      base.push_back(std::move(w));
    }
  }

  std::vector<Circuit> cycles;
  for (Symbol c = 0; c < sigma; ++c) {
    Circuit cyc{{}, g.hash()};
    for (const auto& w : base) {
      std::vector<Symbol> t(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) t[i] = tr.apply(w[i], c, false);
      cyc.arcs.push_back(word_rank(t, sigma));
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

Circuit combine_closed_walks(const DirectedMultigraph& g, std::span<const Circuit> walks) {
  if (walks.empty()) throw Error(ErrorCode::InvalidArgument, "no walks to combine");
  for (const auto& w : walks) {
    if (!is_closed_walk(g, w.arcs)) {
      throw Error(ErrorCode::InvalidArgument, "input is not a closed walk");
    }
  }
  std::vector<ArcId> result = walks[0].arcs;
  std::vector<const Circuit*> pending;
  for (std::size_t i = 1; i < walks.size(); ++i) pending.push_back(&walks[i]);

  while (!pending.empty()) {
    bool merged = false;
    for (auto it = pending.begin(); it != pending.end() && !merged; ++it) {
      const auto& w = (*it)->arcs;
      std::vector<std::size_t> first_at(g.vertex_count(), w.size());
      for (std::size_t q = w.size(); q-- > 0;) first_at[g.arc(w[q]).tail] = q;
      for (std::size_t p = 0; p < result.size(); ++p) {
        const VertexId v = g.arc(result[p]).tail;
        if (first_at[v] == w.size()) continue;
        std::vector<ArcId> rotated(w.begin() + first_at[v], w.end());
        rotated.insert(rotated.end(), w.begin(), w.begin() + first_at[v]);
        // splicing at position 0 is the same closed walk as appending
        const auto at = p == 0 ? result.end() : result.begin() + p;
        result.insert(at, rotated.begin(), rotated.end());
        pending.erase(it);
        merged = true;
        break;
      }
    }
    if (!merged) {
      throw Error(ErrorCode::Disconnected, "walks do not share a vertex with the combination");
    }
  }
  return Circuit{std::move(result), g.hash()};
}

Circuit build_b_circuit(const DirectedMultigraph& g, std::size_t tau, std::size_t b,
                        std::span<const Circuit> cycles) {
  if (b == 0) throw Error(ErrorCode::InvalidArgument, "b must be positive");
  if (b * tau + b > cycles.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "cycles " + std::to_string(b * tau) + ".." + std::to_string(b * tau + b - 1) +
                    " requested, " + std::to_string(cycles.size()) + " available");
  }
  const std::size_t k1 = g.info().order;  // k + 1
  auto loop_at = [&](std::size_t symbol) {
    const std::vector<Symbol> w(k1, static_cast<Symbol>(symbol));
    auto a = g.find_arc_by_word(w);
    if (!a) throw Error(ErrorCode::InvalidArgument, "graph lacks the loop for the b-circuit");
    return Circuit{{*a}, g.hash()};
  };

  if (b == 1) {
    // C_tau misses tau^k; route x tau^{k-1} -> tau^{k-1} y through it.
    const auto& cyc = cycles[tau].arcs;
    const Symbol t = static_cast<Symbol>(tau);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto w = g.arc_word(cyc[i]);
      const bool inner = std::all_of(w.begin() + 1, w.end() - 1, [&](Symbol s) { return s == t; });
      if (!inner || w.front() == t || w.back() == t) continue;
      std::vector<Symbol> into(w.begin(), w.end() - 1);
      into.push_back(t);
      std::vector<Symbol> out_of(w.begin() + 1, w.end() - 1);
      out_of.insert(out_of.begin(), t);
      out_of.push_back(w.back());
      Circuit c{cyc, g.hash()};
      c.arcs[i] = *g.find_arc_by_word(into);
      c.arcs.insert(c.arcs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                    *g.find_arc_by_word(out_of));
      return c;
    }
    throw Error(ErrorCode::InvalidArgument, "cycle has no arc next to the missing vertex");
  }

  std::vector<Circuit> extended;
  for (std::size_t i = 0; i < b; ++i) {
    const std::size_t idx = b * tau + i;
    const std::size_t loop_symbol = i + 1 < b ? idx + 1 : b * tau;
    const std::vector<Circuit> parts{cycles[idx], loop_at(loop_symbol)};
    extended.push_back(combine_closed_walks(g, parts));
  }
  return combine_closed_walks(g, extended);
}

Circuit tensor_compose_b_circuits(const DirectedMultigraph& g1, const Circuit& c1,
                                  const DirectedMultigraph& g2, const Circuit& c2,
                                  const DirectedMultigraph& product) {
  const std::size_t l1 = c1.size();
  const std::size_t l2 = c2.size();
  if (l1 == 0 || l2 == 0) throw Error(ErrorCode::InvalidArgument, "empty walk");
  if (std::gcd(l1, l2) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "walk lengths " + std::to_string(l1) + " and " + std::to_string(l2) +
                    " share a factor");
  }
  if (product.arc_count() != g1.arc_count() * g2.arc_count()) {
    throw Error(ErrorCode::InvalidArgument, "product graph does not match the factors");
  }
  Circuit out{{}, product.hash()};
  out.arcs.reserve(l1 * l2);
  for (std::size_t t = 0; t < l1 * l2; ++t) {
    out.arcs.push_back(product_arc(g2, c1.arcs[t % l1], c2.arcs[t % l2]));
  }
  return out;
}

Circuit compose_on_de_bruijn(std::size_t s1, const Circuit& c1, std::size_t s2,
                             const Circuit& c2, std::size_t n) {
  const auto g1 = de_bruijn_graph(s1, n);
  const auto g2 = de_bruijn_graph(s2, n);
  const auto prod = tensor_product(g1, g2);
  const auto on_product = tensor_compose_b_circuits(g1, c1, g2, c2, prod);
  const auto iso = de_bruijn_digit_isomorphism(s1, s2, n);
  const auto target = de_bruijn_graph(s1 * s2, n);
  Circuit out{{}, target.hash()};
  out.arcs.reserve(on_product.size());
  for (ArcId a : on_product.arcs) out.arcs.push_back(iso.arc_inverse[a]);
  return out;
}

namespace {

struct Component {
  std::size_t sigma;
  std::size_t b;
  std::vector<Circuit> circuits;  // on G_{sigma,k+1}
  std::string how;
};

Component prime_power_component(std::size_t sigma, std::size_t c, std::size_t b,
                                std::size_t k) {
  const auto cycles = find_arc_disjoint_avoiding_cycles(sigma, k);
  const auto g = de_bruijn_graph(sigma, k + 1);
  Component comp{sigma, b, {}, {}};
  for (std::size_t tau = 0; tau < c; ++tau) {
    comp.circuits.push_back(build_b_circuit(g, tau, b, cycles));
  }
  comp.how = std::to_string(c) + " " + std::to_string(b) + "-circuits on G(" +
             std::to_string(sigma) + "," + std::to_string(k + 1) + ") from avoiding cycles";
  return comp;
}

void certify_balanced(ConstructionResult& r, std::size_t b, bool kautz) {
  using namespace oracle;
  for (std::size_t i = 0; i < r.circuits.size(); ++i) {
    detail::require(r, is_b_circuit(r.graph, r.circuits[i], b));
    detail::require(r, kautz ? is_b_balanced_kautz(r.words[i].view(), r.sigma, r.k, b)
                             : is_b_balanced(r.words[i].view(), r.sigma, r.k, b));
  }
  detail::require(r, are_arc_disjoint(r.graph, r.circuits));
  detail::require(r, is_l_orthogonal(detail::sequences_of(r.words), r.k, 1));
}

constexpr std::size_t kMaxBalancedArcs = 4000000;

}  // namespace

ConstructionResult construct_orthogonal_balanced_de_bruijn(std::size_t c, std::size_t b,
                                                           std::size_t k) {
  if (c < 2 || b < 2 || k < 1) {
    throw Error(ErrorCode::ParameterOutOfRange, "needs c >= 2, b >= 2, k >= 1");
  }
  const auto fc = factorize(c);
  const bool divides = std::all_of(fc.begin(), fc.end(), [&](auto& pe) { return b % pe.first == 0; });

  std::vector<Component> comps;
  std::size_t sigma = 1;
  if (divides) {
    std::size_t rest = b;
    for (auto it = fc.rbegin(); it != fc.rend(); ++it) {
      const std::size_t p = it->first;
      std::size_t bp = 1;
      while (rest % p == 0) {
        rest /= p;
        bp *= p;
      }
      const std::size_t cp = ipow(p, it->second);
      comps.push_back({cp * bp, bp, {}, {}});
      sigma *= cp * bp;
    }
    if (rest > 1) sigma *= rest;
    if (ipow(sigma, k + 1) > kMaxBalancedArcs) {
      throw Error(ErrorCode::ParameterOutOfRange,
                  "G(" + std::to_string(sigma) + "," + std::to_string(k + 1) +
                      ") exceeds the size guard");
    }
    std::size_t idx = 0;
    for (auto it = fc.rbegin(); it != fc.rend(); ++it, ++idx) {
      const std::size_t cp = ipow(it->first, it->second);
      comps[idx] = prime_power_component(comps[idx].sigma, cp, comps[idx].b, k);
    }
    if (rest > 1) {
      const auto gr = de_bruijn_graph(rest, k + 1);
      comps.push_back({rest, rest, {find_eulerian_circuit(gr)},
                       "Eulerian circuit of G(" + std::to_string(rest) + "," +
                           std::to_string(k + 1) + ") as a " + std::to_string(rest) + "-circuit"});
    }
  } else {
    sigma = smallest_prime_power_at_least(c * b);
    if (ipow(sigma, k + 1) > kMaxBalancedArcs) {
      throw Error(ErrorCode::ParameterOutOfRange,
                  "G(" + std::to_string(sigma) + "," + std::to_string(k + 1) +
                      ") exceeds the size guard");
    }
    comps.push_back(prime_power_component(sigma, c, b, k));
  }

  // fold components left to right; the accumulated side is the quotient digit
  std::vector<Circuit> acc = comps[0].circuits;
  std::vector<std::string> how(acc.size(), comps[0].how);
  for (std::size_t i = 0; i < acc.size(); ++i) how[i] += " #" + std::to_string(i);
  std::size_t acc_sigma = comps[0].sigma;
  for (std::size_t ci = 1; ci < comps.size(); ++ci) {
    std::vector<Circuit> next;
    std::vector<std::string> next_how;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 0; j < comps[ci].circuits.size(); ++j) {
        next.push_back(compose_on_de_bruijn(acc_sigma, acc[i], comps[ci].sigma,
                                            comps[ci].circuits[j], k + 1));
        next_how.push_back(how[i] + " (x) " + comps[ci].how + " #" + std::to_string(j));
      }
    }
    acc = std::move(next);
    how = std::move(next_how);
    acc_sigma *= comps[ci].sigma;
  }

  ConstructionResult r;
  r.family = "orthogonal balanced de Bruijn";
  r.params = {{"c", c}, {"b", b}, {"k", k}};
  r.sigma = acc_sigma;
  r.k = k;
  r.graph = de_bruijn_graph(acc_sigma, k + 1);
  r.circuits = std::move(acc);
  r.words = detail::words_of(r.graph, r.circuits);
  r.provenance = std::move(how);
  if (r.circuits.size() != c) {
    throw Error(ErrorCode::CertificationFailed, "construction produced the wrong count");
  }
  certify_balanced(r, b, false);
  return r;
}

ConstructionResult construct_orthogonal_balanced_kautz(std::size_t c, std::size_t b,
                                                       std::size_t k) {
  if (c < 2 || b < 2 || k < 2) {
    throw Error(ErrorCode::ParameterOutOfRange, "needs c >= 2, b >= 2, k >= 2");
  }
  const std::size_t sigma = 2 * c * b + 1;
  const std::size_t cb = c * b;
  if (sigma * ipow(sigma - 1, k) > kMaxBalancedArcs) {
    throw Error(ErrorCode::ParameterOutOfRange, "Kautz graph exceeds the size guard");
  }
  const auto low = kautz_graph(sigma, k);
  const auto high = kautz_graph(sigma, k + 1);

  std::vector<VertexId> all(low.vertex_count());
  std::iota(all.begin(), all.end(), VertexId{0});
  std::vector<Circuit> compatible{find_eulerian_circuit(low)};
  while (compatible.size() < cb) {
    compatible.push_back(rewire_vertex_set(low, compatible.back(), all, compatible));
  }

  std::vector<Circuit> cycles;
  for (const auto& e : compatible) cycles.push_back(hamiltonian_from_eulerian(low, e, high));

  ConstructionResult r;
  r.family = "orthogonal balanced Kautz";
  r.params = {{"c", c}, {"b", b}, {"k", k}};
  r.sigma = sigma;
  r.k = k;
  for (std::size_t tau = 0; tau < c; ++tau) {
    const std::span<const Circuit> group(cycles.data() + tau * b, b);
    r.circuits.push_back(combine_closed_walks(high, group));
    r.provenance.push_back("combination of Hamiltonian lifts of compatible circuits " +
                           std::to_string(tau * b) + ".." + std::to_string(tau * b + b - 1));
  }
  r.graph = high;
  r.words = detail::words_of(r.graph, r.circuits);
  certify_balanced(r, b, true);
  return r;
}

}  // namespace orthodb

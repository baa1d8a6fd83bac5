#include <algorithm>
#include <numeric>
#include <string>

#include "certify.hpp"
#include "orthodb/constructions.hpp"
#include "orthodb/error.hpp"
#include "orthodb/language.hpp"
#include "orthodb/rewire.hpp"
#include "orthodb/split.hpp"

namespace orthodb {

Wiring shift_wiring(const DirectedMultigraph& g, VertexId v, std::span<const Symbol> symbols,
                    std::size_t j) {
  const std::size_t m = symbols.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty symbol set");
  auto index_of = [&](Symbol s) -> std::size_t {
    const auto it = std::find(symbols.begin(), symbols.end(), s);
    if (it == symbols.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(v) + " has an arc outside the shift symbols");
    }
    return static_cast<std::size_t>(it - symbols.begin());
  };
  const auto ins = g.in_arcs(v);
  const auto outs = g.out_arcs(v);
  if (ins.size() != m || outs.size() != m) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex " + std::to_string(v) + " degree differs from the shift size");
  }
  std::vector<ArcId> out_by_index(m, kNoArc);
  for (ArcId b : outs) out_by_index[index_of(g.arc_word(b).back())] = b;
  Wiring w{v, {}};
  for (ArcId a : ins) {
    const ArcId b = out_by_index[(index_of(g.arc_word(a).front()) + j) % m];
    if (b == kNoArc) throw Error(ErrorCode::InvalidArgument, "shift target missing");
    w.pairs.emplace_back(a, b);
  }
  std::sort(w.pairs.begin(), w.pairs.end());
  return w;
}

namespace {

enum class Shift { W, X };

struct Plan {
  std::vector<std::pair<VertexId, Shift>> split;
  std::vector<VertexId> rewired;
};

// Circuit j: shift wirings at the split vertices, Euler on the split graph,
// merge, then rewire the remaining vertices away from circuits 0..j-1.
std::vector<Circuit> shift_split_family(const DirectedMultigraph& g, const Alphabet& alphabet,
                                        const Plan& plan, std::size_t count,
                                        std::vector<std::string>& provenance) {
  const auto w_syms = alphabet.weighted();
  const auto x_syms = alphabet.unweighted();
  std::vector<Circuit> out;
  for (std::size_t j = 0; j < count; ++j) {
    std::vector<Wiring> wirings;
    for (auto [v, which] : plan.split) {
      wirings.push_back(shift_wiring(g, v, which == Shift::W ? w_syms : x_syms, j));
    }
    const auto split = split_vertices(g, wirings);
    Circuit c = merge_circuit(split, find_eulerian_circuit(split.graph));
    std::string how = "shift " + std::to_string(j) + " at " + std::to_string(plan.split.size()) +
                      " split vertices, Euler, merge";
    if (j > 0) {
      c = rewire_vertex_set(g, c, plan.rewired, out);
      how += ", rewire " + std::to_string(plan.rewired.size()) + " vertices given C[0.." +
             std::to_string(j - 1) + "]";
    }
    out.push_back(std::move(c));
    provenance.push_back(std::move(how));
  }
  return out;
}

void certify_fixed_weight(ConstructionResult& r, const std::vector<Word>& language) {
  using namespace oracle;
  std::vector<Sequence> lang;
  for (const auto& w : language) lang.push_back(w.entries);
  for (std::size_t i = 0; i < r.circuits.size(); ++i) {
    detail::require(r, is_eulerian_circuit(r.graph, r.circuits[i]));
    detail::require(r, is_fixed_weight_db(r.words[i].view(), lang));
  }
  detail::require(r, are_compatible(r.graph, r.circuits));
  detail::require(r, is_l_orthogonal(detail::sequences_of(r.words), r.k, 1));
}

void require_split_alphabet(const Alphabet& a, std::size_t min_side) {
  if (!a.has_weighted_subset()) {
    throw Error(ErrorCode::InvalidArgument, "alphabet has no weighted subset");
  }
  if (a.weighted().size() < min_side || a.unweighted().size() < min_side) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "weighted and unweighted subsets need at least " + std::to_string(min_side) +
                    " symbols each");
  }
}

ConstructionResult assemble(std::string family,
                            std::vector<std::pair<std::string, std::size_t>> params,
                            const Alphabet& alphabet, std::size_t k,
                            const std::vector<Word>& language, const Plan& plan,
                            std::size_t count) {
  ConstructionResult r;
  r.family = std::move(family);
  r.params = std::move(params);
  r.sigma = alphabet.size();
  r.k = k;
  r.graph = restricted_graph(language, alphabet.size());
  r.circuits = shift_split_family(r.graph, alphabet, plan, count, r.provenance);
  r.words = detail::words_of(r.graph, r.circuits);
  certify_fixed_weight(r, language);
  return r;
}

}  // namespace

ConstructionResult construct_fixed_weight_orthogonal_db(const Alphabet& alphabet, std::size_t k,
                                                        std::size_t w) {
  require_split_alphabet(alphabet, 1);
  if (w < 1 || w > k || k < 2) {
    throw Error(ErrorCode::ParameterOutOfRange, "needs 1 <= w <= k and k >= 2");
  }
  const auto language = expand_language(LanguageSpec::weight_band(k, w - 1, w), alphabet);
  const auto g = restricted_graph(language, alphabet.size());
  Plan plan;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t wt = alphabet.weight(g.vertex(v).label.view());
    if (wt + 2 == w) {
      plan.split.emplace_back(v, Shift::W);
    } else if (wt == w) {
      plan.split.emplace_back(v, Shift::X);
    } else {
      plan.rewired.push_back(v);
    }
  }
  const std::size_t count = std::min(alphabet.weighted().size(), alphabet.unweighted().size());
  return assemble("fixed-weight orthogonal de Bruijn", {{"k", k}, {"w", w}}, alphabet, k,
                  language, plan, count);
}

bool fixed_weight_kautz_exists(std::size_t k, std::size_t w_min, std::size_t w_max) {
  if (w_min > w_max || w_max > k) return false;
  if (w_min == w_max) return w_min == 0 || w_min == k;
  return w_min <= 1 && w_max + 1 >= k;
}

std::size_t fixed_weight_kautz_count(std::size_t n_weighted, std::size_t n_unweighted,
                                     std::size_t k, std::size_t w_min, std::size_t w_max) {
  const std::size_t half = (n_weighted + n_unweighted - 1) / 2;
  if (w_min == 1 && w_max + 1 == k) return std::min({n_weighted, n_unweighted, half});
  if (w_min == 0 && w_max + 1 == k) return std::min(n_unweighted, half);
  if (w_min == 1 && w_max == k) return std::min(n_weighted, half);
  throw Error(ErrorCode::UnsupportedCase,
              "band [" + std::to_string(w_min) + "," + std::to_string(w_max) +
                  "] is not one of [1,k-1], [0,k-1], [1,k]");
}

ConstructionResult construct_fixed_weight_kautz_orthogonal(const Alphabet& alphabet,
                                                           std::size_t k, std::size_t w_min,
                                                           std::size_t w_max) {
  require_split_alphabet(alphabet, 2);
  if (k < 2) throw Error(ErrorCode::ParameterOutOfRange, "needs k >= 2");
  // at k = 2 the band [1,1] splits every vertex and leaves disjoint cycles
  if (k == 2 && w_min == 1 && w_max == 1) {
    throw Error(ErrorCode::ParameterOutOfRange, "band [1,k-1] needs k >= 3");
  }
  const std::size_t count = fixed_weight_kautz_count(alphabet.weighted().size(),
                                                     alphabet.unweighted().size(), k, w_min, w_max);
  const auto language =
      expand_language(LanguageSpec::kautz_weight_band(k, w_min, w_max), alphabet);
  const auto g = restricted_graph(language, alphabet.size(), GraphFamily::Kautz);
  // all-unweighted vertices take the W shift when weight 0 is excluded,
  // all-weighted vertices the X shift when weight k is excluded
  Plan plan;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t wt = alphabet.weight(g.vertex(v).label.view());
    if (wt == 0 && w_min == 1) {
      plan.split.emplace_back(v, Shift::W);
    } else if (wt + 1 == k && w_max + 1 == k) {
      plan.split.emplace_back(v, Shift::X);
    } else {
      plan.rewired.push_back(v);
    }
  }
  return assemble("fixed-weight orthogonal Kautz", {{"k", k}, {"w_min", w_min}, {"w_max", w_max}},
                  alphabet, k, language, plan, count);
}

}  // namespace orthodb

#include <string>

#include "certify.hpp"
#include "orthodb/constructions.hpp"
#include "orthodb/error.hpp"
#include "orthodb/language.hpp"
#include "orthodb/rewire.hpp"

namespace orthodb {

namespace {

std::string name(std::size_t i, std::size_t j) {
  return "C[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::string names(std::size_t from, std::size_t to) {
  std::string s;
  for (std::size_t i = from; i <= to; ++i) {
    if (!s.empty()) s += ", ";
    s += name(i, 1);
  }
  return s;
}

void certify_l_orthogonal(ConstructionResult& r, std::size_t ell, bool kautz) {
  using namespace oracle;
  for (std::size_t i = 0; i < r.circuits.size(); ++i) {
    detail::require(r, is_eulerian_circuit(r.graph, r.circuits[i]));
    detail::require(r, kautz ? is_kautz_word(r.words[i].view(), r.sigma, r.k)
                             : is_de_bruijn(r.words[i].view(), r.sigma, r.k));
  }
  const auto seqs = detail::sequences_of(r.words);
  detail::require(r, is_l_orthogonal(seqs, r.k, ell));
  detail::require(r, pair_usage_within(r.graph, r.circuits, ell));
}

}  // namespace

std::vector<std::vector<VertexId>> partition_vertices(const DirectedMultigraph& g,
                                                      std::size_t ell) {
  const std::size_t n = g.vertex_count();
  if (ell == 0 || ell > n) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "cannot split " + std::to_string(n) + " vertices into " + std::to_string(ell) +
                    " groups");
  }
  std::vector<std::vector<VertexId>> groups(ell);
  for (std::size_t gi = 0; gi < ell; ++gi) {
    for (VertexId v = gi * n / ell; v < (gi + 1) * n / ell; ++v) groups[gi].push_back(v);
  }
  return groups;
}

std::vector<Circuit> l_orthogonal_family(const DirectedMultigraph& g, const Circuit& seed,
                                         std::size_t ell,
                                         std::vector<std::string>* provenance) {
  const std::size_t delta = g.min_degree();
  if (delta < 3) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "minimum degree " + std::to_string(delta) + " < 3");
  }
  const auto groups = partition_vertices(g, ell);
  const bool conditioned = delta >= 4;
  const std::size_t rows = conditioned ? delta / 2 : 2;

  // c[i][j] with 1-based i, j as in the recursion
  std::vector<std::vector<Circuit>> c(rows + 1, std::vector<Circuit>(ell + 1));
  std::vector<std::string> trace;
  auto step = [&](std::size_t i, std::size_t j, std::size_t group, const Circuit& from,
                  std::size_t from_i, std::size_t from_j, std::size_t given_lo,
                  std::size_t given_hi) {
    const auto& vs = groups[group - 1];
    std::string line = name(i, j) + " = rewire V" + std::to_string(group) + " of " +
                       name(from_i, from_j);
    if (conditioned) {
      std::vector<Circuit> given;
      for (std::size_t r = given_lo; r <= given_hi; ++r) given.push_back(c[r][1]);
      c[i][j] = rewire_vertex_set(g, from, vs, given);
      line += " given " + names(given_lo, given_hi);
    } else {
      c[i][j] = rewire_vertex_set(g, from, vs);
    }
    trace.push_back(std::move(line));
  };

  c[1][1] = seed;
  trace.push_back(name(1, 1) + " = seed Eulerian circuit");
  for (std::size_t j = 2; j <= ell; ++j) step(1, j, j - 1, c[1][j - 1], 1, j - 1, 1, 1);
  for (std::size_t i = 2; i <= rows; ++i) {
    step(i, 1, ell, c[i - 1][ell], i - 1, ell, 1, i - 1);
    const std::size_t lo = i == rows ? 2 : 1;
    for (std::size_t j = 2; j <= ell; ++j) step(i, j, j - 1, c[i][j - 1], i, j - 1, lo, i);
  }

  std::vector<Circuit> out;
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= ell; ++j) out.push_back(c[i][j]);
  }
  // trace is row-major, like `out`
  if (provenance) *provenance = std::move(trace);
  return out;
}

namespace {

ConstructionResult l_orthogonal(DirectedMultigraph g, std::string family, std::size_t sigma,
                                std::size_t k, std::size_t ell,
                                const std::optional<std::vector<Symbol>>& seed_word,
                                bool kautz) {
  if (ell == 0 || ell > g.vertex_count()) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "ell must lie in [1, " + std::to_string(g.vertex_count()) + "]");
  }
  Circuit seed = seed_word ? word_to_circuit(g, *seed_word) : find_eulerian_circuit(g);
  if (seed.size() != g.arc_count()) {
    throw Error(ErrorCode::InvalidArgument, "seed word is not a full sequence of this graph");
  }
  ConstructionResult r;
  r.family = std::move(family);
  r.params = {{"sigma", sigma}, {"k", k}, {"ell", ell}};
  r.sigma = sigma;
  r.k = k;
  r.circuits = l_orthogonal_family(g, seed, ell, &r.provenance);
  r.words = detail::words_of(g, r.circuits);
  r.graph = std::move(g);
  certify_l_orthogonal(r, ell, kautz);
  return r;
}

}  // namespace

ConstructionResult construct_l_orthogonal_de_bruijn(std::size_t sigma, std::size_t k,
                                                    std::size_t ell,
                                                    std::optional<std::vector<Symbol>> seed_word) {
  if (sigma < 3 || k < 1) {
    throw Error(ErrorCode::ParameterOutOfRange, "needs sigma >= 3 and k >= 1");
  }
  return l_orthogonal(de_bruijn_graph(sigma, k), "l-orthogonal de Bruijn", sigma, k, ell,
                      seed_word, false);
}

ConstructionResult construct_l_orthogonal_kautz(std::size_t sigma, std::size_t k,
                                                std::size_t ell,
                                                std::optional<std::vector<Symbol>> seed_word) {
  if (sigma < 4 || k < 2) {
    throw Error(ErrorCode::ParameterOutOfRange, "needs sigma >= 4 and k >= 2");
  }
  return l_orthogonal(kautz_graph(sigma, k), "l-orthogonal Kautz", sigma, k, ell, seed_word,
                      true);
}

}  // namespace orthodb

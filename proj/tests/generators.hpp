#pragma once

// Seeded random generators shared by the property and acceptance binaries.
#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "orthodb/alphabet.hpp"
#include "orthodb/circuit.hpp"
#include "orthodb/language.hpp"

namespace orthodb::testgen {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline DirectedMultigraph random_graph(Rng& rng) {
  if (pick(rng, 0, 1) == 0) return de_bruijn_graph(pick(rng, 3, 5), pick(rng, 2, 3));
  return kautz_graph(pick(rng, 4, 6), pick(rng, 2, 3));
}

// Hierholzer over shuffled adjacency lists.
inline Circuit random_eulerian(const DirectedMultigraph& g, Rng& rng) {
  std::vector<std::vector<ArcId>> outs(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto o = g.out_arcs(v);
    outs[v].assign(o.begin(), o.end());
    std::shuffle(outs[v].begin(), outs[v].end(), rng);
  }
  std::vector<ArcId> circuit;
  std::vector<VertexId> at{g.arc(outs[0].back()).tail};
  // classic iterative form on vertices, recording the arc used to enter
  std::vector<ArcId> via{kNoArc};
  while (!at.empty()) {
    const VertexId v = at.back();
    if (!outs[v].empty()) {
      const ArcId a = outs[v].back();
      outs[v].pop_back();
      at.push_back(g.arc(a).head);
      via.push_back(a);
    } else {
      if (via.back() != kNoArc) circuit.push_back(via.back());
      at.pop_back();
      via.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return Circuit{std::move(circuit), g.hash()};
}

inline bool pairs_disjoint(const Wiring& x, const Wiring& y) {
  for (const auto& p : x.pairs) {
    if (std::find(y.pairs.begin(), y.pairs.end(), p) != y.pairs.end()) return false;
  }
  return true;
}

inline Alphabet random_weighted_alphabet(Rng& rng, std::size_t sigma, std::size_t min_side) {
  std::string tokens = "abcdefgh";
  tokens.resize(sigma);
  std::string shuffled = tokens;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const std::size_t nw = pick(rng, min_side, sigma - min_side);
  return Alphabet::from_tokens(tokens).with_weighted(shuffled.substr(0, nw));
}

}  // namespace orthodb::testgen

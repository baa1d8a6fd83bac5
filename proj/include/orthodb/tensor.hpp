#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "orthodb/graph.hpp"

namespace orthodb {

/// G1 x G2. Vertex (v1, v2) gets id v1 * |V2| + v2 and arc (a1, a2) gets id
/// a1 * |A2| + a2, so every pair of arcs yields exactly one product arc.
/// When both graphs label vertices with words of equal length, product labels
/// combine entrywise as q * sigma2 + r.
DirectedMultigraph tensor_product(const DirectedMultigraph& g1,
                                  const DirectedMultigraph& g2);

inline ArcId product_arc(const DirectedMultigraph& g2, ArcId a1, ArcId a2) {
  return a1 * g2.arc_count() + a2;
}
inline VertexId product_vertex(const DirectedMultigraph& g2, VertexId v1, VertexId v2) {
  return v1 * g2.vertex_count() + v2;
}

inline std::pair<Symbol, Symbol> split_symbol(Symbol s, std::size_t sigma2) {
  return {static_cast<Symbol>(s / sigma2), static_cast<Symbol>(s % sigma2)};
}
inline Symbol compose_symbol(Symbol q, Symbol r, std::size_t sigma2) {
  return static_cast<Symbol>(q * sigma2 + r);
}
std::vector<Symbol> compose_word(std::span<const Symbol> q, std::span<const Symbol> r,
                                 std::size_t sigma2);

/// Entrywise quotient/remainder map G_{sigma1*sigma2,k} -> G_{sigma1,k} x G_{sigma2,k}.
struct DigitIsomorphism {
  std::size_t sigma1 = 0;
  std::size_t sigma2 = 0;
  std::size_t k = 0;
  std::vector<VertexId> vertex_map;  // composite vertex -> product vertex
  std::vector<ArcId> arc_map;        // composite arc -> product arc
  std::vector<VertexId> vertex_inverse;
  std::vector<ArcId> arc_inverse;
};

DigitIsomorphism de_bruijn_digit_isomorphism(std::size_t sigma1, std::size_t sigma2,
                                             std::size_t k);

}  // namespace orthodb

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orthodb/circuit.hpp"

namespace orthodb {

/// Graph obtained by splitting vertices along wirings. Arc ids are those of
/// the original graph; only tails and heads move.
struct SplitGraph {
  DirectedMultigraph graph;
  std::vector<VertexId> origin;  // split vertex -> original vertex
  std::uint64_t original_hash = 0;
};

/// Replaces each wired vertex by one vertex per wiring pair, with that pair's
/// in-arc as its only in-arc and out-arc as its only out-arc. Each wiring
/// must be a perfect matching at its vertex.
SplitGraph split_vertices(const DirectedMultigraph& g, std::span<const Wiring> wirings);
SplitGraph split_vertex(const DirectedMultigraph& g, const Wiring& wiring);

/// The same arc sequence read on the original graph.
Circuit merge_circuit(const SplitGraph& split, const Circuit& c);

}  // namespace orthodb

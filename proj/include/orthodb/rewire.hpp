#pragma once

#include <span>
#include <utility>
#include <vector>

#include "orthodb/circuit.hpp"

namespace orthodb {

/// Eulerian circuit whose wiring at `v` shares no pair with that of `c` and
/// whose wiring agrees with `c` at every other vertex. Needs deg(v) >= 3.
Circuit rewire(const DirectedMultigraph& g, const Circuit& c, VertexId v);

/// As rewire, but the new wiring at `v` avoids the wirings of every circuit in
/// `forbidden` (t of them, t <= floor(deg(v)/2) - 1). A list whose wirings at
/// `v` all coincide with that of `c` reduces to rewire.
Circuit rewire_given(const DirectedMultigraph& g, const Circuit& c, VertexId v,
                     std::span<const Circuit> forbidden);

/// Lowest-level search: rewire `v` avoiding an explicit set of (in, out)
/// pairs. Throws SearchExhausted when no single-cycle wiring exists.
Circuit rewire_avoiding(const DirectedMultigraph& g, const Circuit& c, VertexId v,
                        std::span<const std::pair<ArcId, ArcId>> forbidden_pairs);

/// rewire_given applied to each vertex in order, feeding each result forward.
Circuit rewire_vertex_set(const DirectedMultigraph& g, const Circuit& c,
                          std::span<const VertexId> vertices,
                          std::span<const Circuit> forbidden);

/// rewire applied to each vertex in order; the result differs from `c` in
/// its wiring at every listed vertex.
Circuit rewire_vertex_set(const DirectedMultigraph& g, const Circuit& c,
                          std::span<const VertexId> vertices);

}  // namespace orthodb

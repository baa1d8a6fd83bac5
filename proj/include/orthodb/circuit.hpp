#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "orthodb/graph.hpp"

namespace orthodb {

inline constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();

/// Cyclic sequence of arc ids on the graph identified by `graph_hash`.
struct Circuit {
  std::vector<ArcId> arcs;
  std::uint64_t graph_hash = 0;

  std::size_t size() const noexcept { return arcs.size(); }
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Matching between the in-arcs and out-arcs of one vertex, sorted by in-arc.
/// A loop at the vertex appears on both sides.
struct Wiring {
  VertexId vertex = 0;
  std::vector<std::pair<ArcId, ArcId>> pairs;

  friend bool operator==(const Wiring&, const Wiring&) = default;
};

/// Arc successor map; one wiring per vertex when complete.
class TransitionSystem {
 public:
  explicit TransitionSystem(const DirectedMultigraph& g);

  void set_wiring(const Wiring& w);
  Wiring wiring(VertexId v) const;
  ArcId next(ArcId a) const { return next_.at(a); }
  std::span<const ArcId> successors() const noexcept { return next_; }
  bool complete() const;
  /// Number of orbits of the successor permutation. Requires complete().
  std::size_t cycle_count() const;

 private:
  const DirectedMultigraph* graph_;
  std::vector<ArcId> next_;
};

/// True if consecutive arcs (cyclically) meet head-to-tail.
bool is_closed_walk(const DirectedMultigraph& g, std::span<const ArcId> arcs);

/// Rotates so the smallest arc id comes first.
Circuit canonical_rotation(Circuit c);

/// Hierholzer's algorithm taking the smallest unused out-arc at every step.
/// Throws DegreeMismatch (details = offending vertices) or NotConnected.
Circuit find_eulerian_circuit(const DirectedMultigraph& g);

/// Circular word whose i-th window of length k is the k-word of arc i.
Word circuit_to_word(const DirectedMultigraph& g, const Circuit& c);

/// Walk whose arcs are the successive length-k windows of a circular word.
/// Requires unique vertex labels.
Circuit word_to_circuit(const DirectedMultigraph& g, std::span<const Symbol> word);

Wiring wiring_of(const DirectedMultigraph& g, VertexId v, const Circuit& c);
TransitionSystem transition_system_of(const DirectedMultigraph& g, const Circuit& c);

/// Follows the successor permutation from arc 0; throws MultipleCycles
/// (details = {orbit count}) unless it is a single cycle.
Circuit circuit_from_transition_system(const DirectedMultigraph& g,
                                       const TransitionSystem& ts);

/// Lifts an Eulerian circuit on an order-k graph to the Hamiltonian cycle
/// on the order-(k+1) graph of the same family. Both read the same word.
Circuit hamiltonian_from_eulerian(const DirectedMultigraph& low, const Circuit& c,
                                  const DirectedMultigraph& high);
Circuit eulerian_from_hamiltonian(const DirectedMultigraph& high, const Circuit& h,
                                  const DirectedMultigraph& low);

}  // namespace orthodb

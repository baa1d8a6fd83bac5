#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthodb/word.hpp"

namespace orthodb {

enum class GraphFamily { DeBruijn, Kautz, Restricted, Product, Split };

const char* to_string(GraphFamily f) noexcept;

struct GraphInfo {
  GraphFamily family = GraphFamily::Restricted;
  std::size_t sigma = 0;  // alphabet size of vertex and arc labels
  std::size_t order = 0;  // k: length of the word induced by an arc
};

/// Directed multigraph whose vertices carry word labels and whose arcs carry
/// the symbol that extends the tail label. Arc ids are dense in [0, |A|) and
/// adjacency lists are sorted by arc id. Immutable after construction.
class DirectedMultigraph {
 public:
  struct Vertex {
    Word label;
    /// Set on vertices created by splitting: first symbol of the k-word of
    /// the unique in-arc.
    std::optional<Symbol> split_tag;
  };

  struct Arc {
    ArcId id;
    VertexId tail;
    VertexId head;
    Symbol label;
  };

  DirectedMultigraph() = default;
  DirectedMultigraph(GraphInfo info, std::vector<Vertex> vertices,
                     std::vector<Arc> arcs);

  const GraphInfo& info() const noexcept { return info_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Arc& arc(ArcId a) const { return arcs_.at(a); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const ArcId> out_arcs(VertexId v) const { return out_.at(v); }
  std::span<const ArcId> in_arcs(VertexId v) const { return in_.at(v); }
  std::size_t out_degree(VertexId v) const { return out_.at(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_.at(v).size(); }
  bool is_loop(ArcId a) const { return arcs_.at(a).tail == arcs_.at(a).head; }
  std::size_t loop_count() const;

  /// Vertex with the given label; only meaningful when labels are unique
  /// (every family except split graphs).
  std::optional<VertexId> find_vertex(std::span<const Symbol> label) const;
  std::optional<ArcId> find_arc(VertexId tail, Symbol label) const;
  /// Arc inducing the given k-word (tail label followed by arc label).
  std::optional<ArcId> find_arc_by_word(std::span<const Symbol> word) const;

  /// Tail label extended by the arc label.
  std::vector<Symbol> arc_word(ArcId a) const;

  /// FNV-1a digest of the vertex count and arc list; identifies the graph a
  /// circuit lives on.
  std::uint64_t hash() const noexcept { return hash_; }

  /// Minimum over vertices of in-degree (graphs with balanced degrees).
  std::size_t min_degree() const;

 private:
  GraphInfo info_;
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
  std::map<std::vector<Symbol>, VertexId> index_;
  std::uint64_t hash_ = 0;
};

}  // namespace orthodb

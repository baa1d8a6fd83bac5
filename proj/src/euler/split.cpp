#include "orthodb/split.hpp"

#include <algorithm>
#include <string>

#include "orthodb/error.hpp"

namespace orthodb {

namespace {

void require_perfect(const DirectedMultigraph& g, const Wiring& w) {
  auto ins = g.in_arcs(w.vertex);
  auto outs = g.out_arcs(w.vertex);
  std::vector<ArcId> a, b;
  for (auto [in, out] : w.pairs) {
    a.push_back(in);
    b.push_back(out);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (!std::equal(a.begin(), a.end(), ins.begin(), ins.end()) ||
      !std::equal(b.begin(), b.end(), outs.begin(), outs.end())) {
    throw Error(ErrorCode::InvalidArgument,
                "wiring at vertex " + std::to_string(w.vertex) + " is not a perfect matching",
                {w.vertex});
  }
}

}  // namespace

SplitGraph split_vertices(const DirectedMultigraph& g, std::span<const Wiring> wirings) {
  std::vector<const Wiring*> by_vertex(g.vertex_count(), nullptr);
  for (const auto& w : wirings) {
    if (w.vertex >= g.vertex_count()) {
      throw Error(ErrorCode::IndexOutOfRange, "wiring vertex out of range");
    }
    if (by_vertex[w.vertex]) {
      throw Error(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(w.vertex) + " wired twice");
    }
    require_perfect(g, w);
    by_vertex[w.vertex] = &w;
  }

  SplitGraph out;
  out.original_hash = g.hash();
  std::vector<DirectedMultigraph::Vertex> vertices;
  std::vector<DirectedMultigraph::Arc> arcs(g.arcs().begin(), g.arcs().end());
  for (auto& a : arcs) {
    a.tail = a.head = kNoArc;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!by_vertex[v]) {
      const VertexId nv = vertices.size();
      vertices.push_back(g.vertex(v));
      out.origin.push_back(v);
      for (ArcId a : g.out_arcs(v)) arcs[a].tail = nv;
      for (ArcId a : g.in_arcs(v)) arcs[a].head = nv;
      continue;
    }
    auto pairs = by_vertex[v]->pairs;
    std::sort(pairs.begin(), pairs.end());
    for (auto [in, o] : pairs) {
      const VertexId nv = vertices.size();
      vertices.push_back({g.vertex(v).label, g.arc_word(in).front()});
      out.origin.push_back(v);
      arcs[in].head = nv;
      arcs[o].tail = nv;
    }
  }
  GraphInfo info = g.info();
  info.family = GraphFamily::Split;
  out.graph = DirectedMultigraph(info, std::move(vertices), std::move(arcs));
  return out;
}

SplitGraph split_vertex(const DirectedMultigraph& g, const Wiring& wiring) {
  return split_vertices(g, std::span<const Wiring>(&wiring, 1));
}

Circuit merge_circuit(const SplitGraph& split, const Circuit& c) {
  if (c.size() != split.graph.arc_count() || !is_closed_walk(split.graph, c.arcs)) {
    throw Error(ErrorCode::InvalidArgument, "circuit is not Eulerian on the split graph");
  }
  return Circuit{c.arcs, split.original_hash};
}

}  // namespace orthodb

#include "orthodb/circuit.hpp"

#include <algorithm>
#include <string>

#include "orthodb/error.hpp"

namespace orthodb {

TransitionSystem::TransitionSystem(const DirectedMultigraph& g)
    : graph_(&g), next_(g.arc_count(), kNoArc) {}

void TransitionSystem::set_wiring(const Wiring& w) {
  for (auto [in, out] : w.pairs) {
    if (graph_->arc(in).head != w.vertex || graph_->arc(out).tail != w.vertex) {
      throw Error(ErrorCode::InvalidArgument,
                  "wiring pair is not incident to vertex " + std::to_string(w.vertex));
    }
    next_[in] = out;
  }
}

Wiring TransitionSystem::wiring(VertexId v) const {
  Wiring w{v, {}};
  for (ArcId in : graph_->in_arcs(v)) {
    if (next_[in] != kNoArc) w.pairs.emplace_back(in, next_[in]);
  }
  return w;
}

bool TransitionSystem::complete() const {
  std::vector<bool> hit(next_.size(), false);
  for (ArcId a : next_) {
    if (a == kNoArc || hit[a]) return false;
    hit[a] = true;
  }
  return true;
}

std::size_t TransitionSystem::cycle_count() const {
  std::vector<bool> seen(next_.size(), false);
  std::size_t cycles = 0;
  for (ArcId start = 0; start < next_.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (ArcId a = start; !seen[a]; a = next_[a]) seen[a] = true;
  }
  return cycles;
}

bool is_closed_walk(const DirectedMultigraph& g, std::span<const ArcId> arcs) {
  if (arcs.empty()) return false;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i] >= g.arc_count()) return false;
    const ArcId nxt = arcs[(i + 1) % arcs.size()];
    if (nxt >= g.arc_count() || g.arc(arcs[i]).head != g.arc(nxt).tail) return false;
  }
  return true;
}

Circuit canonical_rotation(Circuit c) {
  if (!c.arcs.empty()) {
    auto it = std::min_element(c.arcs.begin(), c.arcs.end());
    std::rotate(c.arcs.begin(), it, c.arcs.end());
  }
  return c;
}

Circuit find_eulerian_circuit(const DirectedMultigraph& g) {
  std::vector<std::size_t> bad;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.in_degree(v) != g.out_degree(v)) bad.push_back(v);
  }
  if (!bad.empty()) {
    std::string names;
    for (VertexId v : bad) {
      if (!names.empty()) names += ", ";
      names += "vertex " + std::to_string(v) + " (in " + std::to_string(g.in_degree(v)) +
               ", out " + std::to_string(g.out_degree(v)) + ")";
    }
    throw Error(ErrorCode::DegreeMismatch, names, bad);
  }
  Circuit result{{}, g.hash()};
  if (g.arc_count() == 0) return result;

  // Strong connectivity on non-isolated vertices: with balanced degrees,
  // forward reachability from one vertex suffices, but check both ways.
  const VertexId root = g.arc(0).tail;
  auto reach = [&](bool forward) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (ArcId a : forward ? g.out_arcs(v) : g.in_arcs(v)) {
        VertexId u = forward ? g.arc(a).head : g.arc(a).tail;
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    return seen;
  };
  const auto fwd = reach(true);
  const auto bwd = reach(false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) > 0 && (!fwd[v] || !bwd[v])) {
      throw Error(ErrorCode::NotConnected,
                  "vertex " + std::to_string(v) + " is not strongly connected to vertex " +
                      std::to_string(root),
                  {v});
    }
  }

  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  std::vector<VertexId> vstack{root};
  std::vector<ArcId> astack;
  std::vector<ArcId> order;
  order.reserve(g.arc_count());
  while (!vstack.empty()) {
    const VertexId v = vstack.back();
    auto outs = g.out_arcs(v);
    if (cursor[v] < outs.size()) {
      const ArcId a = outs[cursor[v]++];
      vstack.push_back(g.arc(a).head);
      astack.push_back(a);
    } else {
      vstack.pop_back();
      if (!astack.empty()) {
        order.push_back(astack.back());
        astack.pop_back();
      }
    }
  }
  std::reverse(order.begin(), order.end());
  result.arcs = std::move(order);
  return canonical_rotation(std::move(result));
}

Word circuit_to_word(const DirectedMultigraph& g, const Circuit& c) {
  Word w;
  w.circular = true;
  w.entries.reserve(c.size());
  for (ArcId a : c.arcs) w.entries.push_back(g.arc_word(a).front());
  return w;
}

Circuit word_to_circuit(const DirectedMultigraph& g, std::span<const Symbol> word) {
  const std::size_t k = g.info().order;
  if (word.size() < 1 || k == 0) {
    throw Error(ErrorCode::InvalidArgument, "word_to_circuit needs a nonempty word and k >= 1");
  }
  Circuit c{{}, g.hash()};
  c.arcs.reserve(word.size());
  std::vector<Symbol> window(k);
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) window[j] = word[(i + j) % word.size()];
    auto a = g.find_arc_by_word(window);
    if (!a) {
      throw Error(ErrorCode::InvalidArgument,
                  "window at position " + std::to_string(i) + " is not an arc of the graph");
    }
    c.arcs.push_back(*a);
  }
  return c;
}

Wiring wiring_of(const DirectedMultigraph& g, VertexId v, const Circuit& c) {
  Wiring w{v, {}};
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ArcId a = c.arcs[i];
    if (g.arc(a).head == v) w.pairs.emplace_back(a, c.arcs[(i + 1) % n]);
  }
  std::sort(w.pairs.begin(), w.pairs.end());
  return w;
}

TransitionSystem transition_system_of(const DirectedMultigraph& g, const Circuit& c) {
  if (c.size() != g.arc_count() || !is_closed_walk(g, c.arcs)) {
    throw Error(ErrorCode::InvalidArgument, "circuit is not Eulerian on this graph");
  }
  TransitionSystem ts(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) ts.set_wiring(wiring_of(g, v, c));
  return ts;
}

Circuit circuit_from_transition_system(const DirectedMultigraph& g,
                                       const TransitionSystem& ts) {
  if (!ts.complete()) {
    throw Error(ErrorCode::InvalidArgument, "transition system is incomplete");
  }
  const std::size_t cycles = ts.cycle_count();
  if (cycles != 1) {
    throw Error(ErrorCode::MultipleCycles,
                "transition system splits into " + std::to_string(cycles) + " cycles",
                {cycles});
  }
  Circuit c{{}, g.hash()};
  if (g.arc_count() == 0) return c;
  c.arcs.reserve(g.arc_count());
  ArcId a = 0;
  do {
    c.arcs.push_back(a);
    a = ts.next(a);
  } while (a != 0);
  return c;
}

Circuit hamiltonian_from_eulerian(const DirectedMultigraph& low, const Circuit& c,
                                  const DirectedMultigraph& high) {
  if (high.info().order != low.info().order + 1) {
    throw Error(ErrorCode::InvalidArgument, "target graph must have order k+1");
  }
  Circuit h{{}, high.hash()};
  h.arcs.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto word = low.arc_word(c.arcs[i]);
    word.push_back(low.arc(c.arcs[(i + 1) % c.size()]).label);
    auto a = high.find_arc_by_word(word);
    if (!a) throw Error(ErrorCode::InvalidArgument, "lifted arc missing from target graph");
    h.arcs.push_back(*a);
  }
  return h;
}

Circuit eulerian_from_hamiltonian(const DirectedMultigraph& high, const Circuit& h,
                                  const DirectedMultigraph& low) {
  if (high.info().order != low.info().order + 1) {
    throw Error(ErrorCode::InvalidArgument, "source graph must have order k+1");
  }
  Circuit c{{}, low.hash()};
  c.arcs.reserve(h.size());
  for (ArcId a : h.arcs) {
    auto arc = low.find_arc_by_word(high.vertex(high.arc(a).tail).label.entries);
    if (!arc) throw Error(ErrorCode::InvalidArgument, "vertex word is not an arc of the target");
    c.arcs.push_back(*arc);
  }
  return c;
}

}  // namespace orthodb

#include "orthodb/rewire.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "orthodb/error.hpp"

namespace orthodb {

namespace {

void require_eulerian(const DirectedMultigraph& g, const Circuit& c, const char* what) {
  if (c.size() != g.arc_count() || !is_closed_walk(g, c.arcs)) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not Eulerian on this graph");
  }
}

// Depth-first search over matchings in -> out at one vertex. Outside `v`
// the successor map is fixed, so out-arc o runs along a segment to the
// in-arc seg_end[o]; closing the wiring yields the permutation
// o -> pick[seg_end[o]] on out-arcs, which must be one d-cycle.
struct MatchingSearch {
  std::size_t d;
  std::vector<std::size_t> in_of_seg;                // out index -> in index ending its segment
  std::vector<std::vector<bool>> banned;             // [in][out]
  std::vector<std::size_t> pick;                     // in index -> out index
  std::vector<std::size_t> succ;                     // out index -> out index
  std::vector<bool> used;
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool closes_early(std::size_t from, std::size_t to) const {
    std::size_t x = to;
    std::size_t steps = 1;
    while (succ[x] != kUnset) {
      x = succ[x];
      ++steps;
    }
    return x == from && steps < d;
  }

  bool run(std::size_t i) {
    if (i == d) return true;
    // out-arc whose segment ends at in-arc i
    const std::size_t from = in_of_seg[i];
    for (std::size_t o = 0; o < d; ++o) {
      if (used[o] || banned[i][o]) continue;
      if (closes_early(from, o)) continue;
      pick[i] = o;
      used[o] = true;
      succ[from] = o;
      if (run(i + 1)) return true;
      succ[from] = kUnset;
      used[o] = false;
    }
    return false;
  }
};

}  // namespace

Circuit rewire_avoiding(const DirectedMultigraph& g, const Circuit& c, VertexId v,
                        std::span<const std::pair<ArcId, ArcId>> forbidden_pairs) {
  require_eulerian(g, c, "circuit");
  TransitionSystem ts = transition_system_of(g, c);
  const auto ins = g.in_arcs(v);
  const auto outs = g.out_arcs(v);
  const std::size_t d = ins.size();
  auto in_index = [&](ArcId a) {
    return static_cast<std::size_t>(std::lower_bound(ins.begin(), ins.end(), a) - ins.begin());
  };
  auto out_index = [&](ArcId a) {
    return static_cast<std::size_t>(std::lower_bound(outs.begin(), outs.end(), a) - outs.begin());
  };

  MatchingSearch s{d,
                   std::vector<std::size_t>(d),
                   std::vector<std::vector<bool>>(d, std::vector<bool>(d, false)),
                   std::vector<std::size_t>(d, MatchingSearch::kUnset),
                   std::vector<std::size_t>(d, MatchingSearch::kUnset),
                   std::vector<bool>(d, false)};
  for (std::size_t o = 0; o < d; ++o) {
    ArcId a = outs[o];
    while (g.arc(a).head != v) a = ts.next(a);
    s.in_of_seg[in_index(a)] = o;
  }
  for (auto [in, out] : forbidden_pairs) {
    if (g.arc(in).head != v || g.arc(out).tail != v) continue;
    s.banned[in_index(in)][out_index(out)] = true;
  }
  if (!s.run(0)) {
    throw Error(ErrorCode::SearchExhausted,
                "no admissible wiring at vertex " + std::to_string(v), {v});
  }
  Wiring w{v, {}};
  for (std::size_t i = 0; i < d; ++i) w.pairs.emplace_back(ins[i], outs[s.pick[i]]);
  ts.set_wiring(w);
  return circuit_from_transition_system(g, ts);
}

Circuit rewire(const DirectedMultigraph& g, const Circuit& c, VertexId v) {
  if (v >= g.vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  if (g.in_degree(v) < 3) {
    throw Error(ErrorCode::InsufficientDegree,
                "vertex " + std::to_string(v) + " has degree " +
                    std::to_string(g.in_degree(v)) + " < 3",
                {v});
  }
  const Wiring own = wiring_of(g, v, c);
  return rewire_avoiding(g, c, v, own.pairs);
}

Circuit rewire_given(const DirectedMultigraph& g, const Circuit& c, VertexId v,
                     std::span<const Circuit> forbidden) {
  if (v >= g.vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  require_eulerian(g, c, "circuit");
  for (const auto& f : forbidden) require_eulerian(g, f, "forbidden circuit");

  const Wiring own = wiring_of(g, v, c);
  std::set<std::pair<ArcId, ArcId>> pairs;
  bool all_own = !forbidden.empty();
  for (const auto& f : forbidden) {
    const Wiring w = wiring_of(g, v, f);
    all_own = all_own && w == own;
    pairs.insert(w.pairs.begin(), w.pairs.end());
  }
  if (all_own) return rewire(g, c, v);

  const std::size_t deg = g.in_degree(v);
  const std::size_t bound = deg / 2 >= 1 ? deg / 2 - 1 : 0;
  if (forbidden.size() > bound) {
    throw Error(ErrorCode::TooManyForbidden,
                std::to_string(forbidden.size()) + " forbidden circuits at vertex " +
                    std::to_string(v) + " of degree " + std::to_string(deg) +
                    " (at most " + std::to_string(bound) + ")",
                {v});
  }
  std::vector<std::pair<ArcId, ArcId>> list(pairs.begin(), pairs.end());
  return rewire_avoiding(g, c, v, list);
}

Circuit rewire_vertex_set(const DirectedMultigraph& g, const Circuit& c,
                          std::span<const VertexId> vertices,
                          std::span<const Circuit> forbidden) {
  Circuit cur = c;
  for (VertexId v : vertices) cur = rewire_given(g, cur, v, forbidden);
  return cur;
}

Circuit rewire_vertex_set(const DirectedMultigraph& g, const Circuit& c,
                          std::span<const VertexId> vertices) {
  Circuit cur = c;
  for (VertexId v : vertices) cur = rewire(g, cur, v);
  return cur;
}

}  // namespace orthodb

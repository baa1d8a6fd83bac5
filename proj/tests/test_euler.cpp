#include <algorithm>
#include <set>

#include "doctest.h"
#include "orthodb/alphabet.hpp"
#include "orthodb/circuit.hpp"
#include "orthodb/error.hpp"
#include "orthodb/language.hpp"
#include "orthodb/rewire.hpp"
#include "orthodb/split.hpp"

using namespace orthodb;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected orthodb::Error");
  return ErrorCode::InvalidArgument;
}

Circuit circuit_of(const DirectedMultigraph& g, const Alphabet& a, std::string_view word) {
  return word_to_circuit(g, a.parse(word));
}

std::string word_of(const DirectedMultigraph& g, const Alphabet& a, const Circuit& c) {
  return a.render(circuit_to_word(g, c).entries);
}

bool disjoint(const Wiring& x, const Wiring& y) {
  for (const auto& p : x.pairs) {
    if (std::find(y.pairs.begin(), y.pairs.end(), p) != y.pairs.end()) return false;
  }
  return true;
}

bool is_eulerian(const DirectedMultigraph& g, const Circuit& c) {
  if (c.size() != g.arc_count() || !is_closed_walk(g, c.arcs)) return false;
  std::vector<ArcId> s = c.arcs;
  std::sort(s.begin(), s.end());
  for (ArcId a = 0; a < s.size(); ++a) {
    if (s[a] != a) return false;
  }
  return true;
}

void check_rewire_post(const DirectedMultigraph& g, const Circuit& before, const Circuit& after,
                       VertexId v) {
  CHECK(is_eulerian(g, after));
  CHECK(disjoint(wiring_of(g, v, after), wiring_of(g, v, before)));
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u != v) CHECK(wiring_of(g, u, after) == wiring_of(g, u, before));
  }
}

}  // namespace

TEST_CASE("eulerian circuits on de Bruijn graphs") {
  const auto a3 = Alphabet::numeric(3);
  const auto g = de_bruijn_graph(3, 2);
  const auto c = find_eulerian_circuit(g);
  CHECK(is_eulerian(g, c));
  CHECK(c.arcs.front() == 0);
  CHECK(c.graph_hash == g.hash());
  // deterministic smallest-arc-first traversal
  CHECK(word_of(g, a3, c) == "001021122");
  CHECK(find_eulerian_circuit(g) == c);

  for (std::size_t s = 2; s <= 5; ++s) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto h = de_bruijn_graph(s, k);
      if (h.arc_count() > 5000) continue;
      CHECK(is_eulerian(h, find_eulerian_circuit(h)));
    }
  }
  for (std::size_t s = 3; s <= 5; ++s) {
    const auto h = kautz_graph(s, 3);
    CHECK(is_eulerian(h, find_eulerian_circuit(h)));
  }

  const auto loop = de_bruijn_graph(2, 1);
  const DirectedMultigraph one({GraphFamily::Restricted, 1, 1}, {{Word{}, std::nullopt}},
                               {{0, 0, 0, 0}});
  const auto lc = find_eulerian_circuit(one);
  CHECK(lc.arcs == std::vector<ArcId>{0});
  CHECK(circuit_to_word(one, lc).entries == std::vector<Symbol>{0});
  CHECK(find_eulerian_circuit(loop).arcs == std::vector<ArcId>{0, 1});
}

TEST_CASE("eulerian circuit errors") {
  const auto dna = Alphabet::dna();
  const auto g = restricted_graph(expand_language(LanguageSpec::kautz_weight_band(3, 1, 1), dna), 4);
  try {
    find_eulerian_circuit(g);
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
    const VertexId ca = *g.find_vertex(dna.parse("CA"));
    const auto& bad = e.details();
    CHECK(std::find(bad.begin(), bad.end(), ca) != bad.end());
  }

  // two disjoint loops on separate vertices
  const DirectedMultigraph two({GraphFamily::Restricted, 2, 1},
                               {{Word{0}, std::nullopt}, {Word{1}, std::nullopt}},
                               {{0, 0, 0, 0}, {1, 1, 1, 1}});
  CHECK(code_of([&] { find_eulerian_circuit(two); }) == ErrorCode::NotConnected);
}

TEST_CASE("circuit to word and back") {
  const auto a3 = Alphabet::numeric(3);
  const auto g = de_bruijn_graph(3, 2);
  const auto c = circuit_of(g, a3, "012002211");
  REQUIRE(is_eulerian(g, c));
  std::vector<VertexId> tails;
  for (ArcId x : c.arcs) tails.push_back(g.arc(x).tail);
  CHECK(tails == std::vector<VertexId>{0, 1, 2, 0, 0, 2, 2, 1, 1});
  CHECK(word_of(g, a3, c) == "012002211");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto w = circuit_to_word(g, c);
    CHECK(g.arc_word(c.arcs[i]) == std::vector<Symbol>{w[i], w[(i + 1) % w.size()]});
  }

  // lift to order 3
  const auto g3 = de_bruijn_graph(3, 3);
  const auto h = hamiltonian_from_eulerian(g, c, g3);
  std::vector<std::string> path;
  for (ArcId x : h.arcs) path.push_back(a3.render(g3.vertex(g3.arc(x).tail).label.entries));
  CHECK(path == std::vector<std::string>{"01", "12", "20", "00", "02", "22", "21", "11", "10"});
  CHECK(word_of(g3, a3, h) == "012002211");
  CHECK(eulerian_from_hamiltonian(g3, h, g) == c);

  const auto dna = Alphabet::dna();
  const auto k2 = kautz_graph(4, 2);
  const auto k3 = kautz_graph(4, 3);
  const auto kc = circuit_of(k2, dna, "ATCGAGCTGTAC");
  REQUIRE(is_eulerian(k2, kc));
  const auto kh = hamiltonian_from_eulerian(k2, kc, k3);
  std::vector<std::string> kpath;
  for (ArcId x : kh.arcs) kpath.push_back(dna.render(k3.vertex(k3.arc(x).tail).label.entries));
  CHECK(kpath == std::vector<std::string>{"AT", "TC", "CG", "GA", "AG", "GC", "CT", "TG", "GT",
                                          "TA", "AC", "CA"});
  CHECK(eulerian_from_hamiltonian(k3, kh, k2) == kc);

  CHECK(code_of([&] { word_to_circuit(kautz_graph(4, 2), dna.parse("AAT")); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("wirings and transition systems") {
  const auto a3 = Alphabet::numeric(3);
  const auto g = de_bruijn_graph(3, 2);
  const auto c = circuit_of(g, a3, "012002211");
  // arcs are ranks of their 2-words: 10 -> 3, 20 -> 6, 00 -> 0, 01 -> 1, 02 -> 2
  const Wiring w0 = wiring_of(g, 0, c);
  CHECK(w0.pairs == std::vector<std::pair<ArcId, ArcId>>{{0, 2}, {3, 1}, {6, 0}});

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto w = wiring_of(g, v, c);
    CHECK(w.pairs.size() == g.in_degree(v));
  }
  const auto ts = transition_system_of(g, c);
  CHECK(ts.complete());
  CHECK(ts.cycle_count() == 1);
  const auto back = circuit_from_transition_system(g, ts);
  CHECK(back == canonical_rotation(c));

  const auto c12 = circuit_of(g, a3, "012022110");
  const auto c12back = circuit_from_transition_system(g, transition_system_of(g, c12));
  CHECK(c12back == canonical_rotation(c12));
  CHECK(word_of(g, a3, c12back) == "001202211");

  // pairing every loop with itself strands the loops
  const auto g22 = de_bruijn_graph(2, 2);
  TransitionSystem self(g22);
  self.set_wiring({0, {{0, 0}, {2, 1}}});
  self.set_wiring({1, {{1, 2}, {3, 3}}});
  try {
    circuit_from_transition_system(g22, self);
    FAIL("expected MultipleCycles");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MultipleCycles);
    CHECK(e.details() == std::vector<std::size_t>{3});
  }
  CHECK(code_of([&] { circuit_from_transition_system(g22, TransitionSystem(g22)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { TransitionSystem t(g22); t.set_wiring({0, {{1, 0}}}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("rewire at a single vertex") {
  const auto a3 = Alphabet::numeric(3);
  const auto g = de_bruijn_graph(3, 2);
  const auto c = circuit_of(g, a3, "012002211");
  for (VertexId v = 0; v < 3; ++v) check_rewire_post(g, c, rewire(g, c, v), v);

  const auto g22 = de_bruijn_graph(2, 2);
  CHECK(code_of([&] { rewire(g22, find_eulerian_circuit(g22), 0); }) ==
        ErrorCode::InsufficientDegree);

  // every vertex of larger graphs, from every Eulerian start we build
  for (auto [s, k] : {std::pair{4, 2}, {3, 3}, {5, 2}, {4, 3}}) {
    const auto h = de_bruijn_graph(s, k);
    const auto e = find_eulerian_circuit(h);
    for (VertexId v = 0; v < h.vertex_count(); ++v) check_rewire_post(h, e, rewire(h, e, v), v);
  }
}

TEST_CASE("rewire given forbidden circuits") {
  const auto a3 = Alphabet::numeric(3);
  const auto g = de_bruijn_graph(3, 2);
  const auto c11 = circuit_of(g, a3, "012002211");
  const auto c12 = circuit_of(g, a3, "012022110");
  CHECK(wiring_of(g, 1, c11) == wiring_of(g, 1, c12));
  CHECK(wiring_of(g, 2, c11) == wiring_of(g, 2, c12));
  CHECK(disjoint(wiring_of(g, 0, c11), wiring_of(g, 0, c12)));

  const std::vector<Circuit> given{c11};
  const std::vector<VertexId> vs{1, 2};
  const auto c21 = rewire_vertex_set(g, c12, vs, given);
  CHECK(is_eulerian(g, c21));
  for (VertexId v : vs) {
    CHECK(disjoint(wiring_of(g, v, c21), wiring_of(g, v, c11)));
  }
  CHECK(wiring_of(g, 0, c21) == wiring_of(g, 0, c12));

  const std::vector<VertexId> rev{2, 1};
  const auto c21r = rewire_vertex_set(g, c12, rev, given);
  CHECK(is_eulerian(g, c21r));
  for (VertexId v : vs) CHECK(disjoint(wiring_of(g, v, c21r), wiring_of(g, v, c11)));

  CHECK(rewire_vertex_set(g, c12, std::vector<VertexId>{}, given) == c12);

  // forbidding the circuit's own wiring behaves like rewire
  check_rewire_post(g, c11, rewire_given(g, c11, 0, std::vector<Circuit>{c11}), 0);

  // a foreign wiring at a degree-3 vertex exceeds the bound
  CHECK(code_of([&] { rewire_given(g, c11, 0, std::vector<Circuit>{c12}); }) ==
        ErrorCode::TooManyForbidden);

  // degree 6: up to two foreign circuits
  const auto g6 = de_bruijn_graph(6, 2);
  const auto e0 = find_eulerian_circuit(g6);
  const auto e1 = rewire_vertex_set(g6, e0, std::vector<VertexId>{0, 1, 2, 3, 4, 5});
  const std::vector<Circuit> two{e0, e1};
  for (VertexId v = 0; v < 6; ++v) {
    const auto r = rewire_given(g6, e1, v, two);
    CHECK(is_eulerian(g6, r));
    CHECK(disjoint(wiring_of(g6, v, r), wiring_of(g6, v, e0)));
    CHECK(disjoint(wiring_of(g6, v, r), wiring_of(g6, v, e1)));
  }
  const auto e2 = rewire_vertex_set(g6, e1, std::vector<VertexId>{0, 1, 2, 3, 4, 5}, two);
  const std::vector<Circuit> three{e0, e1, e2};
  CHECK(code_of([&] { rewire_given(g6, e2, 0, three); }) == ErrorCode::TooManyForbidden);
}

TEST_CASE("vertex splitting and merging") {
  const auto dna = Alphabet::dna();
  const auto l = expand_language(LanguageSpec::weight_band(4, 2, 3), dna);
  const auto g = restricted_graph(l, 4);
  const VertexId caa = *g.find_vertex(dna.parse("CAA"));
  auto arc = [&](std::string_view w) { return *g.find_arc_by_word(dna.parse(w)); };
  const Wiring w{caa, {{arc("CCAA"), arc("CAAC")}, {arc("GCAA"), arc("CAAG")}}};
  const auto sp = split_vertex(g, w);
  CHECK(sp.graph.arc_count() == g.arc_count());
  CHECK(sp.graph.vertex_count() == g.vertex_count() + 1);
  std::vector<VertexId> pieces;
  for (VertexId v = 0; v < sp.graph.vertex_count(); ++v) {
    if (sp.origin[v] == caa) pieces.push_back(v);
  }
  REQUIRE(pieces.size() == 2);
  std::set<Symbol> tags;
  for (VertexId p : pieces) {
    CHECK(sp.graph.in_degree(p) == 1);
    CHECK(sp.graph.out_degree(p) == 1);
    const ArcId in = sp.graph.in_arcs(p)[0];
    const ArcId out = sp.graph.out_arcs(p)[0];
    CHECK(std::find(w.pairs.begin(), w.pairs.end(), std::pair{in, out}) != w.pairs.end());
    tags.insert(*sp.graph.vertex(p).split_tag);
  }
  CHECK(tags == std::set<Symbol>{dna.symbol('C'), dna.symbol('G')});

  const auto e = find_eulerian_circuit(sp.graph);
  const auto merged = merge_circuit(sp, e);
  CHECK(is_eulerian(g, merged));
  CHECK(wiring_of(g, caa, merged) == w);
  CHECK(circuit_to_word(g, merged) == circuit_to_word(sp.graph, e));

  // splitting degree-1 vertices changes nothing structural
  const auto k = kautz_graph(3, 2);
  const auto kc = find_eulerian_circuit(k);
  const auto ksp = split_vertex(k, wiring_of(k, 0, kc));
  CHECK(ksp.graph.arc_count() == k.arc_count());
  CHECK(merge_circuit(ksp, find_eulerian_circuit(ksp.graph)).arcs.size() == k.arc_count());

  // a circuit that already respects the wiring survives split + merge
  const auto c = find_eulerian_circuit(g);
  std::vector<Wiring> all;
  for (VertexId v = 0; v < g.vertex_count(); ++v) all.push_back(wiring_of(g, v, c));
  const auto full = split_vertices(g, all);
  const Circuit on_split{c.arcs, full.graph.hash()};
  CHECK(is_closed_walk(full.graph, on_split.arcs));
  CHECK(merge_circuit(full, on_split) == c);

  CHECK(code_of([&] { split_vertex(g, Wiring{caa, {{arc("CCAA"), arc("CAAC")}}}); }) ==
        ErrorCode::InvalidArgument);
}

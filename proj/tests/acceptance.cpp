// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "orthodb/constructions.hpp"
#include "orthodb/error.hpp"
#include "orthodb/language.hpp"
#include "orthodb/oracle.hpp"
#include "orthodb/rewire.hpp"

using namespace orthodb;
using namespace orthodb::oracle;

namespace {

// Collects failed checks so each criterion can report what broke.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;

  void operator()(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
};

std::size_t window_total(const std::vector<Sequence>& family, const Sequence& window) {
  std::size_t n = 0;
  for (const auto& s : family) {
    const auto c = circular_window_counts(s, window.size());
    if (auto it = c.find(window); it != c.end()) n += it->second;
  }
  return n;
}

std::vector<Sequence> parse_all(const Alphabet& a, std::initializer_list<const char*> ws) {
  std::vector<Sequence> out;
  for (const char* w : ws) out.push_back(a.parse(w));
  return out;
}

std::vector<Sequence> sequences(const std::vector<Word>& ws) {
  std::vector<Sequence> out;
  for (const auto& w : ws) out.push_back(w.entries);
  return out;
}

bool all_counts_equal(const Sequence& word, std::size_t n, std::size_t expected_windows,
                      std::size_t b) {
  const auto c = circular_window_counts(word, n);
  if (c.size() != expected_windows) return false;
  for (const auto& [w, m] : c) {
    if (m != b) return false;
  }
  return true;
}

void known_examples(Check& check) {
  const auto n3 = Alphabet::numeric(3);
  check(is_de_bruijn(n3.parse("012002211"), 3, 2).holds, "012002211 is (3,2)-de Bruijn");
  check(is_l_orthogonal(parse_all(n3, {"012002211", "012022110", "011220210", "011220021"}), 2, 2)
            .holds,
        "ternary family is 2-orthogonal");
  const auto bal = n3.parse("000111222020212101");
  check(is_b_balanced(bal, 3, 2, 2).holds, "000111222020212101 is 2-balanced");
  const auto so = is_self_orthogonal(bal, 2);
  check(!so.holds && so.witness && so.witness->items == std::vector<std::size_t>{2, 0, 2},
        "000111222020212101 fails self-orthogonality at 202");
  check(is_self_orthogonal(n3.parse("002211012001122021"), 2).holds,
        "002211012001122021 is self-orthogonal");

  const auto d = Alphabet::dna().with_weighted("CG");
  check(is_kautz_word(d.parse("ATCGAGCTGTAC"), 4, 2).holds, "ATCGAGCTGTAC is (4,2)-Kautz");
  const auto kf = parse_all(d, {"ATCGAGCTGTAC", "ACAGCTATGTCG", "ACTATGCGTCAG", "ACTGCGTAGATC"});
  check(is_l_orthogonal(kf, 2, 2).holds, "Kautz family is 2-orthogonal");
  check(window_total(kf, d.parse("ATC")) == 2, "count(ATC) = 2");
  check(window_total(kf, d.parse("GAG")) == 1, "count(GAG) = 1");
  check(window_total(kf, d.parse("ATA")) == 0, "count(ATA) = 0");

  LanguageFilter f;
  f.kautz = true;
  f.weighted = {false, false, true, true};
  f.w_min = 1;
  f.w_max = 2;
  check(is_fixed_weight_db(d.parse("CAGATCATGACACTACGAGTAGCTCTGTCGTG"),
                           brute_force_language(4, 3, f))
            .holds,
        "fixed-weight Kautz word for (4,3,1,2)");
}

void l_orthogonal_sweep(Check& check) {
  for (std::size_t sigma : {3, 4, 5}) {
    for (std::size_t k : {2, 3}) {
      std::set<std::size_t> ells{1, 2, std::min<std::size_t>(3, ipow(sigma, k - 1))};
      for (std::size_t ell : ells) {
        const std::string tag = "sigma=" + std::to_string(sigma) + " k=" + std::to_string(k) +
                                " ell=" + std::to_string(ell);
        const auto r = construct_l_orthogonal_de_bruijn(sigma, k, ell);
        const std::size_t big_k = sigma == 3 ? 2 : sigma / 2;
        check(r.certified(), tag + " certified");
        check(r.circuits.size() == ell * big_k, tag + " count = ell*K");
        // independent re-verification
        for (const auto& w : r.words) check(is_de_bruijn(w.entries, sigma, k).holds, tag + " de Bruijn");
        check(is_l_orthogonal(sequences(r.words), k, ell).holds, tag + " ell-orthogonal");
        check(pair_usage_within(r.graph, r.circuits, ell).holds, tag + " pair usage");
      }
    }
  }
}

void balanced(Check& check) {
  for (auto [c, b, sigma] : {std::tuple{2, 2, 4}, {2, 6, 12}}) {
    const std::string tag = "(c,b)=(" + std::to_string(c) + "," + std::to_string(b) + ")";
    const auto r = construct_orthogonal_balanced_de_bruijn(c, b, 2);
    check(r.certified(), tag + " certified");
    check(r.sigma == std::size_t(sigma), tag + " sigma");
    check(r.words.size() == std::size_t(c), tag + " count");
    for (const auto& w : r.words) {
      check(w.size() == b * ipow(sigma, 2), tag + " length");
      check(all_counts_equal(w.entries, 2, ipow(sigma, 2), b), tag + " every 2-window b times");
    }
    check(is_l_orthogonal(sequences(r.words), 2, 1).holds, tag + " orthogonal");
    if (b == 6) check(r.words[0].size() == 864, "length 864 = lcm(32,27)");
  }
  const auto g4 = de_bruijn_graph(4, 3);
  const auto g3 = de_bruijn_graph(3, 3);
  const auto c0 = word_to_circuit(g4, Alphabet::numeric(4).parse("01113102212033230133031223210002"));
  const auto e = word_to_circuit(g3, Alphabet::numeric(3).parse("100020212210222001012112011"));
  const auto a0 = compose_on_de_bruijn(4, c0, 3, e, 3);
  const auto w = circuit_to_word(de_bruijn_graph(12, 3), a0).entries;
  check(w.size() == 864, "composed A_0 has length 864");
  check(Sequence(w.begin(), w.begin() + 5) == Sequence{1, 3, 3, 3, 11}, "A_0 begins 1,3,3,3,11");
}

void tensor_composition(Check& check) {
  const auto g4 = de_bruijn_graph(4, 3);
  const auto g3 = de_bruijn_graph(3, 3);
  const auto g12 = de_bruijn_graph(12, 3);
  const auto cycles = find_arc_disjoint_avoiding_cycles(4, 2);
  const std::vector<Circuit> hats{build_b_circuit(g4, 0, 2, cycles),
                                  build_b_circuit(g4, 1, 2, cycles)};
  check(are_arc_disjoint(g4, hats).holds, "2-circuits on G(4,3) arc-disjoint");
  for (const auto& h : hats) check(is_b_circuit(g4, h, 2).holds, "2-circuit on G(4,3)");
  const auto e = find_eulerian_circuit(g3);
  std::vector<Circuit> out;
  for (const auto& h : hats) out.push_back(compose_on_de_bruijn(4, h, 3, e, 3));
  check(are_arc_disjoint(g12, out).holds, "composed 6-circuits arc-disjoint");
  for (const auto& c : out) {
    check(is_b_circuit(g12, c, 6).holds, "every vertex of G(12,3) visited 6 times");
  }
}

void fixed_weight_db(Check& check) {
  const auto d = Alphabet::dna().with_weighted("CG");
  const auto r = construct_fixed_weight_orthogonal_db(d, 4, 3);
  const auto lang = brute_force_language(4, 4, LanguageFilter{false, {false, false, true, true}, 2, 3});
  check(lang.size() == 160, "|A_2^3(4)| = 160 by brute force");
  check(r.certified(), "certified");
  check(r.circuits.size() == 2, "2 circuits");
  for (std::size_t i = 0; i < r.circuits.size(); ++i) {
    check(r.words[i].size() == 160, "length 160");
    check(is_eulerian_circuit(r.graph, r.circuits[i]).holds, "Eulerian");
    check(is_fixed_weight_db(r.words[i].entries, lang).holds, "fixed-weight de Bruijn");
  }
  check(are_compatible(r.graph, r.circuits).holds, "pairwise compatible");
  check(is_l_orthogonal(sequences(r.words), 4, 1).holds, "no shared 5-window");
}

void fixed_weight_kautz_existence(Check& check) {
  const auto d = Alphabet::dna().with_weighted("CG");
  for (std::size_t k : {3, 4}) {
    for (std::size_t lo = 0; lo <= k; ++lo) {
      for (std::size_t hi = lo; hi <= k; ++hi) {
        const auto lang = expand_language(LanguageSpec::kautz_weight_band(k, lo, hi), d);
        bool feasible = !lang.empty();
        if (feasible) {
          try {
            find_eulerian_circuit(restricted_graph(lang, 4));
          } catch (const Error&) {
            feasible = false;
          }
        }
        check(feasible == fixed_weight_kautz_exists(k, lo, hi),
              "k=" + std::to_string(k) + " band [" + std::to_string(lo) + "," +
                  std::to_string(hi) + "]");
      }
    }
  }
  const auto g = restricted_graph(expand_language(LanguageSpec::kautz_weight_band(3, 1, 1), d), 4);
  const auto ca = *g.find_vertex(d.parse("CA"));
  bool reported = false;
  try {
    find_eulerian_circuit(g);
  } catch (const Error& e) {
    const auto& v = e.details();
    reported = e.code() == ErrorCode::DegreeMismatch && std::find(v.begin(), v.end(), ca) != v.end();
  }
  check(reported, "(3,1,1) reports the degree mismatch at CA");
}

void bound_tables(Check& check) {
  for (std::size_t sigma : {3, 4}) {
    const std::size_t exact = exact_max_orthogonal(sigma, 2, 1);
    check(sigma / 2 <= exact && exact <= sigma - 1,
          "Omega_1(" + std::to_string(sigma) + ",2) = " + std::to_string(exact) + " within bounds");
  }
  check(exact_max_orthogonal(3, 2, 2) == 4, "Omega_2(3,2) = 4");
  for (auto [c, b] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto r = construct_orthogonal_balanced_kautz(c, b, 2);
    check(r.certified() && c * b + 1 <= int(r.sigma) && int(r.sigma) <= 2 * c * b + 1,
          "Kautz balanced sigma within [cb+1, 2cb+1]");
  }
}

void property_suite(Check& check) {
  using namespace testgen;
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng);
    const auto c = random_eulerian(g, rng);
    const VertexId v = pick(rng, 0, g.vertex_count() - 1);
    const auto r = rewire(g, c, v);
    bool ok = is_eulerian_circuit(g, r).holds &&
              pairs_disjoint(wiring_of(g, v, r), wiring_of(g, v, c));
    for (VertexId u = 0; u < g.vertex_count() && ok; ++u) {
      if (u != v) ok = wiring_of(g, u, r) == wiring_of(g, u, c);
    }
    const std::size_t t_max = g.out_arcs(v).size() / 2 - 1;
    if (t_max > 0 && ok) {
      std::vector<Circuit> forbidden;
      for (std::size_t i = 0, t = pick(rng, 1, t_max); i < t; ++i) {
        forbidden.push_back(random_eulerian(g, rng));
      }
      const auto rg = rewire_given(g, c, v, forbidden);
      ok = is_eulerian_circuit(g, rg).holds;
      for (const auto& f : forbidden) ok = ok && pairs_disjoint(wiring_of(g, v, rg), wiring_of(g, v, f));
      for (VertexId u = 0; u < g.vertex_count() && ok; ++u) {
        if (u != v) ok = wiring_of(g, u, rg) == wiring_of(g, u, c);
      }
    }
    check(ok, "rewire triple " + std::to_string(trial));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t kind = pick(rng, 0, 4);
    try {
      ConstructionResult r;
      if (kind == 0) {
        r = construct_l_orthogonal_de_bruijn(pick(rng, 3, 6), pick(rng, 2, 3), pick(rng, 1, 3));
      } else if (kind == 1) {
        r = construct_l_orthogonal_kautz(pick(rng, 4, 6), pick(rng, 2, 3), pick(rng, 1, 3));
      } else if (kind == 2) {
        r = construct_orthogonal_balanced_de_bruijn(pick(rng, 2, 3), pick(rng, 2, 4), pick(rng, 1, 2));
      } else if (kind == 3) {
        r = construct_fixed_weight_orthogonal_db(random_weighted_alphabet(rng, pick(rng, 3, 5), 1),
                                                 3, pick(rng, 1, 3));
      } else {
        const std::size_t k = pick(rng, 3, 4);
        r = construct_fixed_weight_kautz_orthogonal(random_weighted_alphabet(rng, 5, 2), k, 1, k - 1);
      }
      check(r.certified(), "random construction " + std::to_string(trial));
    } catch (const Error& e) {
      check(false, "random construction " + std::to_string(trial) + ": " + e.what());
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "known-example regression", 1, known_examples},
      {2, "l-orthogonal construction sweep", 30, l_orthogonal_sweep},
      {3, "balanced construction", 60, balanced},
      {4, "tensor composition", 30, tensor_composition},
      {5, "fixed-weight de Bruijn", 10, fixed_weight_db},
      {6, "fixed-weight Kautz existence", 10, fixed_weight_kautz_existence},
      {7, "bound tables", 300, bound_tables},
      {8, "property suite", 300, property_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) check(false, "runtime over " + std::to_string(c.limit_s) + " s");
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("criterion %d %-34s %s  (%zu checks, %.2f s)\n", c.id, c.name, ok ? "PASS" : "FAIL",
                check.count, s);
    for (const auto& f : check.failures) std::printf("    failed: %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orthodb/alphabet.hpp"
#include "orthodb/circuit.hpp"
#include "orthodb/graph.hpp"
#include "orthodb/oracle.hpp"

namespace orthodb {

/// Output of every construction. `graph` is the graph the circuits live on;
/// `words` are their circular words with window length `k` for the balanced
/// families and the graph order otherwise. The certificate has been checked
/// by the independent oracle before the result is returned.
struct ConstructionResult {
  std::string family;
  std::vector<std::pair<std::string, std::size_t>> params;
  std::size_t sigma = 0;
  std::size_t k = 0;
  DirectedMultigraph graph;
  std::vector<Circuit> circuits;
  std::vector<Word> words;
  std::vector<std::string> provenance;  // one line per circuit
  std::vector<oracle::VerificationReport> certificate;

  bool certified() const;
};

/// Lexicographic blocks: group g holds ids [g*n/ell, (g+1)*n/ell).
std::vector<std::vector<VertexId>> partition_vertices(const DirectedMultigraph& g,
                                                      std::size_t ell);

/// ell*K Eulerian circuits of any Eulerian graph with minimum degree delta >= 3
/// in which every consecutive arc pair is used at most ell times. K = 2 when
/// delta = 3 (unconditioned rewiring), floor(delta/2) otherwise.
std::vector<Circuit> l_orthogonal_family(const DirectedMultigraph& g, const Circuit& seed,
                                         std::size_t ell,
                                         std::vector<std::string>* provenance = nullptr);

ConstructionResult construct_l_orthogonal_de_bruijn(
    std::size_t sigma, std::size_t k, std::size_t ell,
    std::optional<std::vector<Symbol>> seed_word = std::nullopt);

ConstructionResult construct_l_orthogonal_kautz(
    std::size_t sigma, std::size_t k, std::size_t ell,
    std::optional<std::vector<Symbol>> seed_word = std::nullopt);

// ---- balanced ----

struct AvoidingCycleOptions {
  bool allow_non_prime_power = false;  // translate over Z_sigma instead of GF(p)^e digits
  std::uint64_t node_budget = 200000;  // then the algebraic cycle for prime powers
};

/// sigma pairwise arc-disjoint cycles on G_{sigma,k+1}; cycle i misses the
/// vertex i^k, visits every other vertex once and uses no loop (except for
/// sigma^k = 2, where each cycle is a single loop).
std::vector<Circuit> find_arc_disjoint_avoiding_cycles(std::size_t sigma, std::size_t k,
                                                       const AvoidingCycleOptions& opts = {});

/// Splices walks into one closed walk, each at the first vertex of the
/// partial result it shares. Throws Disconnected if some walk never meets it.
Circuit combine_closed_walks(const DirectedMultigraph& g, std::span<const Circuit> walks);

/// b-circuit on G_{sigma,k+1} from cycles b*tau .. b*tau+b-1, each extended
/// by one loop. For b = 1 the missing vertex is inserted instead.
Circuit build_b_circuit(const DirectedMultigraph& g, std::size_t tau, std::size_t b,
                        std::span<const Circuit> cycles);

/// Index-synchronous pairing of two closed walks on the tensor product
/// `product` of their graphs; lengths must be coprime.
Circuit tensor_compose_b_circuits(const DirectedMultigraph& g1, const Circuit& c1,
                                  const DirectedMultigraph& g2, const Circuit& c2,
                                  const DirectedMultigraph& product);

/// Composes circuits on G_{s1,n} and G_{s2,n} and maps the result onto
/// G_{s1*s2,n} through the digit isomorphism.
Circuit compose_on_de_bruijn(std::size_t s1, const Circuit& c1, std::size_t s2,
                             const Circuit& c2, std::size_t n);

std::size_t smallest_prime_power_at_least(std::size_t n);
bool is_prime_power(std::size_t n);

ConstructionResult construct_orthogonal_balanced_de_bruijn(std::size_t c, std::size_t b,
                                                           std::size_t k);
ConstructionResult construct_orthogonal_balanced_kautz(std::size_t c, std::size_t b,
                                                       std::size_t k);

// ---- fixed weight ----

/// Wiring at v pairing the in-arc whose k-word starts with symbols[i] with the
/// out-arc whose k-word ends with symbols[(i+j) mod |symbols|].
Wiring shift_wiring(const DirectedMultigraph& g, VertexId v, std::span<const Symbol> symbols,
                    std::size_t j);

/// Requires an alphabet with a weighted subset; 1 <= w <= k.
ConstructionResult construct_fixed_weight_orthogonal_db(const Alphabet& alphabet,
                                                        std::size_t k, std::size_t w);

bool fixed_weight_kautz_exists(std::size_t k, std::size_t w_min, std::size_t w_max);

/// Number of compatible circuits promised for the three supported bands.
std::size_t fixed_weight_kautz_count(std::size_t n_weighted, std::size_t n_unweighted,
                                     std::size_t k, std::size_t w_min, std::size_t w_max);

ConstructionResult construct_fixed_weight_kautz_orthogonal(const Alphabet& alphabet,
                                                           std::size_t k, std::size_t w_min,
                                                           std::size_t w_max);

}  // namespace orthodb

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthodb/circuit.hpp"
#include "orthodb/word.hpp"

// Brute-force checks that share no code with the graph and construction
// layers beyond the plain data types. Window counting here is deliberately
// naive so it can serve as an independent reference.
namespace orthodb::oracle {

using Sequence = std::vector<Symbol>;
using WindowCounts = std::map<Sequence, std::size_t>;

/// First violation found by a check. `items` holds symbols for window
/// witnesses and arc or vertex ids for walk witnesses.
struct Witness {
  std::vector<std::size_t> items;
  std::string description;
};

struct VerificationReport {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;     // present iff !holds
  std::map<std::size_t, std::size_t> histogram;  // window count -> number of windows

  explicit operator bool() const noexcept { return holds; }
};

/// Counts of every length-n circular window; exactly |word| windows.
WindowCounts circular_window_counts(std::span<const Symbol> word, std::size_t n);

struct LanguageFilter {
  bool kautz = false;                 // no two adjacent equal symbols
  std::vector<bool> weighted;         // empty: no weight constraint
  std::size_t w_min = 0;
  std::size_t w_max = std::numeric_limits<std::size_t>::max();
};

/// All length-k words over 0..sigma-1 passing the filter, lexicographic.
std::vector<Sequence> brute_force_language(std::size_t sigma, std::size_t k,
                                           const LanguageFilter& filter = {});

VerificationReport is_de_bruijn(std::span<const Symbol> word, std::size_t sigma,
                                std::size_t k);
VerificationReport is_b_balanced(std::span<const Symbol> word, std::size_t sigma,
                                 std::size_t k, std::size_t b);
VerificationReport is_kautz_word(std::span<const Symbol> word, std::size_t sigma,
                                 std::size_t k);
/// Every Kautz k-word exactly b times and no circular repeated symbol.
VerificationReport is_b_balanced_kautz(std::span<const Symbol> word, std::size_t sigma,
                                       std::size_t k, std::size_t b);
/// de Bruijn with respect to an explicit language: each word of `language`
/// exactly once and nothing else.
VerificationReport is_fixed_weight_db(std::span<const Symbol> word,
                                      std::span<const Sequence> language);
VerificationReport is_self_orthogonal(std::span<const Symbol> word, std::size_t k);
VerificationReport is_l_orthogonal(std::span<const Sequence> collection, std::size_t k,
                                   std::size_t ell);

/// Pairwise: no two circuits traverse the same consecutive arc pair.
VerificationReport are_compatible(const DirectedMultigraph& g,
                                  std::span<const Circuit> circuits);
/// Every consecutive arc pair used at most `ell` times over the collection.
VerificationReport pair_usage_within(const DirectedMultigraph& g,
                                     std::span<const Circuit> circuits, std::size_t ell);
VerificationReport are_arc_disjoint(const DirectedMultigraph& g,
                                    std::span<const Circuit> walks);
/// Closed walk visiting every vertex exactly b times.
VerificationReport is_b_circuit(const DirectedMultigraph& g, const Circuit& walk,
                                std::size_t b);
/// Closed walk using every arc exactly once.
VerificationReport is_eulerian_circuit(const DirectedMultigraph& g, const Circuit& c);

inline constexpr std::size_t kDefaultGuard = 10000;

/// Every de Bruijn sequence with respect to `language`, each at its minimal
/// rotation, sorted. Throws GuardExceeded once more than `guard` are found.
std::vector<Sequence> enumerate_db_words(std::span<const Sequence> language,
                                         std::size_t sigma,
                                         std::size_t guard = kDefaultGuard);
std::vector<Sequence> enumerate_db_words(std::size_t sigma, std::size_t k,
                                         std::size_t guard = kDefaultGuard);

struct SearchLimits {
  std::size_t word_guard = 50000;        // sequences enumerated
  std::uint64_t node_budget = 200000000;  // search nodes
};

/// Largest number of distinct (sigma,k)-de Bruijn sequences in which every
/// (k+1)-window occurs at most ell times in total. Exact; throws
/// GuardExceeded when either limit is hit.
std::size_t exact_max_orthogonal(std::size_t sigma, std::size_t k, std::size_t ell,
                                 const SearchLimits& limits = {});

}  // namespace orthodb::oracle

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orthodb/alphabet.hpp"
#include "orthodb/graph.hpp"
#include "orthodb/word.hpp"

namespace orthodb {

enum class LanguageKind { Full, Kautz, WeightBand, KautzWeightBand };

/// Defines a language of length-k words: all words, Kautz words (no two
/// adjacent equal symbols), words with weight in [w_min, w_max], or both.
struct LanguageSpec {
  LanguageKind kind = LanguageKind::Full;
  std::size_t k = 1;
  std::size_t w_min = 0;
  std::size_t w_max = 0;

  static LanguageSpec full(std::size_t k) { return {LanguageKind::Full, k, 0, k}; }
  static LanguageSpec kautz(std::size_t k) { return {LanguageKind::Kautz, k, 0, k}; }
  static LanguageSpec weight_band(std::size_t k, std::size_t lo, std::size_t hi) {
    return {LanguageKind::WeightBand, k, lo, hi};
  }
  static LanguageSpec kautz_weight_band(std::size_t k, std::size_t lo, std::size_t hi) {
    return {LanguageKind::KautzWeightBand, k, lo, hi};
  }
};

/// Words of the language in lexicographic order of symbol indices.
std::vector<Word> expand_language(const LanguageSpec& spec, const Alphabet& alphabet);

/// G_{sigma,k}: vertices are (k-1)-words, one arc per k-word. Vertex and arc
/// ids equal the base-sigma rank of their words.
DirectedMultigraph de_bruijn_graph(std::size_t sigma, std::size_t k);
inline DirectedMultigraph de_bruijn_graph(const Alphabet& a, std::size_t k) {
  return de_bruijn_graph(a.size(), k);
}

/// D(K_k) for sigma >= 3.
DirectedMultigraph kautz_graph(std::size_t sigma, std::size_t k);
inline DirectedMultigraph kautz_graph(const Alphabet& a, std::size_t k) {
  return kautz_graph(a.size(), k);
}

/// D(L): vertices are all (k-1)-prefixes and suffixes of words in L, one arc
/// per word. `sigma` defaults to one more than the largest symbol used.
DirectedMultigraph restricted_graph(std::span<const Word> language,
                                    std::size_t sigma = 0,
                                    GraphFamily family = GraphFamily::Restricted);

/// Binary mask marking the weighted entries of `w`.
Word weight_representation(const Word& w, const Alphabet& alphabet);

}  // namespace orthodb

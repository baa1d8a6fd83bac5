#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace orthodb {

using Symbol = std::uint32_t;
using VertexId = std::size_t;
using ArcId = std::size_t;

/// A word over the canonical alphabet 0..sigma-1. Vertex labels are linear;
/// sequences produced by constructions are circular.
struct Word {
  std::vector<Symbol> entries;
  bool circular = false;

  Word() = default;
  explicit Word(std::vector<Symbol> e, bool is_circular = false)
      : entries(std::move(e)), circular(is_circular) {}
  Word(std::initializer_list<Symbol> e) : entries(e) {}

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  Symbol operator[](std::size_t i) const { return entries[i]; }
  std::span<const Symbol> view() const noexcept { return entries; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Integer value of `w` read as a base-`sigma` number, most significant first.
std::size_t word_rank(std::span<const Symbol> w, std::size_t sigma);

/// Inverse of word_rank for a word of the given length.
std::vector<Symbol> word_unrank(std::size_t rank, std::size_t length,
                                std::size_t sigma);

/// Lexicographically smallest rotation.
std::vector<Symbol> minimal_rotation(std::span<const Symbol> w);

std::size_t ipow(std::size_t base, std::size_t exp);

}  // namespace orthodb

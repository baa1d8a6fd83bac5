#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthodb/word.hpp"

namespace orthodb {

/// Maps single-character tokens to canonical symbols 0..sigma-1 and optionally
/// marks a weighted subset W (its complement is X).
class Alphabet {
 public:
  /// Digits 0-9, then a-z, then A-Z. Supports sigma in [2, 62].
  static Alphabet numeric(std::size_t sigma);
  /// A, T, C, G in that order with W = {C, G}.
  static Alphabet dna();
  static Alphabet from_tokens(std::string_view tokens);

  /// Returns a copy with the weighted subset set to the given tokens.
  Alphabet with_weighted(std::string_view weighted_tokens) const;

  std::size_t size() const noexcept { return tokens_.size(); }
  char token(Symbol s) const;
  Symbol symbol(char token) const;
  bool contains(char token) const noexcept;

  bool has_weighted_subset() const noexcept { return weighted_.has_value(); }
  bool is_weighted(Symbol s) const;
  /// Weighted symbols in increasing symbol order.
  std::vector<Symbol> weighted() const;
  std::vector<Symbol> unweighted() const;
  std::size_t weight(std::span<const Symbol> w) const;

  std::string render(std::span<const Symbol> w) const;
  std::vector<Symbol> parse(std::string_view text) const;

  const std::string& tokens() const noexcept { return tokens_; }

 private:
  explicit Alphabet(std::string tokens);

  std::string tokens_;
  std::optional<std::vector<bool>> weighted_;
};

}  // namespace orthodb

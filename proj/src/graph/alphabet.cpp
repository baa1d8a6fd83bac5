#include "orthodb/alphabet.hpp"

#include <algorithm>

#include "orthodb/error.hpp"

namespace orthodb {

namespace {
constexpr std::string_view kNumericTokens =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
}

Alphabet::Alphabet(std::string tokens) : tokens_(std::move(tokens)) {
  if (tokens_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "alphabet needs at least 2 symbols");
  }
  std::string sorted = tokens_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "alphabet symbols must be distinct: " + tokens_);
  }
}

Alphabet Alphabet::numeric(std::size_t sigma) {
  if (sigma < 2 || sigma > kNumericTokens.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "numeric alphabet supports sigma in [2, 62], got " +
                    std::to_string(sigma));
  }
  return Alphabet(std::string(kNumericTokens.substr(0, sigma)));
}

Alphabet Alphabet::dna() { return Alphabet("ATCG").with_weighted("CG"); }

Alphabet Alphabet::from_tokens(std::string_view tokens) {
  return Alphabet(std::string(tokens));
}

Alphabet Alphabet::with_weighted(std::string_view weighted_tokens) const {
  Alphabet copy = *this;
  std::vector<bool> mask(size(), false);
  for (char c : weighted_tokens) mask[symbol(c)] = true;
  const auto w = std::count(mask.begin(), mask.end(), true);
  if (w == 0 || static_cast<std::size_t>(w) == size()) {
    throw Error(ErrorCode::InvalidArgument,
                "weighted and unweighted subsets must both be nonempty");
  }
  copy.weighted_ = std::move(mask);
  return copy;
}

char Alphabet::token(Symbol s) const {
  if (s >= tokens_.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "symbol " + std::to_string(s) + " outside alphabet");
  }
  return tokens_[s];
}

bool Alphabet::contains(char token) const noexcept {
  return tokens_.find(token) != std::string::npos;
}

Symbol Alphabet::symbol(char token) const {
  auto pos = tokens_.find(token);
  if (pos == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("token '") + token + "' not in alphabet " + tokens_);
  }
  return static_cast<Symbol>(pos);
}

bool Alphabet::is_weighted(Symbol s) const {
  if (!weighted_) {
    throw Error(ErrorCode::InvalidArgument, "alphabet has no weighted subset");
  }
  return (*weighted_)[s];
}

std::vector<Symbol> Alphabet::weighted() const {
  std::vector<Symbol> out;
  for (Symbol s = 0; s < size(); ++s)
    if (is_weighted(s)) out.push_back(s);
  return out;
}

std::vector<Symbol> Alphabet::unweighted() const {
  std::vector<Symbol> out;
  for (Symbol s = 0; s < size(); ++s)
    if (!is_weighted(s)) out.push_back(s);
  return out;
}

std::size_t Alphabet::weight(std::span<const Symbol> w) const {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [&](Symbol s) { return is_weighted(s); }));
}

std::string Alphabet::render(std::span<const Symbol> w) const {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(token(s));
  return out;
}

std::vector<Symbol> Alphabet::parse(std::string_view text) const {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(symbol(c));
  return out;
}

}  // namespace orthodb

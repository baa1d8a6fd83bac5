#include "orthodb/word.hpp"

#include <algorithm>

namespace orthodb {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::size_t word_rank(std::span<const Symbol> w, std::size_t sigma) {
  std::size_t r = 0;
  for (Symbol s : w) r = r * sigma + s;
  return r;
}

std::vector<Symbol> word_unrank(std::size_t rank, std::size_t length,
                                std::size_t sigma) {
  std::vector<Symbol> w(length);
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<Symbol>(rank % sigma);
    rank /= sigma;
  }
  return w;
}

std::vector<Symbol> minimal_rotation(std::span<const Symbol> w) {
  const std::size_t n = w.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Symbol a = w[(i + k) % n];
    Symbol b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  const std::size_t start = std::min(i, j);
  std::vector<Symbol> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = w[(start + t) % n];
  return out;
}

}  // namespace orthodb

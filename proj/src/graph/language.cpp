#include "orthodb/language.hpp"

#include <algorithm>
#include <set>

#include "orthodb/error.hpp"

namespace orthodb {

namespace {

bool is_kautz(std::span<const Symbol> w) {
  return std::adjacent_find(w.begin(), w.end()) == w.end();
}

}  // namespace

std::vector<Word> expand_language(const LanguageSpec& spec,
                                  const Alphabet& alphabet) {
  const bool banded = spec.kind == LanguageKind::WeightBand ||
                      spec.kind == LanguageKind::KautzWeightBand;
  const bool kautz = spec.kind == LanguageKind::Kautz ||
                     spec.kind == LanguageKind::KautzWeightBand;
  if (spec.k == 0) throw Error(ErrorCode::InvalidArgument, "word length k must be >= 1");
  if (banded) {
    if (!alphabet.has_weighted_subset()) {
      throw Error(ErrorCode::InvalidArgument,
                  "weight-band language needs an alphabet with a weighted subset");
    }
    if (spec.w_min > spec.w_max || spec.w_max > spec.k) {
      throw Error(ErrorCode::InvalidArgument, "weight bounds must satisfy 0 <= w' <= w <= k");
    }
  }

  const std::size_t sigma = alphabet.size();
  const std::size_t total = ipow(sigma, spec.k);
  std::vector<Word> out;
  for (std::size_t r = 0; r < total; ++r) {
    auto w = word_unrank(r, spec.k, sigma);
    if (kautz && !is_kautz(w)) continue;
    if (banded) {
      const std::size_t wt = alphabet.weight(w);
      if (wt < spec.w_min || wt > spec.w_max) continue;
    }
    out.emplace_back(std::move(w));
  }
  return out;
}

DirectedMultigraph de_bruijn_graph(std::size_t sigma, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "de Bruijn order k must be >= 1");
  if (sigma < 2) throw Error(ErrorCode::InvalidArgument, "sigma must be >= 2");
  const std::size_t nv = ipow(sigma, k - 1);
  std::vector<DirectedMultigraph::Vertex> vertices(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    vertices[v].label = Word(word_unrank(v, k - 1, sigma));
  }
  std::vector<DirectedMultigraph::Arc> arcs;
  arcs.reserve(nv * sigma);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t s = 0; s < sigma; ++s) {
      const ArcId id = v * sigma + s;
      const VertexId head = id % nv;  // drop the leading symbol
      arcs.push_back({id, v, head, static_cast<Symbol>(s)});
    }
  }
  return DirectedMultigraph({GraphFamily::DeBruijn, sigma, k}, std::move(vertices),
                            std::move(arcs));
}

DirectedMultigraph kautz_graph(std::size_t sigma, std::size_t k) {
  if (sigma < 3) throw Error(ErrorCode::InvalidArgument, "Kautz graphs need sigma >= 3");
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "Kautz order k must be >= 2");
  auto language = expand_language(LanguageSpec::kautz(k), Alphabet::numeric(sigma));
  return restricted_graph(language, sigma, GraphFamily::Kautz);
}

DirectedMultigraph restricted_graph(std::span<const Word> language,
                                    std::size_t sigma, GraphFamily family) {
  if (language.empty()) throw Error(ErrorCode::InvalidArgument, "language is empty");
  const std::size_t k = language.front().size();
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "restricted graph needs k >= 2");
  Symbol max_symbol = 0;
  for (const Word& w : language) {
    if (w.size() != k) {
      throw Error(ErrorCode::InvalidArgument, "language words have mixed lengths");
    }
    for (Symbol s : w.entries) max_symbol = std::max(max_symbol, s);
  }
  if (sigma == 0) sigma = static_cast<std::size_t>(max_symbol) + 1;

  std::vector<Word> sorted(language.begin(), language.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "language contains duplicate words");
  }

  std::set<std::vector<Symbol>> labels;
  for (const Word& w : sorted) {
    labels.emplace(w.entries.begin(), w.entries.end() - 1);
    labels.emplace(w.entries.begin() + 1, w.entries.end());
  }
  std::vector<DirectedMultigraph::Vertex> vertices;
  vertices.reserve(labels.size());
  for (const auto& l : labels) vertices.push_back({Word(l), std::nullopt});

  auto vertex_of = [&](std::span<const Symbol> l) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), l,
                               [](const DirectedMultigraph::Vertex& v, std::span<const Symbol> x) {
                                 return std::lexicographical_compare(
                                     v.label.entries.begin(), v.label.entries.end(),
                                     x.begin(), x.end());
                               });
    return static_cast<VertexId>(it - vertices.begin());
  };

  std::vector<DirectedMultigraph::Arc> arcs;
  arcs.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    std::span<const Symbol> w = sorted[i].entries;
    arcs.push_back({i, vertex_of(w.first(k - 1)), vertex_of(w.subspan(1)), w.back()});
  }
  return DirectedMultigraph({family, sigma, k}, std::move(vertices), std::move(arcs));
}

Word weight_representation(const Word& w, const Alphabet& alphabet) {
  Word out;
  out.circular = w.circular;
  out.entries.reserve(w.size());
  for (Symbol s : w.entries) out.entries.push_back(alphabet.is_weighted(s) ? 1 : 0);
  return out;
}

}  // namespace orthodb

#include "orthodb/tensor.hpp"

#include "orthodb/error.hpp"
#include "orthodb/language.hpp"

namespace orthodb {

std::vector<Symbol> compose_word(std::span<const Symbol> q, std::span<const Symbol> r,
                                 std::size_t sigma2) {
  if (q.size() != r.size()) {
    throw Error(ErrorCode::InvalidArgument, "compose_word needs equal lengths");
  }
  std::vector<Symbol> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = compose_symbol(q[i], r[i], sigma2);
  return out;
}

DirectedMultigraph tensor_product(const DirectedMultigraph& g1,
                                  const DirectedMultigraph& g2) {
  if (g1.vertex_count() == 0 || g2.vertex_count() == 0) {
    throw Error(ErrorCode::InvalidArgument, "tensor product of an empty graph");
  }
  const std::size_t sigma2 = g2.info().sigma;
  const bool combine = sigma2 > 0 && g1.info().order == g2.info().order;

  std::vector<DirectedMultigraph::Vertex> vertices;
  vertices.reserve(g1.vertex_count() * g2.vertex_count());
  for (VertexId v1 = 0; v1 < g1.vertex_count(); ++v1) {
    for (VertexId v2 = 0; v2 < g2.vertex_count(); ++v2) {
      const auto& l1 = g1.vertex(v1).label.entries;
      const auto& l2 = g2.vertex(v2).label.entries;
      std::vector<Symbol> label;
      if (combine) {
        label = compose_word(l1, l2, sigma2);
      } else {
        label = l1;
        label.insert(label.end(), l2.begin(), l2.end());
      }
      vertices.push_back({Word(std::move(label)), std::nullopt});
    }
  }

  std::vector<DirectedMultigraph::Arc> arcs;
  arcs.reserve(g1.arc_count() * g2.arc_count());
  for (const auto& a1 : g1.arcs()) {
    for (const auto& a2 : g2.arcs()) {
      const Symbol label = combine ? compose_symbol(a1.label, a2.label, sigma2) : a1.label;
      arcs.push_back({product_arc(g2, a1.id, a2.id), product_vertex(g2, a1.tail, a2.tail),
                      product_vertex(g2, a1.head, a2.head), label});
    }
  }
  GraphInfo info{GraphFamily::Product, combine ? g1.info().sigma * sigma2 : 0,
                 combine ? g1.info().order : 0};
  return DirectedMultigraph(info, std::move(vertices), std::move(arcs));
}

DigitIsomorphism de_bruijn_digit_isomorphism(std::size_t sigma1, std::size_t sigma2,
                                             std::size_t k) {
  if (sigma1 < 2 || sigma2 < 2) {
    throw Error(ErrorCode::InvalidArgument, "digit isomorphism needs sigma1, sigma2 >= 2");
  }
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "order k must be >= 1");
  const std::size_t sigma = sigma1 * sigma2;
  DigitIsomorphism iso{sigma1, sigma2, k, {}, {}, {}, {}};

  auto split = [&](std::span<const Symbol> w) {
    std::vector<Symbol> q(w.size()), r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) std::tie(q[i], r[i]) = split_symbol(w[i], sigma2);
    return std::pair{word_rank(q, sigma1), word_rank(r, sigma2)};
  };

  const std::size_t nv = ipow(sigma, k - 1);
  const std::size_t nv2 = ipow(sigma2, k - 1);
  iso.vertex_map.resize(nv);
  iso.vertex_inverse.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto [q, r] = split(word_unrank(v, k - 1, sigma));
    iso.vertex_map[v] = q * nv2 + r;
    iso.vertex_inverse[q * nv2 + r] = v;
  }
  const std::size_t na = ipow(sigma, k);
  const std::size_t na2 = ipow(sigma2, k);
  iso.arc_map.resize(na);
  iso.arc_inverse.resize(na);
  for (std::size_t a = 0; a < na; ++a) {
    auto [q, r] = split(word_unrank(a, k, sigma));
    iso.arc_map[a] = q * na2 + r;
    iso.arc_inverse[q * na2 + r] = a;
  }
  return iso;
}

}  // namespace orthodb

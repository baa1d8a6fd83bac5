#include "orthodb/graph.hpp"

#include <algorithm>
#include <limits>

#include "orthodb/error.hpp"

namespace orthodb {

const char* to_string(GraphFamily f) noexcept {
  switch (f) {
    case GraphFamily::DeBruijn: return "de-bruijn";
    case GraphFamily::Kautz: return "kautz";
    case GraphFamily::Restricted: return "restricted";
    case GraphFamily::Product: return "product";
    case GraphFamily::Split: return "split";
  }
  return "unknown";
}

namespace {

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

DirectedMultigraph::DirectedMultigraph(GraphInfo info,
                                       std::vector<Vertex> vertices,
                                       std::vector<Arc> arcs)
    : info_(info), vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.id != i) {
      throw Error(ErrorCode::InvalidArgument, "arc ids must be dense and ordered");
    }
    if (a.tail >= vertices_.size() || a.head >= vertices_.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "arc " + std::to_string(i) + " references a missing vertex");
    }
    out_[a.tail].push_back(a.id);
    in_[a.head].push_back(a.id);
  }

  bool unique = true;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].split_tag) {
      unique = false;
      break;
    }
    if (!index_.emplace(vertices_[v].label.entries, v).second) {
      unique = false;
      break;
    }
  }
  if (!unique) index_.clear();

  std::uint64_t h = 14695981039346656037ull;
  h = fnv_mix(h, vertices_.size());
  for (const Arc& a : arcs_) {
    h = fnv_mix(h, a.tail);
    h = fnv_mix(h, a.head);
    h = fnv_mix(h, a.label);
  }
  hash_ = h;
}

std::size_t DirectedMultigraph::loop_count() const {
  return static_cast<std::size_t>(std::count_if(
      arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.tail == a.head; }));
}

std::optional<VertexId> DirectedMultigraph::find_vertex(
    std::span<const Symbol> label) const {
  auto it = index_.find(std::vector<Symbol>(label.begin(), label.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArcId> DirectedMultigraph::find_arc(VertexId tail,
                                                  Symbol label) const {
  for (ArcId a : out_.at(tail))
    if (arcs_[a].label == label) return a;
  return std::nullopt;
}

std::optional<ArcId> DirectedMultigraph::find_arc_by_word(
    std::span<const Symbol> word) const {
  if (word.empty()) return std::nullopt;
  auto tail = find_vertex(word.first(word.size() - 1));
  if (!tail) return std::nullopt;
  return find_arc(*tail, word.back());
}

std::vector<Symbol> DirectedMultigraph::arc_word(ArcId a) const {
  const Arc& arc = arcs_.at(a);
  std::vector<Symbol> w = vertices_[arc.tail].label.entries;
  w.push_back(arc.label);
  return w;
}

std::size_t DirectedMultigraph::min_degree() const {
  std::size_t d = std::numeric_limits<std::size_t>::max();
  for (const auto& list : in_) d = std::min(d, list.size());
  return vertices_.empty() ? 0 : d;
}

}  // namespace orthodb

#include "dsnkit/digraph.hpp"

#include <algorithm>
#include <string>

#include "dsnkit/errors.hpp"

namespace dsnkit {

WeightedDigraph::WeightedDigraph(std::size_t vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    auto name = "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
    if (a.tail >= vertex_count_ || a.head >= vertex_count_) {
      throw InputError(name + " has an endpoint outside the vertex set");
    }
    if (a.tail == a.head) throw InputError(name + " is a loop");
    if (!a.weight.is_positive()) throw InputError(name + " has a nonpositive weight");
    if (i > 0 && arcs_[i - 1].tail == a.tail && arcs_[i - 1].head == a.head) {
      throw InputError("duplicate " + name);
    }
  }
  out_offset_.assign(vertex_count_ + 1, 0);
  in_offset_.assign(vertex_count_ + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offset_[a.tail + 1];
    ++in_offset_[a.head + 1];
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    out_offset_[v + 1] += out_offset_[v];
    in_offset_[v + 1] += in_offset_[v];
  }
  out_order_.resize(arcs_.size());
  for (ArcId id = 0; id < arcs_.size(); ++id) out_order_[id] = id;
  in_order_.resize(arcs_.size());
  std::vector<std::size_t> fill(in_offset_.begin(), in_offset_.end() - 1);
  // Arcs are sorted by tail, so each in-list comes out sorted by tail.
  for (ArcId id = 0; id < arcs_.size(); ++id) in_order_[fill[arcs_[id].head]++] = id;
}

std::span<const ArcId> WeightedDigraph::out_arcs(Vertex v) const {
  return {out_order_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]};
}

std::span<const ArcId> WeightedDigraph::in_arcs(Vertex v) const {
  return {in_order_.data() + in_offset_[v], in_offset_[v + 1] - in_offset_[v]};
}

std::optional<ArcId> WeightedDigraph::find_arc(Vertex tail, Vertex head) const {
  if (tail >= vertex_count_ || head >= vertex_count_) return std::nullopt;
  auto first = arcs_.begin() + static_cast<std::ptrdiff_t>(out_offset_[tail]);
  auto last = arcs_.begin() + static_cast<std::ptrdiff_t>(out_offset_[tail + 1]);
  auto it = std::lower_bound(first, last, head,
                             [](const Arc& a, Vertex h) { return a.head < h; });
  if (it == last || it->head != head) return std::nullopt;
  return static_cast<ArcId>(it - arcs_.begin());
}

std::vector<Vertex> WeightedDigraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (ArcId id : out_arcs(v)) out.push_back(arcs_[id].head);
  for (ArcId id : in_arcs(v)) out.push_back(arcs_[id].tail);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Weight WeightedDigraph::total_weight() const {
  Weight total = 0;
  for (const Arc& a : arcs_) total += a.weight;
  return total;
}

WeightedDigraph WeightedDigraph::with_arcs(std::span<const ArcId> ids) const {
  std::vector<Arc> kept;
  kept.reserve(ids.size());
  for (ArcId id : ids) {
    if (id >= arcs_.size()) throw InputError("arc id " + std::to_string(id) + " not in host");
    kept.push_back(arcs_[id]);
  }
  return WeightedDigraph(vertex_count_, std::move(kept));
}

WeightedDigraph WeightedDigraph::reversed() const {
  std::vector<Arc> flipped;
  flipped.reserve(arcs_.size());
  for (const Arc& a : arcs_) flipped.push_back({a.head, a.tail, a.weight});
  return WeightedDigraph(vertex_count_, std::move(flipped));
}

WeightedDigraph WeightedDigraph::induced(std::span<const Vertex> keep) const {
  std::vector<std::int64_t> index(vertex_count_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= vertex_count_) throw InputError("unknown vertex " + std::to_string(keep[i]));
    index[keep[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Arc> kept;
  for (const Arc& a : arcs_) {
    if (index[a.tail] >= 0 && index[a.head] >= 0) {
      kept.push_back({static_cast<Vertex>(index[a.tail]), static_cast<Vertex>(index[a.head]),
                      a.weight});
    }
  }
  return WeightedDigraph(keep.size(), std::move(kept));
}

DirectedPath::DirectedPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

bool DirectedPath::contains(Vertex v) const { return index_of(v).has_value(); }

std::optional<std::size_t> DirectedPath::index_of(Vertex v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

DirectedPath DirectedPath::subpath(Vertex u, Vertex v) const {
  auto i = index_of(u);
  auto j = index_of(v);
  if (!i || !j || *i > *j) {
    throw PreconditionError("subpath endpoints " + std::to_string(u) + "," + std::to_string(v) +
                            " are not in path order");
  }
  return DirectedPath(std::vector<Vertex>(vertices_.begin() + static_cast<std::ptrdiff_t>(*i),
                                          vertices_.begin() + static_cast<std::ptrdiff_t>(*j) + 1));
}

DirectedPath DirectedPath::concat(const DirectedPath& tail) const {
  if (empty()) return tail;
  if (tail.empty()) return *this;
  if (target() != tail.source()) {
    throw PreconditionError("cannot concatenate paths: " + std::to_string(target()) +
                            " != " + std::to_string(tail.source()));
  }
  std::vector<Vertex> joined = vertices_;
  joined.insert(joined.end(), tail.vertices_.begin() + 1, tail.vertices_.end());
  return DirectedPath(std::move(joined));
}

bool DirectedPath::is_valid_in(const WeightedDigraph& g) const {
  if (vertices_.empty()) return false;
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!g.contains(sorted.back())) return false;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (!g.has_arc(vertices_[i], vertices_[i + 1])) return false;
  }
  return true;
}

Weight DirectedPath::weight_in(const WeightedDigraph& g) const {
  Weight total = 0;
  for (ArcId id : arc_ids_in(g)) total += g.arc(id).weight;
  return total;
}

std::vector<ArcId> DirectedPath::arc_ids_in(const WeightedDigraph& g) const {
  std::vector<ArcId> ids;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    auto id = g.find_arc(vertices_[i], vertices_[i + 1]);
    if (!id) {
      throw InputError("path uses missing arc (" + std::to_string(vertices_[i]) + "," +
                       std::to_string(vertices_[i + 1]) + ")");
    }
    ids.push_back(*id);
  }
  return ids;
}

}  // namespace dsnkit

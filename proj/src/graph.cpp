#include "interior/graph.hpp"

#include <algorithm>
#include <numeric>

#include "interior/error.hpp"

namespace interior {

namespace {

std::vector<std::uint32_t> identity_origin(std::size_t n) {
  std::vector<std::uint32_t> out(n);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

template <class T>
std::vector<T> select(const std::vector<T>& from, Mask keep) {
  if (from.empty()) return {};
  std::vector<T> out;
  for (std::size_t i = 0; i < from.size(); ++i)
    if (keep & bit(i)) out.push_back(from[i]);
  return out;
}

// Position of `i` among the set bits of `keep`.
std::uint32_t rank_in(Mask keep, std::size_t i) {
  return static_cast<std::uint32_t>(std::popcount(keep & low_bits(i)));
}

}  // namespace

BipartiteGraph BipartiteGraph::build(std::size_t v_count, std::size_t w_count,
                                     std::span<const Edge> edges, VertexLabels labels) {
  if (v_count > kMaxSideSize || w_count > kMaxSideSize)
    throw ResourceLimit("color classes are limited to " + std::to_string(kMaxSideSize) +
                        " vertices (got " + std::to_string(v_count) + " and " +
                        std::to_string(w_count) + ")");
  if (!labels.v.empty() && labels.v.size() != v_count)
    throw InvalidInput("V-side label count does not match vertex count");
  if (!labels.w.empty() && labels.w.size() != w_count)
    throw InvalidInput("W-side label count does not match vertex count");

  BipartiteGraph g;
  g.v_adj_.assign(v_count, 0);
  g.w_adj_.assign(w_count, 0);
  for (const Edge& e : edges) {
    if (e.v >= v_count || e.w >= w_count)
      throw InvalidEdge("edge (" + std::to_string(e.v) + ", " + std::to_string(e.w) +
                        ") out of range for " + std::to_string(v_count) + " x " +
                        std::to_string(w_count) + " graph");
    if (g.v_adj_[e.v] & bit(e.w))
      throw ParallelEdge("edge (" + std::to_string(e.v) + ", " + std::to_string(e.w) +
                         ") listed more than once");
    g.v_adj_[e.v] |= bit(e.w);
    g.w_adj_[e.w] |= bit(e.v);
  }
  g.edges_.assign(edges.begin(), edges.end());
  std::sort(g.edges_.begin(), g.edges_.end());
  g.v_origin_ = identity_origin(v_count);
  g.w_origin_ = identity_origin(w_count);
  g.labels_ = std::move(labels);
  return g;
}

void BipartiteGraph::rebuild_adjacency() {
  std::fill(v_adj_.begin(), v_adj_.end(), 0);
  std::fill(w_adj_.begin(), w_adj_.end(), 0);
  for (const Edge& e : edges_) {
    v_adj_[e.v] |= bit(e.w);
    w_adj_[e.w] |= bit(e.v);
  }
}

Mask BipartiteGraph::origin_mask(Side s) const noexcept {
  Mask m = 0;
  for (auto o : origin(s)) m |= bit(o);
  return m;
}

Mask BipartiteGraph::to_origin(const VertexSet& set) const noexcept {
  const auto org = origin(set.side);
  Mask m = 0;
  for (Mask rest = set.members; rest; rest &= rest - 1)
    m |= bit(org[static_cast<std::size_t>(std::countr_zero(rest))]);
  return m;
}

std::string BipartiteGraph::label(Side s, std::size_t i) const {
  const auto& names = s == Side::V ? labels_.v : labels_.w;
  if (!names.empty()) return names[i];
  return (s == Side::V ? "v" : "w") + std::to_string(i + 1);
}

VertexSet neighborhood(const BipartiteGraph& g, const VertexSet& s) {
  Mask n = 0;
  for (Mask rest = s.members; rest; rest &= rest - 1)
    n |= g.neighbors(s.side, static_cast<std::size_t>(std::countr_zero(rest)));
  return {opposite(s.side), n};
}

bool is_nonexpanding(const BipartiteGraph& g, const VertexSet& s) {
  return s.size() >= neighborhood(g, s).size();
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, Mask v_keep, Mask w_keep) {
  v_keep &= low_bits(g.v_count());
  w_keep &= low_bits(g.w_count());

  BipartiteGraph out;
  out.v_adj_.assign(static_cast<std::size_t>(std::popcount(v_keep)), 0);
  out.w_adj_.assign(static_cast<std::size_t>(std::popcount(w_keep)), 0);
  for (const Edge& e : g.edges_) {
    if ((v_keep & bit(e.v)) && (w_keep & bit(e.w)))
      out.edges_.push_back({rank_in(v_keep, e.v), rank_in(w_keep, e.w)});
  }
  out.rebuild_adjacency();
  out.v_origin_ = select(g.v_origin_, v_keep);
  out.w_origin_ = select(g.w_origin_, w_keep);
  out.labels_.v = select(g.labels_.v, v_keep);
  out.labels_.w = select(g.labels_.w, w_keep);
  return out;
}

BipartiteGraph delete_vertices(const BipartiteGraph& g, const VertexSet& j) {
  Mask v_keep = low_bits(g.v_count());
  Mask w_keep = low_bits(g.w_count());
  (j.side == Side::V ? v_keep : w_keep) &= ~j.members;
  return induced_subgraph(g, v_keep, w_keep);
}

BipartiteGraph delete_edges(const BipartiteGraph& g, std::span<const Edge> f) {
  BipartiteGraph out = g;
  for (const Edge& e : f) {
    if (!out.has_edge(e.v, e.w))
      throw InvalidEdge("cannot delete (" + std::to_string(e.v) + ", " + std::to_string(e.w) +
                        "): not an edge of the graph");
    out.v_adj_[e.v] &= ~bit(e.w);
    out.w_adj_[e.w] &= ~bit(e.v);
  }
  std::erase_if(out.edges_, [&](const Edge& e) { return !out.has_edge(e.v, e.w); });
  return out;
}

std::vector<BipartiteGraph> components(const BipartiteGraph& g) {
  std::vector<BipartiteGraph> out;
  Mask v_left = low_bits(g.v_count());
  Mask w_left = low_bits(g.w_count());
  while (v_left || w_left) {
    Mask v_comp = 0;
    Mask w_comp = 0;
    if (v_left)
      v_comp = v_left & -v_left;
    else
      w_comp = w_left & -w_left;
    // Grow by alternating neighborhood steps until nothing new is reached.
    for (;;) {
      const Mask w_next = w_comp | neighborhood(g, {Side::V, v_comp}).members;
      const Mask v_next = v_comp | neighborhood(g, {Side::W, w_next}).members;
      if (v_next == v_comp && w_next == w_comp) break;
      v_comp = v_next;
      w_comp = w_next;
    }
    out.push_back(induced_subgraph(g, v_comp, w_comp));
    v_left &= ~v_comp;
    w_left &= ~w_comp;
  }
  return out;
}

BipartiteGraph swap_sides(const BipartiteGraph& g) {
  BipartiteGraph out;
  out.v_adj_ = g.w_adj_;
  out.w_adj_ = g.v_adj_;
  out.edges_.reserve(g.edges_.size());
  for (const Edge& e : g.edges_) out.edges_.push_back({e.w, e.v});
  std::sort(out.edges_.begin(), out.edges_.end());
  out.v_origin_ = g.w_origin_;
  out.w_origin_ = g.v_origin_;
  out.labels_ = {g.labels_.w, g.labels_.v};
  return out;
}

bool is_connected(const BipartiteGraph& g) {
  return g.vertex_count() > 0 && components(g).size() == 1;
}

}  // namespace interior

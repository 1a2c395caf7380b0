#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace interior {

/// Bitmask over the vertices of one color class.
using Mask = std::uint64_t;

/// Hard cap on the size of each color class; every vertex set is a single Mask.
inline constexpr std::size_t kMaxSideSize = 64;

enum class Side : std::uint8_t { V, W };

constexpr Side opposite(Side s) noexcept { return s == Side::V ? Side::W : Side::V; }

constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

constexpr Mask low_bits(std::size_t n) noexcept { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

/// An edge (v, w): `v` indexes the V side, `w` the W side.
struct Edge {
  std::uint32_t v = 0;
  std::uint32_t w = 0;

  auto operator<=>(const Edge&) const = default;
};

/// A subset of one color class.
struct VertexSet {
  Side side = Side::V;
  Mask members = 0;

  static VertexSet of(Side side, std::initializer_list<std::size_t> indices) {
    Mask m = 0;
    for (auto i : indices) m |= bit(i);
    return {side, m};
  }

  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(members)); }
  bool empty() const noexcept { return members == 0; }
  bool contains(std::size_t i) const noexcept { return i < 64 && (members & bit(i)) != 0; }

  bool operator==(const VertexSet&) const = default;
};

/// Optional display names. Each vector is either empty or has one entry per vertex.
struct VertexLabels {
  std::vector<std::string> v;
  std::vector<std::string> w;

  bool operator==(const VertexLabels&) const = default;
};

/// A simple bipartite graph with color classes V and W.
///
/// Values are immutable once built. Every graph remembers, for each of its
/// vertices, the index that vertex had in the graph it was derived from
/// (`origin`). Graphs produced by `build` have the identity mapping; deletions,
/// component splits and side swaps compose it, so masks over origin indices
/// identify a subgraph of the root graph exactly.
class BipartiteGraph {
 public:
  /// The graph with no vertices.
  BipartiteGraph() = default;

  /// Validates and assembles a graph.
  ///
  /// Throws ResourceLimit when a side exceeds kMaxSideSize, InvalidEdge for an
  /// out-of-range endpoint, ParallelEdge for a repeated pair and InvalidInput
  /// for label vectors of the wrong length.
  static BipartiteGraph build(std::size_t v_count, std::size_t w_count,
                              std::span<const Edge> edges, VertexLabels labels = {});

  static BipartiteGraph build(std::size_t v_count, std::size_t w_count,
                              std::initializer_list<Edge> edges) {
    return build(v_count, w_count, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t v_count() const noexcept { return v_adj_.size(); }
  std::size_t w_count() const noexcept { return w_adj_.size(); }
  std::size_t count(Side s) const noexcept { return s == Side::V ? v_count() : w_count(); }
  std::size_t vertex_count() const noexcept { return v_count() + w_count(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges in ascending (v, w) order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  Mask neighbors(Side s, std::size_t i) const { return s == Side::V ? v_adj_[i] : w_adj_[i]; }
  std::size_t degree(Side s, std::size_t i) const {
    return static_cast<std::size_t>(std::popcount(neighbors(s, i)));
  }
  bool has_edge(std::size_t v, std::size_t w) const {
    return v < v_count() && w < w_count() && (v_adj_[v] & bit(w)) != 0;
  }

  /// Every vertex of one side.
  VertexSet all(Side s) const noexcept { return {s, low_bits(count(s))}; }

  /// Original index of each vertex on side `s`.
  std::span<const std::uint32_t> origin(Side s) const noexcept {
    return s == Side::V ? std::span<const std::uint32_t>(v_origin_)
                        : std::span<const std::uint32_t>(w_origin_);
  }
  /// Origin indices of side `s` as a mask.
  Mask origin_mask(Side s) const noexcept;
  /// Translate a set of current indices into origin indices.
  Mask to_origin(const VertexSet& set) const noexcept;

  const VertexLabels& labels() const noexcept { return labels_; }
  /// Display name of a vertex: its label if present, otherwise "v<i+1>" / "w<j+1>".
  std::string label(Side s, std::size_t i) const;

  bool operator==(const BipartiteGraph&) const = default;

 private:
  friend BipartiteGraph induced_subgraph(const BipartiteGraph&, Mask, Mask);
  friend BipartiteGraph delete_edges(const BipartiteGraph&, std::span<const Edge>);
  friend BipartiteGraph swap_sides(const BipartiteGraph&);

  void rebuild_adjacency();

  std::vector<Edge> edges_;
  std::vector<Mask> v_adj_;
  std::vector<Mask> w_adj_;
  std::vector<std::uint32_t> v_origin_;
  std::vector<std::uint32_t> w_origin_;
  VertexLabels labels_;
};

/// Union of the neighborhoods of the members of `s`; lives on the opposite side.
VertexSet neighborhood(const BipartiteGraph& g, const VertexSet& s);

/// |s| >= |N(s)|.
bool is_nonexpanding(const BipartiteGraph& g, const VertexSet& s);

/// The subgraph induced by the vertices kept in `v_keep` and `w_keep`
/// (current indices). Remaining vertices keep their relative order.
BipartiteGraph induced_subgraph(const BipartiteGraph& g, Mask v_keep, Mask w_keep);

/// Remove the vertices of `j` together with their incident edges.
BipartiteGraph delete_vertices(const BipartiteGraph& g, const VertexSet& j);

/// Remove edges, keeping every vertex. Throws InvalidEdge for an edge not in `g`.
BipartiteGraph delete_edges(const BipartiteGraph& g, std::span<const Edge> f);

/// Connected components ordered by their first vertex (V side before W side).
/// Isolated vertices are single-vertex components.
std::vector<BipartiteGraph> components(const BipartiteGraph& g);

/// Exchange the roles of the two color classes.
BipartiteGraph swap_sides(const BipartiteGraph& g);

/// Whether `g` is connected. The empty graph is not.
bool is_connected(const BipartiteGraph& g);

}  // namespace interior

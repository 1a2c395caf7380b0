#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "interior/graph.hpp"

namespace interior {

/// A matching seen from the side it tries to saturate.
struct Matching {
  Side side = Side::V;
  /// mate[i] is the partner of vertex i of `side`, if matched.
  std::vector<std::optional<std::uint32_t>> mate;

  std::size_t size() const;
  /// Matched vertices of `side`.
  Mask matched() const;
  bool saturates(const VertexSet& s) const { return (s.members & ~matched()) == 0; }
  /// Matched pairs as edges in (v, w) orientation.
  std::vector<Edge> pairs() const;
};

/// Maximum-cardinality matching, grown by augmenting paths from the vertices of
/// `side` in ascending index order. Deterministic.
Matching maximum_matching(const BipartiteGraph& g, Side side);

/// Maximum matching in which only the members of `among` may be matched on their side.
Matching maximum_matching(const BipartiteGraph& g, const VertexSet& among);

/// Returns nothing when some matching saturates `s`. Otherwise returns a subset
/// X of `s` with |X| > |N(X)|: an unmatched vertex of `s` together with every
/// vertex of `s` reachable from it by alternating paths.
std::optional<VertexSet> hall_violator(const BipartiteGraph& g, const VertexSet& s);

enum class NonExpandingStrategy { Leaf, LargerClass, Violator };

std::string_view to_string(NonExpandingStrategy s);

struct NonExpandingChoice {
  VertexSet set;
  NonExpandingStrategy strategy;
};

/// Picks a non-expanding set whose members all have degree >= 1. In order of
/// preference: a single degree-1 vertex, the larger color class without its
/// isolated vertices, a Hall violator inside one of the classes. Returns
/// nothing only for graphs without edges.
std::optional<NonExpandingChoice> choose_nonexpanding(const BipartiteGraph& g);

}  // namespace interior

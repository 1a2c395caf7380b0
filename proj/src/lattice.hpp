#pragma once

// Internal machinery behind the Ehrhart module: a transportation feasibility
// test and the layer-by-layer Minkowski enumeration of dilated root polytopes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "interior/ehrhart.hpp"
#include "interior/graph.hpp"

namespace interior::detail {

/// Supplies on V, demands on W, uncapacitated edges of the graph. Buffers are
/// reused across calls, so one checker per thread.
class TransportationChecker {
 public:
  explicit TransportationChecker(const BipartiteGraph& g);

  bool feasible(std::span<const std::uint32_t> supply, std::span<const std::uint32_t> demand);

 private:
  bool augment();

  const BipartiteGraph& g_;
  std::size_t nv_;
  std::size_t nw_;
  std::vector<std::uint32_t> flow_;  // nv_ * nw_, row-major by V vertex
  std::vector<std::uint32_t> supply_;
  std::vector<std::uint32_t> demand_;
  std::vector<std::int32_t> parent_w_;  // V vertex that reached each W vertex
  std::vector<std::int32_t> parent_v_;  // W vertex that reached each V vertex, -1 for roots
  std::vector<std::uint32_t> queue_;
};

/// Packs the |V| + |W| coordinates of a point into 64-bit words, `bits` per
/// coordinate, no coordinate straddling a word. Coordinates never exceed the
/// dilation, so adding an edge generator is a carry-free word-wise addition.
class PointCodec {
 public:
  PointCodec(std::size_t v_count, std::size_t w_count, std::size_t max_coordinate);

  std::size_t words() const noexcept { return words_; }
  std::vector<std::uint64_t> unit(std::size_t coordinate) const;
  std::vector<std::uint64_t> edge_delta(const Edge& e) const;
  void unpack(const std::uint64_t* packed, DegreePair& out) const;

 private:
  std::size_t v_count_;
  std::size_t w_count_;
  std::size_t bits_;
  std::size_t per_word_;
  std::size_t words_;
};

/// The lattice points of s * Q_G for the current dilation s, in packed form.
/// Starts at s = 0 with the single zero point.
class PointLayer {
 public:
  PointLayer(const BipartiteGraph& g, std::size_t max_dilation, const EnumerationOptions& options);

  std::size_t dilation() const noexcept { return dilation_; }
  std::size_t size() const noexcept { return points_.size() / codec_.words(); }

  /// Replace the layer for s by the layer for s + 1.
  void advance();

  DegreePair point(std::size_t i) const;

 private:
  void verify() const;

  const BipartiteGraph& g_;
  std::size_t max_dilation_;
  EnumerationOptions options_;
  PointCodec codec_;
  std::vector<std::uint64_t> deltas_;  // one packed generator per edge
  std::vector<std::uint64_t> points_;
  std::size_t dilation_ = 0;
};

}  // namespace interior::detail

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "interior/graph.hpp"
#include "interior/polynomial.hpp"

namespace interior {

/// An integer point of R^V (+) R^W, stored as its two coordinate blocks.
/// Points of s * Q_G are exactly the degree vectors of nonnegative edge
/// weightings of total weight s.
struct DegreePair {
  std::vector<std::uint32_t> a;  // V side
  std::vector<std::uint32_t> b;  // W side

  auto operator<=>(const DegreePair&) const = default;
};

struct EnumerationOptions {
  /// Abort with ResourceLimit once one dilation holds more points than this.
  std::size_t max_points = 10'000'000;
  /// Re-check every generated point with the transportation test.
  bool verify_membership = true;
  /// Worker threads for expanding one dilation into the next.
  unsigned threads = 1;
};

/// Lattice counts of the dilations of the root polytope and the interior
/// polynomial recovered from them.
struct EhrhartProfile {
  /// values[s] = number of lattice points of s * Q_G, for s = 0..n+1 (values[0] = 1).
  std::vector<BigInt> values;
  /// |V| + |W| - 1: the power of (1 - x) in the denominator.
  std::size_t n = 0;
  IntPolynomial interior;
};

/// Whether (a, b) is a lattice point of s * Q_G: both blocks sum to s and the
/// transportation problem with supplies a, demands b over the edges of g is
/// feasible.
bool membership(const BipartiteGraph& g, const DegreePair& p, std::size_t s);

/// All lattice points of s * Q_G in ascending order, built as s-fold sums of
/// edge generators.
std::vector<DegreePair> lattice_points(const BipartiteGraph& g, std::size_t s,
                                       const EnumerationOptions& options = {});

/// [1, #(1 * Q_G), ..., #(m * Q_G)].
std::vector<BigInt> ehrhart_values(const BipartiteGraph& g, std::size_t m,
                                   const EnumerationOptions& options = {});

/// Counts for s = 0..n+1 and I_G(x) = (1 - x)^n * Ehr(x) truncated to degree n.
/// Throws InvalidInput for the empty graph and ConsistencyFailure if the
/// polynomial does not reproduce the count at s = n + 1.
EhrhartProfile ehrhart_profile(const BipartiteGraph& g, const EnumerationOptions& options = {});

IntPolynomial interior_via_ehrhart(const BipartiteGraph& g, const EnumerationOptions& options = {});

/// Dimension of the affine hull of a point set (-1 when empty).
long affine_dimension(std::span<const DegreePair> points);

}  // namespace interior

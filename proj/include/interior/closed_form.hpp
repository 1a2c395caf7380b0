#pragma once

#include <cstddef>
#include <functional>

#include "interior/polynomial.hpp"

namespace interior {

/// C(a, j) for a >= -1 and j >= 0, with C(-1, j) = (-1)^j and C(a, j) = 0 for
/// 0 <= a < j. Throws InvalidInput for a < -1 or j < 0.
BigInt gen_binomial(long a, long j);

/// I(K_{m,n}) = sum_j C(m-1, j) C(n-1, j) x^j. When one side is empty the
/// graph is max(m, n) isolated vertices and the sum gives (1 - x)^(max - 1).
/// Throws InvalidInput when m = n = 0.
IntPolynomial interior_complete(std::size_t m, std::size_t n);

/// Supplies I(K_{m,n'}) for the recurrence below.
using CompleteLookup = std::function<IntPolynomial(std::size_t m, std::size_t n)>;

/// sum_{k=1..n} (-1)^(k-1) C(n, k) I(K_{m,n-k}). Requires n >= 1.
IntPolynomial complete_recurrence_rhs(std::size_t m, std::size_t n, const CompleteLookup& lookup);

/// sum_{k=1..n} (-1)^(k-1) C(n, k) C(n-k-1, j), which equals C(n-1, j).
/// Requires n >= 1 and 0 <= j <= n-1.
BigInt binom_identity_lhs(long n, long j);

}  // namespace interior

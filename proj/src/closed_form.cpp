#include "interior/closed_form.hpp"

#include <algorithm>
#include <string>

#include "interior/error.hpp"

namespace interior {

BigInt gen_binomial(long a, long j) {
  if (a < -1 || j < 0)
    throw InvalidInput("C(" + std::to_string(a) + ", " + std::to_string(j) + ") is outside the supported range");
  if (a == -1) return j % 2 == 0 ? 1 : -1;
  return binomial(static_cast<std::size_t>(a), static_cast<std::size_t>(j));
}

IntPolynomial interior_complete(std::size_t m, std::size_t n) {
  if (m == 0 && n == 0) throw InvalidInput("K_{0,0} has no vertices");
  const auto top = static_cast<long>(std::max(m, n)) - 1;
  const auto a = static_cast<long>(m) - 1;
  const auto b = static_cast<long>(n) - 1;
  std::vector<BigInt> c(static_cast<std::size_t>(top) + 1);
  for (long j = 0; j <= top; ++j) c[static_cast<std::size_t>(j)] = gen_binomial(a, j) * gen_binomial(b, j);
  return IntPolynomial(std::move(c));
}

IntPolynomial complete_recurrence_rhs(std::size_t m, std::size_t n, const CompleteLookup& lookup) {
  if (n == 0) throw InvalidInput("the complete-graph recurrence needs n >= 1");
  IntPolynomial total;
  for (std::size_t k = 1; k <= n; ++k) {
    IntPolynomial term = binomial(n, k) * lookup(m, n - k);
    if (k % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

BigInt binom_identity_lhs(long n, long j) {
  if (n < 1 || j < 0 || j > n - 1)
    throw InvalidInput("identity needs n >= 1 and 0 <= j <= n-1 (got n=" + std::to_string(n) +
                       ", j=" + std::to_string(j) + ")");
  BigInt total = 0;
  for (long k = 1; k <= n; ++k) {
    BigInt term = binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) * gen_binomial(n - k - 1, j);
    if (k % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace interior

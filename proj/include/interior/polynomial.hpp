#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace interior {

using BigInt = mpz_class;

/// Dense univariate polynomial with exact integer coefficients.
///
/// coeffs()[k] is the coefficient of x^k. Trailing zeros are always stripped,
/// so the zero polynomial has no coefficients and equality is coefficient-wise.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, std::size_t power);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  BigInt coeff(std::size_t k) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  BigInt evaluate(const BigInt& x) const;

  /// Ascending powers: "1 + 2x + x^2", "1 - x", "-3x^4". Zero prints "0".
  std::string to_string() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(IntPolynomial lhs, const BigInt& scalar) { return lhs *= scalar; }
  friend IntPolynomial operator*(const BigInt& scalar, IntPolynomial rhs) { return rhs *= scalar; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void strip();

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// C(n, k) for non-negative arguments; zero when k > n.
BigInt binomial(std::size_t n, std::size_t k);

/// (1 - x)^k.
IntPolynomial one_minus_x_pow(std::size_t k);

/// First `upto + 1` power-series coefficients of numerator / (1 - x)^denom_power.
std::vector<BigInt> series_coeffs(const IntPolynomial& numerator, std::size_t denom_power,
                                  std::size_t upto);

}  // namespace interior

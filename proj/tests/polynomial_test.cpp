#include "interior/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace interior;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

IntPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<BigInt> c(rng() % 5);
  for (auto& x : c) x = coeff(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST(Polynomial, Canonical) {
  EXPECT_TRUE(IntPolynomial({0, 0}).is_zero());
  EXPECT_EQ(IntPolynomial({1, 2, 0}).degree(), 1);
  EXPECT_EQ(IntPolynomial().degree(), -1);
  EXPECT_EQ(IntPolynomial({3, 0, 0}), IntPolynomial{3});
}

TEST(Polynomial, RingOperations) {
  EXPECT_TRUE((IntPolynomial{1, 2} - IntPolynomial{1, 2}).is_zero());
  EXPECT_EQ(IntPolynomial({1, -1}) * IntPolynomial({1, 1}), IntPolynomial({1, 0, -1}));
  EXPECT_EQ(IntPolynomial({1, 1}) * IntPolynomial{1}, IntPolynomial({1, 1}));
  EXPECT_EQ(IntPolynomial({1, 1}) + IntPolynomial({0, -1, 4}), IntPolynomial({1, 0, 4}));
  EXPECT_EQ(-IntPolynomial({1, -2}), IntPolynomial({-1, 2}));
}

TEST(Polynomial, NoOverflow) {
  // (1 + x)^200 has central coefficients far beyond 64 bits.
  IntPolynomial p{1};
  for (int i = 0; i < 200; ++i) p *= IntPolynomial{1, 1};
  EXPECT_EQ(p.coeff(100), binomial(200, 100));
  EXPECT_EQ(p.evaluate(1), BigInt(1) << 200);
}

TEST(Polynomial, Display) {
  EXPECT_EQ(IntPolynomial({1, 2, 1}).to_string(), "1 + 2x + x^2");
  EXPECT_EQ(IntPolynomial({1, -2, 1}).to_string(), "1 - 2x + x^2");
  EXPECT_EQ(IntPolynomial().to_string(), "0");
  EXPECT_EQ(IntPolynomial({0, -1}).to_string(), "-x");
  EXPECT_EQ(IntPolynomial({-3, 0, 0, 5}).to_string(), "-3 + 5x^3");
}

TEST(OneMinusXPow, Examples) {
  EXPECT_EQ(one_minus_x_pow(0), IntPolynomial{1});
  EXPECT_EQ(one_minus_x_pow(1), IntPolynomial({1, -1}));
  EXPECT_EQ(one_minus_x_pow(2), IntPolynomial({1, -2, 1}));
  for (std::size_t k = 1; k < 12; ++k) EXPECT_EQ(one_minus_x_pow(k).evaluate(1), 0);
}

TEST(SeriesCoeffs, Examples) {
  EXPECT_EQ(series_coeffs(IntPolynomial({1, 2}), 4, 2), ints({1, 6, 18}));
  EXPECT_EQ(series_coeffs(IntPolynomial{1}, 2, 3), ints({1, 2, 3, 4}));
  EXPECT_EQ(series_coeffs(IntPolynomial({1, -1}), 1, 2), ints({1, 0, 0}));
  EXPECT_EQ(series_coeffs(IntPolynomial({5, 7}), 0, 3), ints({5, 7, 0, 0}));
  EXPECT_EQ(series_coeffs(IntPolynomial(), 3, 2), ints({0, 0, 0}));
}

TEST(PolynomialProperties, RingAxioms) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolynomialProperties, SeriesCancelsOneFactor) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng);
    const std::size_t k = rng() % 6;
    const std::size_t m = rng() % 8;
    EXPECT_EQ(series_coeffs(p * IntPolynomial({1, -1}), k + 1, m), series_coeffs(p, k, m));
  }
}

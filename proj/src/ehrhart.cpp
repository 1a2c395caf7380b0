#include "interior/ehrhart.hpp"

#include <algorithm>
#include <numeric>

#include "interior/error.hpp"
#include "lattice.hpp"

namespace interior {

bool membership(const BipartiteGraph& g, const DegreePair& p, std::size_t s) {
  if (p.a.size() != g.v_count() || p.b.size() != g.w_count())
    throw InvalidInput("degree pair dimensions do not match the graph");
  const auto sum_a = std::accumulate(p.a.begin(), p.a.end(), std::uint64_t{0});
  const auto sum_b = std::accumulate(p.b.begin(), p.b.end(), std::uint64_t{0});
  if (sum_a != s || sum_b != s) return false;
  return detail::TransportationChecker(g).feasible(p.a, p.b);
}

std::vector<DegreePair> lattice_points(const BipartiteGraph& g, std::size_t s,
                                       const EnumerationOptions& options) {
  detail::PointLayer layer(g, s, options);
  while (layer.dilation() < s) layer.advance();
  std::vector<DegreePair> out;
  out.reserve(layer.size());
  for (std::size_t i = 0; i < layer.size(); ++i) out.push_back(layer.point(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> ehrhart_values(const BipartiteGraph& g, std::size_t m, const EnumerationOptions& options) {
  detail::PointLayer layer(g, m, options);
  std::vector<BigInt> values{BigInt(1)};
  while (layer.dilation() < m) {
    layer.advance();
    values.emplace_back(static_cast<unsigned long>(layer.size()));
  }
  return values;
}

EhrhartProfile ehrhart_profile(const BipartiteGraph& g, const EnumerationOptions& options) {
  if (g.vertex_count() == 0) throw InvalidInput("the interior polynomial needs at least one vertex");

  EhrhartProfile profile;
  profile.n = g.vertex_count() - 1;
  profile.values = ehrhart_values(g, profile.n + 1, options);

  // I_k = sum_{j<=k} (-1)^j C(n, j) eps(k - j), for k = 0..n.
  const auto weights = one_minus_x_pow(profile.n).coeffs();
  std::vector<BigInt> c(profile.n + 1);
  for (std::size_t k = 0; k <= profile.n; ++k)
    for (std::size_t j = 0; j <= k; ++j) c[k] += weights[j] * profile.values[k - j];
  profile.interior = IntPolynomial(std::move(c));

  const auto replay = series_coeffs(profile.interior, profile.n, profile.n + 1);
  if (replay != profile.values)
    throw ConsistencyFailure("interior polynomial " + profile.interior.to_string() +
                             " does not reproduce the lattice count at dilation " +
                             std::to_string(profile.n + 1));
  return profile;
}

IntPolynomial interior_via_ehrhart(const BipartiteGraph& g, const EnumerationOptions& options) {
  return ehrhart_profile(g, options).interior;
}

long affine_dimension(std::span<const DegreePair> points) {
  if (points.empty()) return -1;
  const auto flatten = [](const DegreePair& p) {
    std::vector<mpq_class> row;
    row.reserve(p.a.size() + p.b.size());
    for (auto x : p.a) row.emplace_back(x);
    for (auto x : p.b) row.emplace_back(x);
    return row;
  };

  const auto base = flatten(points.front());
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    auto r = flatten(points[i]);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= base[k];
    rows.push_back(std::move(r));
  }

  // Rank by Gaussian elimination over the rationals.
  long rank = 0;
  const std::size_t cols = base.size();
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[rank]);
    const auto& prow = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const mpq_class f = rows[r][col] / prow[col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= f * prow[k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace interior

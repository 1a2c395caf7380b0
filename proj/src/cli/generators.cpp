#include "interior/cli/generators.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <vector>

#include "interior/error.hpp"

namespace interior::cli {

namespace {

std::size_t parse_count(const std::string& tok, std::string_view spec) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size())
    throw InvalidInput("bad number '" + tok + "' in generator spec '" + std::string(spec) + "'");
  return value;
}

void expect_args(const std::vector<std::string>& args, std::size_t lo, std::size_t hi, std::string_view spec) {
  if (args.size() < lo || args.size() > hi)
    throw InvalidInput("wrong number of arguments in generator spec '" + std::string(spec) + "'");
}

// Vertices numbered 0..k-1 along a path or cycle alternate sides: even
// positions are V vertex pos/2, odd ones W vertex pos/2.
Edge path_edge(std::size_t a, std::size_t b) {
  if (a % 2) std::swap(a, b);
  return {static_cast<std::uint32_t>(a / 2), static_cast<std::uint32_t>(b / 2)};
}

}  // namespace

GeneratedGraph generate(std::string_view spec, std::uint64_t default_seed) {
  std::istringstream in{std::string(spec)};
  std::string family;
  in >> family;
  std::vector<std::string> args;
  for (std::string tok; in >> tok;) args.push_back(tok);

  std::vector<Edge> edges;
  if (family == "complete") {
    expect_args(args, 2, 2, spec);
    const auto m = parse_count(args[0], spec);
    const auto n = parse_count(args[1], spec);
    if (m + n == 0) throw InvalidInput("complete 0 0 has no vertices");
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < n; ++j) edges.push_back({i, j});
    return {BipartiteGraph::build(m, n, edges), std::pair{m, n}};
  }
  if (family == "grid2") {
    expect_args(args, 1, 1, spec);
    const auto k = parse_count(args[0], spec);
    if (k == 0) throw InvalidInput("grid2 needs k >= 1");
    // Column c holds one cell of each color; both are indexed by c. Rungs
    // join V_c to W_c and each pair of adjacent columns adds V_c W_{c+1} and
    // V_{c+1} W_c, one per row.
    for (std::uint32_t c = 0; c < k; ++c) {
      edges.push_back({c, c});
      if (c + 1 < k) {
        edges.push_back({c, c + 1});
        edges.push_back({c + 1, c});
      }
    }
    return {BipartiteGraph::build(k, k, edges), std::nullopt};
  }
  if (family == "path" || family == "cycle") {
    expect_args(args, 1, 1, spec);
    const auto k = parse_count(args[0], spec);
    if (family == "path" && k == 0) throw InvalidInput("path needs k >= 1");
    if (family == "cycle" && (k < 4 || k % 2)) throw InvalidInput("cycle length must be even and at least 4");
    for (std::size_t p = 0; p + 1 < k; ++p) edges.push_back(path_edge(p, p + 1));
    if (family == "cycle") edges.push_back(path_edge(k - 1, 0));
    return {BipartiteGraph::build((k + 1) / 2, k / 2, edges), std::nullopt};
  }
  if (family == "star") {
    expect_args(args, 1, 1, spec);
    const auto n = parse_count(args[0], spec);
    for (std::uint32_t j = 0; j < n; ++j) edges.push_back({0, j});
    return {BipartiteGraph::build(1, n, edges), std::pair{std::size_t{1}, n}};
  }
  if (family == "random") {
    expect_args(args, 3, 4, spec);
    const auto nv = parse_count(args[0], spec);
    const auto nw = parse_count(args[1], spec);
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(args[2], &used);
      if (used != args[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InvalidInput("bad probability '" + args[2] + "' in generator spec '" + std::string(spec) + "'");
    }
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
    const std::uint64_t seed = args.size() == 4 ? parse_count(args[3], spec) : default_seed;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    for (std::uint32_t i = 0; i < nv; ++i)
      for (std::uint32_t j = 0; j < nw; ++j)
        if (coin(rng)) edges.push_back({i, j});
    return {BipartiteGraph::build(nv, nw, edges), std::nullopt};
  }
  throw InvalidInput("unknown generator '" + family + "' (expected complete, grid2, path, cycle, star or random)");
}

}  // namespace interior::cli

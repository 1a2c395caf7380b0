#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "interior/ehrhart.hpp"
#include "interior/graph.hpp"

namespace interior::oracle {

inline BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t nv, std::size_t nw, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < nv; ++i)
    for (std::uint32_t j = 0; j < nw; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return BipartiteGraph::build(nv, nw, edges);
}

/// Random graph that is connected; retries until one is found.
inline BipartiteGraph random_connected_graph(std::mt19937_64& rng, std::size_t nv, std::size_t nw, double p) {
  for (;;) {
    auto g = random_graph(rng, nv, nw, p);
    if (is_connected(g)) return g;
  }
}

inline BipartiteGraph complete(std::size_t m, std::size_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < n; ++j) edges.push_back({i, j});
  return BipartiteGraph::build(m, n, edges);
}

/// Calls `f` on every bipartite graph with the given class sizes (all edge subsets).
inline void for_each_graph(std::size_t nv, std::size_t nw, const std::function<void(const BipartiteGraph&)>& f) {
  const std::size_t slots = nv * nw;
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < slots; ++k)
      if (mask >> k & 1) edges.push_back({static_cast<std::uint32_t>(k / nw), static_cast<std::uint32_t>(k % nw)});
    f(BipartiteGraph::build(nv, nw, edges));
  }
}

/// Largest matching by trying, for each vertex of `side` in turn, to leave it
/// unmatched or to pair it with every free neighbor.
inline std::size_t brute_force_matching_size(const BipartiteGraph& g, Side side) {
  const std::size_t n = g.count(side);
  std::function<std::size_t(std::size_t, Mask)> go = [&](std::size_t i, Mask used) -> std::size_t {
    if (i == n) return 0;
    std::size_t best = go(i + 1, used);
    for (Mask rest = g.neighbors(side, i) & ~used; rest; rest &= rest - 1) {
      const Mask b = rest & (~rest + 1);
      best = std::max(best, 1 + go(i + 1, used | b));
    }
    return best;
  };
  return go(0, 0);
}

/// Whether some subset X of `s` has |X| > |N(X)|, by enumerating subsets.
inline bool has_violator(const BipartiteGraph& g, const VertexSet& s) {
  for (Mask x = s.members; x; x = (x - 1) & s.members)
    if (std::popcount(x) > std::popcount(neighborhood(g, {s.side, x}).members)) return true;
  return false;
}

/// Gale's supply-demand condition: equal totals and a(X) <= b(N(X)) for every
/// X of V. Equivalent to transportation feasibility over uncapacitated edges.
inline bool gale_feasible(const BipartiteGraph& g, const DegreePair& p) {
  const auto sa = std::accumulate(p.a.begin(), p.a.end(), 0ull);
  const auto sb = std::accumulate(p.b.begin(), p.b.end(), 0ull);
  if (sa != sb) return false;
  for (Mask x = 0; x < (Mask{1} << g.v_count()); ++x) {
    unsigned long long supply = 0, demand = 0;
    for (std::size_t i = 0; i < g.v_count(); ++i)
      if (x >> i & 1) supply += p.a[i];
    const Mask nx = neighborhood(g, {Side::V, x}).members;
    for (std::size_t j = 0; j < g.w_count(); ++j)
      if (nx >> j & 1) demand += p.b[j];
    if (supply > demand) return false;
  }
  return true;
}

/// All vectors of length `len` with entries >= 0 summing to `total`.
inline std::vector<std::vector<std::uint32_t>> compositions(std::size_t len, std::uint32_t total) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(len);
  std::function<void(std::size_t, std::uint32_t)> go = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 >= len) {
      if (len == 0) {
        if (left == 0) out.push_back(cur);
        return;
      }
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t x = 0; x <= left; ++x) {
      cur[i] = x;
      go(i + 1, left - x);
    }
  };
  go(0, total);
  return out;
}

/// Lattice points of s * Q_G by scanning the box {0..s}^(V+W) and keeping the
/// points that pass the membership test. Box points whose blocks do not both
/// sum to s fail membership outright, so only those are enumerated.
inline std::vector<DegreePair> box_scan(const BipartiteGraph& g, std::uint32_t s) {
  std::vector<DegreePair> out;
  for (const auto& a : compositions(g.v_count(), s))
    for (const auto& b : compositions(g.w_count(), s)) {
      DegreePair p{a, b};
      if (membership(g, p, s)) out.push_back(std::move(p));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace interior::oracle

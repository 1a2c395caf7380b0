#include "interior/recursion.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "interior/error.hpp"

namespace interior {

namespace {

std::size_t combine(std::size_t seed, std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  return seed ^ (static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::optional<VertexSet> first_leaf(const BipartiteGraph& g) {
  for (Side side : {Side::V, Side::W})
    for (std::size_t i = 0; i < g.count(side); ++i)
      if (g.degree(side, i) == 1) return VertexSet{side, bit(i)};
  return std::nullopt;
}

void check_expansion(std::size_t size, const RecursionOptions& options, const char* what) {
  if (size > options.max_expansion)
    throw ResourceLimit(std::string(what) + " of size " + std::to_string(size) + " would need 2^" +
                        std::to_string(size) + " - 1 terms (limit is " +
                        std::to_string(options.max_expansion) + ")");
}

IntPolynomial signed_term(bool positive, IntPolynomial p) { return positive ? p : -p; }

// Keep the vertices of `root` whose origin index is in the masks.
BipartiteGraph induced_by_origin(const BipartiteGraph& root, Mask v_origin, Mask w_origin) {
  auto keep = [&](Side side, Mask wanted) {
    Mask m = 0;
    const auto org = root.origin(side);
    for (std::size_t i = 0; i < org.size(); ++i)
      if (wanted & bit(org[i])) m |= bit(i);
    return m;
  };
  return induced_subgraph(root, keep(Side::V, v_origin), keep(Side::W, w_origin));
}

}  // namespace

std::size_t KeyHash::operator()(const VertexKey& k) const noexcept { return combine(combine(0, k.v), k.w); }

std::size_t KeyHash::operator()(const EdgeKey& k) const noexcept {
  std::size_t h = k.words.size();
  for (Mask m : k.words) h = combine(h, m);
  return h;
}

VertexKey vertex_key(const BipartiteGraph& g) { return {g.origin_mask(Side::V), g.origin_mask(Side::W)}; }

EdgeKey edge_key(const BipartiteGraph& g) {
  std::vector<std::pair<std::uint32_t, Mask>> rows;
  rows.reserve(g.v_count());
  const auto v_org = g.origin(Side::V);
  for (std::size_t i = 0; i < g.v_count(); ++i)
    rows.emplace_back(v_org[i], g.to_origin(VertexSet{Side::W, g.neighbors(Side::V, i)}));
  std::sort(rows.begin(), rows.end());

  EdgeKey key;
  key.words.reserve(rows.size() + 2);
  key.words.push_back(g.origin_mask(Side::V));
  key.words.push_back(g.origin_mask(Side::W));
  for (const auto& r : rows) key.words.push_back(r.second);
  return key;
}

// ---------------------------------------------------------------------------

IntPolynomial alternating_sum(const BipartiteGraph& g, const VertexSet& s, const EnumerationOptions& options) {
  if (s.members & ~low_bits(g.count(s.side))) throw InvalidInput("vertex set out of range");
  IntPolynomial total;
  // Enumerate all submasks of S, including S itself and the empty set.
  Mask j = s.members;
  for (;;) {
    const bool even = std::popcount(j) % 2 == 0;
    total += signed_term(even, interior_via_ehrhart(delete_vertices(g, {s.side, j}), options));
    if (j == 0) break;
    j = (j - 1) & s.members;
  }
  return total;
}

// ---------------------------------------------------------------------------

NonExpandingRecursion::NonExpandingRecursion(BipartiteGraph root, RecursionOptions options)
    : root_(std::move(root)), options_(options) {}

IntPolynomial NonExpandingRecursion::run() {
  if (root_.vertex_count() == 0) throw InvalidInput("the interior polynomial needs at least one vertex");
  return solve(root_);
}

BipartiteGraph NonExpandingRecursion::subgraph(const VertexKey& key) const {
  return induced_by_origin(root_, key.v, key.w);
}

IntPolynomial NonExpandingRecursion::solve(const BipartiteGraph& g) {
  VertexKey key;
  if (options_.memoize) {
    key = vertex_key(g);
    if (const auto* hit = memo_.find(key)) return *hit;
  }

  IntPolynomial result;
  auto parts = components(g);
  if (parts.size() > 1) {
    result = one_minus_x_pow(parts.size() - 1);
    for (const auto& part : parts) result *= solve(part);
  } else {
    result = solve_connected(g);
  }

  if (options_.memoize) memo_.insert(key, result);
  return result;
}

IntPolynomial NonExpandingRecursion::solve_connected(const BipartiteGraph& g) {
  if (g.vertex_count() == 1) return {1};
  if (auto leaf = first_leaf(g)) return solve(delete_vertices(g, *leaf));

  // Connected and at least two vertices, so every vertex has degree >= 1 and
  // the larger class is non-expanding.
  const Side side = g.v_count() >= g.w_count() ? Side::V : Side::W;
  const Mask all = g.all(side).members;
  check_expansion(g.count(side), options_, "non-expanding set");

  IntPolynomial total;
  for (Mask j = all; j != 0; j = (j - 1) & all) {
    const bool odd = std::popcount(j) % 2 == 1;
    total += signed_term(odd, solve(delete_vertices(g, {side, j})));
  }
  return total;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<Edge>> shortest_cycle(const BipartiteGraph& g) {
  // Vertices as one index space: V side first, then W side.
  const std::size_t nv = g.v_count();
  const std::size_t n = g.vertex_count();
  auto adjacent = [&](std::size_t u) {
    return u < nv ? std::pair{g.neighbors(Side::V, u), nv} : std::pair{g.neighbors(Side::W, u - nv), std::size_t{0}};
  };

  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best_len = kUnseen;
  std::vector<std::size_t> best_walk;

  std::vector<std::size_t> dist(n), parent(n), queue;
  queue.reserve(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::fill(parent.begin(), parent.end(), kUnseen);
    queue.assign(1, root);
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      if (2 * dist[u] >= best_len) break;
      auto [nbrs, offset] = adjacent(u);
      for (; nbrs; nbrs &= nbrs - 1) {
        const std::size_t x = offset + static_cast<std::size_t>(std::countr_zero(nbrs));
        if (dist[x] == kUnseen) {
          dist[x] = dist[u] + 1;
          parent[x] = u;
          queue.push_back(x);
        } else if (x != parent[u] && dist[u] + dist[x] + 1 < best_len) {
          best_len = dist[u] + dist[x] + 1;
          // root .. u, then x .. back towards root.
          best_walk.clear();
          for (std::size_t y = u; y != kUnseen; y = parent[y]) best_walk.push_back(y);
          std::reverse(best_walk.begin(), best_walk.end());
          for (std::size_t y = x; y != root; y = parent[y]) best_walk.push_back(y);
        }
      }
    }
  }
  if (best_len == kUnseen) return std::nullopt;

  std::vector<Edge> cycle;
  cycle.reserve(best_walk.size());
  for (std::size_t k = 0; k < best_walk.size(); ++k) {
    std::size_t a = best_walk[k];
    std::size_t b = best_walk[(k + 1) % best_walk.size()];
    if (a >= nv) std::swap(a, b);
    cycle.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b - nv)});
  }
  return cycle;
}

std::optional<std::vector<Edge>> find_alternating_half(const BipartiteGraph& g) {
  auto cycle = shortest_cycle(g);
  if (!cycle) return std::nullopt;
  const std::size_t len = cycle->size();
  const std::size_t start =
      static_cast<std::size_t>(std::min_element(cycle->begin(), cycle->end()) - cycle->begin());
  std::vector<Edge> half;
  half.reserve(len / 2);
  for (std::size_t k = 0; k < len / 2; ++k) half.push_back((*cycle)[(start + 2 * k) % len]);
  return half;
}

AltCycleRecursion::AltCycleRecursion(BipartiteGraph root, RecursionOptions options)
    : root_(std::move(root)), options_(options) {}

IntPolynomial AltCycleRecursion::run() {
  if (root_.vertex_count() == 0) throw InvalidInput("the interior polynomial needs at least one vertex");
  return solve(root_);
}

BipartiteGraph AltCycleRecursion::subgraph(const EdgeKey& key) const {
  const BipartiteGraph induced = induced_by_origin(root_, key.words.at(0), key.words.at(1));

  // Rows follow ascending V origin; map each origin to its row.
  std::vector<std::pair<std::uint32_t, Mask>> rows;
  const auto v_org = induced.origin(Side::V);
  std::vector<std::uint32_t> sorted(v_org.begin(), v_org.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t r = 0; r < sorted.size(); ++r) rows.emplace_back(sorted[r], key.words.at(r + 2));

  std::vector<Edge> drop;
  const auto w_org = induced.origin(Side::W);
  for (const Edge& e : induced.edges()) {
    const auto row = std::lower_bound(rows.begin(), rows.end(), std::pair{v_org[e.v], Mask{0}});
    if (!(row->second & bit(w_org[e.w]))) drop.push_back(e);
  }
  return delete_edges(induced, drop);
}

IntPolynomial AltCycleRecursion::solve(const BipartiteGraph& g) {
  EdgeKey key;
  if (options_.memoize) {
    key = edge_key(g);
    if (const auto* hit = memo_.find(key)) return *hit;
  }

  IntPolynomial result;
  auto parts = components(g);
  if (parts.size() > 1) {
    result = one_minus_x_pow(parts.size() - 1);
    for (const auto& part : parts) result *= solve(part);
  } else {
    result = solve_connected(g);
  }

  if (options_.memoize) memo_.insert(key, result);
  return result;
}

IntPolynomial AltCycleRecursion::solve_connected(const BipartiteGraph& g) {
  if (g.vertex_count() == 1) return {1};

  if (auto half = find_alternating_half(g)) {
    const std::size_t n = half->size();
    check_expansion(n, options_, "alternating cycle half");
    IntPolynomial total;
    std::vector<Edge> removed;
    const Mask all = low_bits(n);
    for (Mask t = all; t != 0; t = (t - 1) & all) {
      removed.clear();
      for (Mask rest = t; rest; rest &= rest - 1) removed.push_back((*half)[std::countr_zero(rest)]);
      const bool odd = removed.size() % 2 == 1;
      total += signed_term(odd, solve(delete_edges(g, removed)));
    }
    return total;
  }

  // A tree with at least two vertices always has a leaf.
  return solve(delete_vertices(g, *first_leaf(g)));
}

IntPolynomial interior_nonexpanding(const BipartiteGraph& g, const RecursionOptions& options) {
  return NonExpandingRecursion(g, options).run();
}

IntPolynomial interior_altcycle(const BipartiteGraph& g, const RecursionOptions& options) {
  return AltCycleRecursion(g, options).run();
}

}  // namespace interior

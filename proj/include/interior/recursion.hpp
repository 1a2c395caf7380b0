#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "interior/ehrhart.hpp"
#include "interior/graph.hpp"
#include "interior/polynomial.hpp"

namespace interior {

struct RecursionOptions {
  bool memoize = true;
  /// Largest set whose 2^k - 1 subsets one expansion step may sum over.
  std::size_t max_expansion = 24;
};

/// Induced subgraph of the root graph, as origin-index masks.
struct VertexKey {
  Mask v = 0;
  Mask w = 0;

  bool operator==(const VertexKey&) const = default;
};

/// Arbitrary subgraph of the root graph: origin masks of the surviving
/// vertices followed by each surviving V vertex's neighbor mask (origin
/// indices), in ascending origin order.
struct EdgeKey {
  std::vector<Mask> words;

  bool operator==(const EdgeKey&) const = default;
};

struct KeyHash {
  std::size_t operator()(const VertexKey& k) const noexcept;
  std::size_t operator()(const EdgeKey& k) const noexcept;
};

/// Cache of interior polynomials of subgraphs with hit/miss counters.
template <class Key>
class MemoTable {
 public:
  using Map = std::unordered_map<Key, IntPolynomial, KeyHash>;

  const IntPolynomial* find(const Key& key) {
    auto it = map_.find(key);
    if (it == map_.end()) {
      ++misses_;
      return nullptr;
    }
    ++hits_;
    return &it->second;
  }

  void insert(const Key& key, const IntPolynomial& value) { map_.emplace(key, value); }

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }
  std::size_t size() const noexcept { return map_.size(); }
  typename Map::const_iterator begin() const { return map_.begin(); }
  typename Map::const_iterator end() const { return map_.end(); }

 private:
  Map map_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

VertexKey vertex_key(const BipartiteGraph& g);
EdgeKey edge_key(const BipartiteGraph& g);

/// sum over J subset of S of (-1)^|J| I_{G-J}, every term evaluated by the
/// Ehrhart route. Vanishes whenever S is non-expanding and every member of S
/// has degree >= 1.
IntPolynomial alternating_sum(const BipartiteGraph& g, const VertexSet& s,
                              const EnumerationOptions& options = {});

/// Interior polynomial by vertex-deletion recursion over non-expanding sets.
///
/// Per subgraph: split into components with I(G1 + G2) = (1 - x) I(G1) I(G2);
/// a single vertex gives 1; a degree-1 vertex v gives I(G) = I(G - v);
/// otherwise, with S the larger color class,
///   I(G) = sum over nonempty J in S of (-1)^(|J|-1) I(G - J).
/// The memo is keyed on origin masks, so one engine serves one root graph.
class NonExpandingRecursion {
 public:
  explicit NonExpandingRecursion(BipartiteGraph root, RecursionOptions options = {});

  IntPolynomial run();

  const BipartiteGraph& root() const noexcept { return root_; }
  const MemoTable<VertexKey>& memo() const noexcept { return memo_; }
  /// Subgraph of the root described by a memo key.
  BipartiteGraph subgraph(const VertexKey& key) const;

 private:
  IntPolynomial solve(const BipartiteGraph& g);
  IntPolynomial solve_connected(const BipartiteGraph& g);

  BipartiteGraph root_;
  RecursionOptions options_;
  MemoTable<VertexKey> memo_;
};

/// The even-length cycle found by breadth-first search that is shortest, with
/// ties broken towards lower start vertices (V before W). Edges in traversal
/// order; nothing for forests.
std::optional<std::vector<Edge>> shortest_cycle(const BipartiteGraph& g);

/// Every other edge of the shortest cycle, starting from its
/// lexicographically smallest edge; nothing for forests.
std::optional<std::vector<Edge>> find_alternating_half(const BipartiteGraph& g);

/// Interior polynomial by edge-deletion recursion along alternating cycles:
/// for a cycle whose alternate edges are e1..en,
///   I(G) = sum over nonempty T in {e1..en} of (-1)^(|T|-1) I(G \ T).
/// Forests finish with the component product, leaf and single-vertex rules.
class AltCycleRecursion {
 public:
  explicit AltCycleRecursion(BipartiteGraph root, RecursionOptions options = {});

  IntPolynomial run();

  const BipartiteGraph& root() const noexcept { return root_; }
  const MemoTable<EdgeKey>& memo() const noexcept { return memo_; }
  BipartiteGraph subgraph(const EdgeKey& key) const;

 private:
  IntPolynomial solve(const BipartiteGraph& g);
  IntPolynomial solve_connected(const BipartiteGraph& g);

  BipartiteGraph root_;
  RecursionOptions options_;
  MemoTable<EdgeKey> memo_;
};

IntPolynomial interior_nonexpanding(const BipartiteGraph& g, const RecursionOptions& options = {});
IntPolynomial interior_altcycle(const BipartiteGraph& g, const RecursionOptions& options = {});

}  // namespace interior

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "interior/graph.hpp"

namespace interior::cli {

struct GeneratedGraph {
  BipartiteGraph graph;
  /// Set for "complete m n", which admits the closed form.
  std::optional<std::pair<std::size_t, std::size_t>> complete;
};

/// Builds a graph from a generator spec:
///
///   complete <m> <n>             K_{m,n}
///   grid2 <k>                    P_2 x P_k, colored by parity
///   path <k>                     path on k vertices
///   cycle <L>                    cycle of even length L >= 4
///   star <n>                     K_{1,n}
///   random <nV> <nW> <p> [seed]  each edge independently with probability p
///
/// `default_seed` is used by "random" when the spec carries no seed.
/// Throws InvalidInput for unknown families or bad arguments.
GeneratedGraph generate(std::string_view spec, std::uint64_t default_seed = 1);

}  // namespace interior::cli

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "interior/graph.hpp"

namespace interior::cli {

/// Reads the edge-list format:
///
///   c optional comment lines, anywhere
///   p bip <nV> <nW> <nE>
///   e <i> <j>          (exactly nE lines, 1-based, 1 <= i <= nV, 1 <= j <= nW)
///
/// Blank lines are ignored. Structural problems raise ParseError with the line
/// number; endpoints outside the declared ranges raise InvalidEdge and repeated
/// pairs ParallelEdge.
BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph parse_graph_file(const std::filesystem::path& path);

/// Writes `g` in the same format, edges in ascending order.
void write_graph(std::ostream& out, const BipartiteGraph& g);
std::string format_graph(const BipartiteGraph& g);

}  // namespace interior::cli

#include "interior/cli/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "interior/error.hpp"

namespace interior::cli {

namespace {

// Parses the rest of a line as exactly `n` non-negative integers.
std::vector<unsigned long> read_fields(std::istringstream& fields, std::size_t n, std::size_t line_no,
                                       const char* what) {
  std::vector<unsigned long> out;
  std::string tok;
  while (fields >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
      throw ParseError(line_no, std::string("bad number '") + tok + "' in " + what);
    out.push_back(std::stoul(tok));
  }
  if (out.size() != n)
    throw ParseError(line_no, std::string(what) + " expects " + std::to_string(n) + " numbers, got " +
                                  std::to_string(out.size()));
  return out;
}

}  // namespace

BipartiteGraph parse_graph(std::istream& in) {
  std::optional<std::vector<unsigned long>> header;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == 'c') continue;
    last_line = line_no;

    if (tag == "p") {
      if (header) throw ParseError(line_no, "duplicate header");
      std::string kind;
      if (!(fields >> kind) || kind != "bip") throw ParseError(line_no, "header must start with 'p bip'");
      header = read_fields(fields, 3, line_no, "header");
    } else if (tag == "e") {
      if (!header) throw ParseError(line_no, "edge line before the 'p bip' header");
      const auto ij = read_fields(fields, 2, line_no, "edge line");
      const auto nv = (*header)[0];
      const auto nw = (*header)[1];
      if (ij[0] < 1 || ij[0] > nv || ij[1] < 1 || ij[1] > nw)
        throw InvalidEdge("line " + std::to_string(line_no) + ": edge (" + std::to_string(ij[0]) + ", " +
                          std::to_string(ij[1]) + ") outside the declared " + std::to_string(nv) + " x " +
                          std::to_string(nw) + " vertex range");
      if (edges.size() == (*header)[2])
        throw ParseError(line_no, "more edge lines than the " + std::to_string((*header)[2]) + " declared");
      edges.push_back({static_cast<std::uint32_t>(ij[0] - 1), static_cast<std::uint32_t>(ij[1] - 1)});
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }

  if (!header) throw ParseError(line_no, "missing 'p bip' header");
  if (edges.size() != (*header)[2])
    throw ParseError(last_line, "header declares " + std::to_string((*header)[2]) + " edges, found " +
                                    std::to_string(edges.size()));
  return BipartiteGraph::build((*header)[0], (*header)[1], edges);
}

BipartiteGraph parse_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path.string() + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
  out << "p bip " << g.v_count() << ' ' << g.w_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.v + 1 << ' ' << e.w + 1 << '\n';
}

std::string format_graph(const BipartiteGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

}  // namespace interior::cli

#pragma once

// Edge-list text format shared with the CLI:
//   line 1: vertex count n
//   then one "i j" per line; lines starting with '#' and blank lines are
//   ignored; duplicate edges collapse.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "chromatic/base.hpp"
#include "chromatic/graph.hpp"

namespace chromatic {

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string first;
    if (!(row >> first) || first.front() == '#') continue;

    if (n < 0) {
      std::string extra;
      try {
        size_t used = 0;
        n = std::stoll(first, &used);
        if (used != first.size()) throw std::invalid_argument(first);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected vertex count, got '" + first + "'");
      }
      if (row >> extra)
        throw ParseError(line_no, "trailing tokens after vertex count");
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      continue;
    }

    long long a = 0, b = 0;
    std::string extra;
    try {
      size_t used = 0;
      a = std::stoll(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected edge endpoint, got '" + first + "'");
    }
    if (!(row >> b)) throw ParseError(line_no, "edge needs two endpoints");
    if (row >> extra) throw ParseError(line_no, "trailing tokens after edge");
    if (a == b)
      throw ParseError(line_no, "loop at vertex " + std::to_string(a));
    if (a < 1 || a > n || b < 1 || b > n)
      throw ParseError(line_no, "endpoint out of range 1.." +
                                    std::to_string(n));
    edges.emplace_back((int)a, (int)b);
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count line");
  return Graph((int)n, edges);
}

inline Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (Edge e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace chromatic

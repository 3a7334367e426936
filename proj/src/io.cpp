#include "safeflow/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "safeflow/errors.hpp"

namespace safeflow {
namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

FlowDAG read_edge_list(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("empty input");
  std::istringstream header(line);
  long n = 0, m = 0;
  if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError("bad header line: " + line);

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (!next_content_line(in, line)) throw ParseError("expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long tail = 0, head = 0;
    std::string weight;
    if (!(row >> tail >> head >> weight)) throw ParseError("bad edge line: " + line);
    if (tail < 0 || tail >= n || head < 0 || head >= n)
      throw ParseError("vertex id out of range: " + line);
    auto w = parse_rational(weight);
    if (!w) throw ParseError("bad weight: " + weight);
    edges.push_back(Edge{static_cast<int>(tail), static_cast<int>(head), *w});
  }
  return FlowDAG::build(edges, static_cast<int>(n));
}

FlowDAG read_edge_list_file(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const FlowDAG& g) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) {
    out << e.tail << " " << e.head << " " << to_string(e.weight) << "\n";
  }
}

std::string write_edge_list(const FlowDAG& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace safeflow

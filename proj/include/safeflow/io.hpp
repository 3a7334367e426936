#pragma once

#include <iosfwd>
#include <string>

#include "safeflow/flow_dag.hpp"

namespace safeflow {

// Text edge-list interchange format: first non-comment line "n m", then m
// lines "tail head weight". Lines starting with '#' are comments. Weights
// are nonnegative integer or decimal literals, parsed exactly.

/// Throws ParseError on malformed input, plus the build() errors.
FlowDAG read_edge_list(std::istream& in);
FlowDAG read_edge_list_file(const std::string& path);

/// Bit-exact serialization; read_edge_list(write_edge_list(g)) rebuilds g.
void write_edge_list(std::ostream& out, const FlowDAG& g);
std::string write_edge_list(const FlowDAG& g);

}  // namespace safeflow

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "nodal/graph.hpp"
#include "nodal/model.hpp"
#include "nodal/multidegree.hpp"

namespace nodal {

// Malformed input; the message carries the 1-based line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph text format, one item per line, '#' starts a comment:
//   vertex <id> <weight>
//   edge <id> <u> <v>
//   multidegree <v>:<int> ...        (optional, single line, all vertices)
struct GraphFile {
    DualGraph graph;
    std::optional<Multidegree> multidegree;
};

GraphFile read_graph_file(std::istream& in);
GraphFile read_graph_path(const std::string& path);

void write_graph_file(std::ostream& out, const DualGraph& g,
                      const std::optional<Multidegree>& d = std::nullopt);

// Bundle files extend the graph format with
//   coord <edge-id> <side:0|1> <p/q>
//   deg <v>:<int>
//   glue <edge-id> <p/q> <p/q>
GluedLineBundle read_bundle_file(std::istream& in);
GluedLineBundle read_bundle_path(const std::string& path);

void write_bundle_file(std::ostream& out, const GluedLineBundle& b);

// "<v>:<int> ..." with external vertex ids, as on a multidegree line.
Multidegree parse_multidegree(const DualGraph& g, const std::string& text);

std::string format_multidegree(const DualGraph& g, const Multidegree& d);

}  // namespace nodal

#pragma once

#include <iosfwd>
#include <string>

#include "omitlab/hypergraph.hpp"

namespace omitlab {

// Canonical edge-list text format:
//   n m
//   v0 v1 ... (m lines, 0-based, ascending)
// Lines starting with '#' and blank lines are ignored. The writer emits edges
// in lexicographic order, so equal hypergraphs produce identical bytes.
Hypergraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Hypergraph& h);

std::string to_edge_list(const Hypergraph& h);
Hypergraph parse_edge_list(const std::string& text);

Hypergraph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Hypergraph& h);

}  // namespace omitlab

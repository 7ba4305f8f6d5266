#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "omitlab/hypergraph.hpp"

namespace omitlab {

// Link L_H(S). Residues of size at most one cannot live in a Hypergraph, so
// they are only counted; degree() is d_H(S) in either case.
struct LinkResult {
  Hypergraph link;
  std::size_t small_edges = 0;

  std::size_t degree() const noexcept { return link.edge_count() + small_edges; }
};

LinkResult link(const Hypergraph& h, std::span<const Vertex> s);

// Number of edges containing `s`, by direct scan.
std::size_t set_degree(const Hypergraph& h, std::span<const Vertex> s);

// i-th shadow: every (k - i)-subset of some edge. Requires k - i >= 2.
Hypergraph shadow(const Hypergraph& h, std::size_t i);

// Exact degree statistics of a uniform hypergraph.
struct DegreeReport {
  std::size_t k = 0;
  // max_i_degree[i] = Delta_i(H) for 1 <= i <= k - 1; index 0 unused.
  std::vector<std::size_t> max_i_degree;
  std::size_t codegree_max = 0;
  // d(H) = k |E| / n as a fraction (denominator 1 when n == 0).
  std::size_t average_degree_num = 0;
  std::size_t average_degree_den = 1;
  std::size_t max_degree = 0;

  double average_degree() const {
    return static_cast<double>(average_degree_num) /
           static_cast<double>(average_degree_den);
  }
};

DegreeReport degree_profile(const Hypergraph& h);

// Delta_i(H) computed alone (same semantics as in DegreeReport).
std::size_t max_i_degree(const Hypergraph& h, std::size_t i);

struct CycleCensus {
  // counts[j] = number of unordered edge pairs meeting in exactly j vertices,
  // 0 <= j <= k - 1.
  std::vector<std::size_t> counts;
  bool is_linear = true;

  std::size_t total_pairs() const;
};

CycleCensus cycle_census(const Hypergraph& h);

// H (on [n]) box F (n hypergraphs on [m]); vertex (i, v) maps to i * m + v.
Hypergraph cartesian_product(const Hypergraph& h, std::span<const Hypergraph> family);

// Induced sub-hypergraph on `u`, relabelled to [0, |u|) in ascending order.
Hypergraph induced(const Hypergraph& h, std::span<const Vertex> u);

struct RegularityReport {
  bool uniform = true;  // (C, d1)-uniform
  bool regular = true;  // (C, d2)-regular
  std::vector<std::size_t> offending_edges;
  std::vector<Vertex> offending_vertices;
};

RegularityReport regularity_audit(const Hypergraph& h, double c, double d1, double d2);

}  // namespace omitlab

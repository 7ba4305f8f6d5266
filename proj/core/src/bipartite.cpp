#include "omitlab/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <istream>
#include <ostream>
#include <sstream>

#include "omitlab/error.hpp"
#include "omitlab/field.hpp"
#include "omitlab/random.hpp"

namespace omitlab {

BipartiteGraph::BipartiteGraph(std::size_t left, std::size_t right,
                               std::vector<std::vector<Vertex>> adjacency)
    : left_(left), right_(right), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != left_) {
    throw InputError("bipartite adjacency has " + std::to_string(adjacency_.size()) +
                     " rows for " + std::to_string(left_) + " left vertices");
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw InputError("bipartite adjacency repeats a neighbor");
    }
    if (!row.empty() && row.back() >= right_) {
      throw InputError("bipartite neighbor outside the right part");
    }
    edges_ += row.size();
  }
}

bool BipartiteGraph::has_edge(std::size_t left_vertex, Vertex right_vertex) const {
  const auto& row = adjacency_.at(left_vertex);
  return std::binary_search(row.begin(), row.end(), right_vertex);
}

std::vector<std::size_t> BipartiteGraph::right_degrees() const {
  std::vector<std::size_t> deg(right_, 0);
  for (const auto& row : adjacency_)
    for (Vertex r : row) ++deg[r];
  return deg;
}

std::vector<std::vector<Vertex>> BipartiteGraph::transpose() const {
  std::vector<std::vector<Vertex>> t(right_);
  for (std::size_t l = 0; l < left_; ++l)
    for (Vertex r : adjacency_[l]) t[r].push_back(static_cast<Vertex>(l));
  return t;
}

std::optional<std::size_t> BipartiteGraph::left_regular_degree() const {
  if (adjacency_.empty()) return 0;
  const std::size_t d = adjacency_.front().size();
  for (const auto& row : adjacency_)
    if (row.size() != d) return std::nullopt;
  return d;
}

std::optional<std::size_t> BipartiteGraph::right_regular_degree() const {
  const auto deg = right_degrees();
  if (deg.empty()) return 0;
  for (auto d : deg)
    if (d != deg.front()) return std::nullopt;
  return deg.front();
}

BipartiteGraph build_polynomial_graph(std::uint32_t q, std::size_t l,
                                      std::uint64_t max_entries) {
  if (!is_prime(q)) {
    throw UnsupportedModulus("polynomial graph needs a prime q (prime powers are not "
                             "supported), got " + std::to_string(q));
  }
  if (l < 1) throw InputError("polynomial graph needs l >= 1");
  std::uint64_t left = 1;
  for (std::size_t i = 0; i < l; ++i) {
    left *= q;
    if (left * q > max_entries) {
      throw InputError("polynomial graph q^l * q exceeds the memory budget");
    }
  }
  std::vector<std::vector<Vertex>> adj(left);
  for (std::uint64_t idx = 0; idx < left; ++idx) {
    const FieldPoly p = polynomial_from_index(q, l, idx);
    auto& row = adj[idx];
    row.reserve(q);
    for (std::uint32_t x = 0; x < q; ++x) row.push_back(x * q + poly_eval(p, x));
  }
  return BipartiteGraph(left, static_cast<std::size_t>(q) * q, std::move(adj));
}

MixingReport mixing_discrepancy(const BipartiteGraph& g, std::span<const Vertex> x,
                                std::span<const Vertex> y, double lambda) {
  const auto d1 = g.left_regular_degree();
  if (!d1) throw InputError("mixing_discrepancy needs a left-regular graph");
  const VertexSet xs = normalize_vertex_set(x, g.left_count());
  const VertexSet ys = normalize_vertex_set(y, g.right_count());
  std::vector<char> in_y(g.right_count(), 0);
  for (Vertex r : ys) in_y[r] = 1;

  MixingReport rep;
  for (Vertex l : xs)
    for (Vertex r : g.neighbors(l)) rep.edges_between += in_y[r];
  const double sx = static_cast<double>(xs.size());
  const double sy = static_cast<double>(ys.size());
  rep.expected = g.right_count() == 0
                     ? 0.0
                     : static_cast<double>(*d1) * sx * sy / static_cast<double>(g.right_count());
  rep.discrepancy = std::abs(static_cast<double>(rep.edges_between) - rep.expected);
  rep.bound = lambda * std::sqrt(sx * sy);
  rep.pass = rep.discrepancy <= rep.bound + 1e-9 * std::max(1.0, rep.bound);
  return rep;
}

std::optional<BicliqueWitness> k2l_free_check(const BipartiteGraph& g, std::size_t l) {
  const std::size_t m = g.left_count();
  if (m < 2) return std::nullopt;
  const auto by_right = g.transpose();
  std::vector<std::size_t> common(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    std::fill(common.begin() + static_cast<std::ptrdiff_t>(a) + 1, common.end(), 0);
    for (Vertex r : g.neighbors(a))
      for (Vertex b : by_right[r])
        if (b > a) ++common[b];
    for (std::size_t b = a + 1; b < m; ++b) {
      if (common[b] < l) continue;
      BicliqueWitness w{static_cast<Vertex>(a), static_cast<Vertex>(b), {}};
      const auto na = g.neighbors(a);
      const auto nb = g.neighbors(b);
      std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                            std::back_inserter(w.common));
      w.common.resize(l);
      return w;
    }
  }
  return std::nullopt;
}

void write_bipartite(std::ostream& out, const BipartiteGraph& g) {
  out << "BIPARTITE " << g.left_count() << ' ' << g.right_count() << ' ' << g.edge_count()
      << '\n';
  for (std::size_t l = 0; l < g.left_count(); ++l)
    for (Vertex r : g.neighbors(l)) out << l << ' ' << r << '\n';
}

std::string to_bipartite_text(const BipartiteGraph& g) {
  std::ostringstream os;
  write_bipartite(os, g);
  return os.str();
}

BipartiteGraph read_bipartite(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::size_t m = 0, n = 0, e = 0, seen = 0;
  std::vector<std::vector<Vertex>> adj;
  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (!header) {
      std::string tag;
      long long mm = -1, nn = -1, ee = -1;
      if (!(ls >> tag >> mm >> nn >> ee) || tag != "BIPARTITE" || mm < 0 || nn < 0 || ee < 0) {
        throw ParseError("expected header 'BIPARTITE m n_right e'", line_no);
      }
      m = static_cast<std::size_t>(mm);
      n = static_cast<std::size_t>(nn);
      e = static_cast<std::size_t>(ee);
      adj.assign(m, {});
      header = true;
      continue;
    }
    long long a = -1, b = -1;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra) || a < 0 || b < 0 ||
        static_cast<std::size_t>(a) >= m || static_cast<std::size_t>(b) >= n) {
      throw ParseError("expected 'left right' pair in range", line_no);
    }
    adj[static_cast<std::size_t>(a)].push_back(static_cast<Vertex>(b));
    ++seen;
  }
  if (!header) throw ParseError("missing BIPARTITE header", line_no);
  if (seen != e) throw ParseError("edge count does not match header", line_no);
  try {
    return BipartiteGraph(m, n, std::move(adj));
  } catch (const InputError& err) {
    throw ParseError(err.what(), line_no);
  }
}

MixingSweep random_mixing_sweep(const BipartiteGraph& g, double lambda, std::size_t pairs,
                                std::uint64_t seed) {
  MixingSweep out;
  out.pairs = pairs;
  if (g.left_count() == 0 || g.right_count() == 0) return out;
  Rng rng = make_rng(seed, {string_tag("mixing")});
  std::vector<Vertex> left(g.left_count()), right(g.right_count());
  std::iota(left.begin(), left.end(), Vertex{0});
  std::iota(right.begin(), right.end(), Vertex{0});
  std::uniform_int_distribution<std::size_t> sx(1, left.size()), sy(1, right.size());
  for (std::size_t t = 0; t < pairs; ++t) {
    std::shuffle(left.begin(), left.end(), rng);
    std::shuffle(right.begin(), right.end(), rng);
    const std::size_t nx = sx(rng), ny = sy(rng);
    const MixingReport r = mixing_discrepancy(g, std::span<const Vertex>(left.data(), nx),
                                              std::span<const Vertex>(right.data(), ny), lambda);
    if (!r.pass) ++out.violations;
    if (r.bound > 0) out.max_ratio = std::max(out.max_ratio, r.discrepancy / r.bound);
  }
  return out;
}

}  // namespace omitlab

#include "omitlab/fitting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "omitlab/combinatorics.hpp"
#include "omitlab/error.hpp"
#include "omitlab/random.hpp"

namespace omitlab {

void validate_fitting(const FittingFamily& f) {
  const std::size_t m = f.base.edge_count();
  if (f.members.size() != m || f.psi.size() != m) {
    throw InputError("fitting family: need one member and one bijection per base edge");
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t mi = f.base.edge(i).size();
    if (f.members[i].vertex_count() != mi) {
      throw InputError("fitting family: member " + std::to_string(i) + " has " +
                       std::to_string(f.members[i].vertex_count()) + " vertices, expected " +
                       std::to_string(mi));
    }
    std::vector<Vertex> sorted = f.psi[i];
    std::sort(sorted.begin(), sorted.end());
    bool bijective = sorted.size() == mi;
    for (std::size_t j = 0; bijective && j < mi; ++j) bijective = sorted[j] == j;
    if (!bijective) {
      throw InputError("fitting family: psi_" + std::to_string(i) + " is not a bijection");
    }
  }
}

Hypergraph star_member(std::size_t m, std::size_t k, std::size_t l) {
  if (k < l + 1) throw InputError("star member: need k >= l + 1");
  if (m < k) {
    throw InputError("star member: base edge of size " + std::to_string(m) +
                     " is smaller than k = " + std::to_string(k));
  }
  if (k < 2) throw InputError("star member: k must be >= 2");
  std::vector<Edge> edges;
  std::vector<Vertex> rest(m - l - 1);
  std::iota(rest.begin(), rest.end(), static_cast<Vertex>(l + 1));
  for_each_subset<Vertex>(rest, k - l - 1, [&](std::span<const Vertex> extra) {
    Edge e(l + 1);
    std::iota(e.begin(), e.end(), Vertex{0});
    e.insert(e.end(), extra.begin(), extra.end());
    edges.push_back(std::move(e));
    return true;
  });
  return Hypergraph(m, std::move(edges));
}

FittingFamily fitting_family_star(const Hypergraph& base, std::size_t k, std::size_t l,
                                  std::uint64_t seed) {
  FittingFamily f;
  f.base = base;
  f.members.reserve(base.edge_count());
  f.psi.reserve(base.edge_count());
  for (std::size_t i = 0; i < base.edge_count(); ++i) {
    const std::size_t mi = base.edge(i).size();
    f.members.push_back(star_member(mi, k, l));
    std::vector<Vertex> perm(mi);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    Rng rng = make_rng(seed, {string_tag("psi"), i});
    std::shuffle(perm.begin(), perm.end(), rng);
    f.psi.push_back(std::move(perm));
  }
  return f;
}

RealizeReport realize_with_report(const FittingFamily& f) {
  validate_fitting(f);
  RealizeReport r;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < f.base.edge_count(); ++i) {
    const Edge& base_edge = f.base.edge(i);
    std::vector<Vertex> inverse(base_edge.size());
    for (std::size_t j = 0; j < base_edge.size(); ++j) inverse[f.psi[i][j]] = base_edge[j];
    for (const auto& me : f.members[i].edges()) {
      Edge pre;
      pre.reserve(me.size());
      for (Vertex x : me) pre.push_back(inverse[x]);
      std::sort(pre.begin(), pre.end());
      edges.push_back(std::move(pre));
    }
    r.member_edges += f.members[i].edge_count();
  }
  r.hypergraph = Hypergraph(f.base.vertex_count(), std::move(edges));
  return r;
}

Hypergraph realize(const FittingFamily& f) { return realize_with_report(f).hypergraph; }

SubsampleResult subsample_vertices(const Hypergraph& h, const SubsampleOptions& opts) {
  if (!(opts.p > 0.0 && opts.p <= 1.0)) {
    throw InputError("subsample_vertices: p must lie in (0, 1]");
  }
  const std::size_t n = h.vertex_count();
  std::vector<char> in(n);
  for (std::size_t round = 0; round <= opts.max_retries; ++round) {
    Rng rng = make_rng(opts.seed, {string_tag("subsample"), round});
    SubsampleResult r;
    r.p = opts.p;
    r.vertex_window = opts.vertex_window;
    r.degree_window = opts.trace_window;
    r.rejected_rounds = round;
    for (std::size_t v = 0; v < n; ++v) {
      // 53-bit uniform in [0, 1); p == 1 keeps everything.
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      in[v] = u < opts.p;
      if (in[v]) r.kept.push_back(static_cast<Vertex>(v));
    }
    if (!opts.vertex_window.contains(static_cast<double>(r.kept.size()))) continue;
    bool ok = true;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      std::size_t trace = 0;
      for (Vertex v : h.edge(i)) trace += in[v] != 0;
      if (opts.trace_window.contains(static_cast<double>(trace))) continue;
      if (opts.policy == TracePolicy::reject) {
        ok = false;
        break;
      }
      r.pruned_edges.push_back(i);
    }
    if (ok) return r;
  }
  throw SamplingError("subsample_vertices: no sample met the windows in " +
                      std::to_string(opts.max_retries + 1) + " rounds");
}

Hypergraph trace_hypergraph(const Hypergraph& h, const SubsampleResult& s) {
  std::vector<std::int64_t> label(h.vertex_count(), -1);
  for (std::size_t i = 0; i < s.kept.size(); ++i) label.at(s.kept[i]) = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  std::size_t next_pruned = 0;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (next_pruned < s.pruned_edges.size() && s.pruned_edges[next_pruned] == i) {
      ++next_pruned;
      continue;
    }
    Edge t;
    for (Vertex v : h.edge(i))
      if (label[v] >= 0) t.push_back(static_cast<Vertex>(label[v]));
    if (t.size() >= 2) edges.push_back(std::move(t));
  }
  return Hypergraph(s.kept.size(), std::move(edges));
}

}  // namespace omitlab

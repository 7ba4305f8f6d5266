#include "omitlab/omitting_system.hpp"

#include <cmath>
#include <string>

#include "omitlab/bipartite.hpp"
#include "omitlab/constructions.hpp"
#include "omitlab/error.hpp"
#include "omitlab/field.hpp"
#include "omitlab/oracles.hpp"

namespace omitlab {

bool omitting_preflight(std::uint32_t q, std::size_t l, std::size_t k) {
  if (l < 1 || q < 2) return false;
  const double exponent = (static_cast<double>(l) - 1.0) / (static_cast<double>(l) + 1.0);
  return std::pow(static_cast<double>(q), exponent) / 2.0 >= static_cast<double>(k);
}

std::uint32_t smallest_feasible_prime(std::size_t l, std::size_t k) {
  if (l < 2) {
    throw InputError("omitting system: l = " + std::to_string(l) +
                     " gives a trace band that never reaches k");
  }
  for (std::uint64_t q = 2; q < (1ull << 31); ++q) {
    if (is_prime(q) && omitting_preflight(static_cast<std::uint32_t>(q), l, k))
      return static_cast<std::uint32_t>(q);
  }
  throw InputError("omitting system: no feasible prime below 2^31");
}

nlohmann::json OmittingSystemBuild::provenance() const {
  return {
      {"construction", "omitting"},
      {"params", {{"q", options.q}, {"l", options.l}, {"k", options.k},
                  {"strict", options.strict}, {"max_retries", options.max_retries}}},
      {"seed", options.seed},
      {"p", p},
      {"vertex_window", {vertex_window.lo, vertex_window.hi}},
      {"trace_window", {trace_window.lo, trace_window.hi}},
      {"retries", rejected_rounds},
      {"base_edges", base_edges},
      {"pruned_edges", pruned_edges},
      {"fitted_edges", fitted_edges},
      {"kept_vertices", kept_vertices},
      {"coincident_edges", coincident},
      {"vertices", hypergraph.vertex_count()},
      {"edges", hypergraph.edge_count()},
      {"verification", {{"omitting_check", omitting_verified}}},
  };
}

OmittingSystemBuild omitting_system(const OmittingSystemOptions& opts) {
  if (opts.l < 1) throw InputError("omitting system: l must be >= 1");
  if (opts.k < opts.l + 1 || opts.k < 2) {
    throw InputError("omitting system: need k >= l + 1 and k >= 2");
  }
  if (!is_prime(opts.q)) {
    throw UnsupportedModulus("omitting system: q = " + std::to_string(opts.q) +
                             " is not prime");
  }
  if (!omitting_preflight(opts.q, opts.l, opts.k)) {
    throw InputError("omitting system: trace too small, q^{(l-1)/(l+1)}/2 < k for q=" +
                     std::to_string(opts.q) + ", l=" + std::to_string(opts.l) +
                     ", k=" + std::to_string(opts.k));
  }
  OmittingSystemBuild b;
  b.options = opts;
  const BipartiteGraph g = build_polynomial_graph(opts.q, opts.l);
  const Hypergraph base = incidence_hypergraph(g);
  b.base_edges = base.edge_count();

  const double q = opts.q;
  const double l = static_cast<double>(opts.l);
  b.p = std::pow(q, -2.0 / (l + 1.0));
  const double mean_u = b.p * q * q;
  const double mean_trace = b.p * q;  // edge size d1 = q
  b.vertex_window = {mean_u / 2.0, 1.5 * mean_u};
  b.trace_window = {mean_trace / 2.0, 1.5 * mean_trace};

  SubsampleOptions so;
  so.p = b.p;
  so.vertex_window = b.vertex_window;
  so.trace_window = b.trace_window;
  so.seed = opts.seed;
  so.max_retries = opts.max_retries;
  so.policy = opts.strict ? TracePolicy::reject : TracePolicy::prune;
  const SubsampleResult sample = subsample_vertices(base, so);
  b.kept_vertices = sample.kept.size();
  b.rejected_rounds = sample.rejected_rounds;
  b.pruned_edges = sample.pruned_edges.size();

  const Hypergraph traces = trace_hypergraph(base, sample);
  for (const auto& e : traces.edges()) {
    if (e.size() < opts.k) {
      throw InputError("omitting system: trace of size " + std::to_string(e.size()) +
                       " below k = " + std::to_string(opts.k));
    }
  }
  b.fitted_edges = traces.edge_count();
  const FittingFamily family = fitting_family_star(traces, opts.k, opts.l, opts.seed);
  RealizeReport realized = realize_with_report(family);
  b.coincident = realized.coincident();
  b.hypergraph = std::move(realized.hypergraph);

  if (auto w = omitting_check(b.hypergraph, opts.l)) {
    throw VerificationError("omitting system: edges " + std::to_string(w->edges[0]) + " and " +
                            std::to_string(w->edges[1]) + " meet in exactly l vertices");
  }
  b.omitting_verified = true;
  return b;
}

}  // namespace omitlab

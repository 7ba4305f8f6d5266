#include <cmath>
#include <string>

#include "omitlab/error.hpp"
#include "omitlab/hypergraph_ops.hpp"
#include "omitlab/oracles.hpp"

namespace omitlab {

DlrAudit dlr_audit(const Hypergraph& h, double t, double epsilon) {
  if (!(t > 0.0)) throw InputError("dlr_audit: t must be positive");
  DlrAudit a;
  a.n = h.vertex_count();
  a.k = require_uniform(h, "dlr_audit");
  a.t = t;
  a.epsilon = epsilon;
  if (a.k == 0) return a;

  const auto deg = h.vertex_degrees();
  for (std::size_t d : deg) a.max_degree = std::max(a.max_degree, d);
  a.degree_bound = std::pow(t, static_cast<double>(a.k - 1));
  a.degree_margin = a.degree_bound - static_cast<double>(a.max_degree);
  a.degree_ok = a.degree_margin >= 0.0;
  a.all_ok = a.degree_ok;

  const CycleCensus census = cycle_census(h);
  const double n = static_cast<double>(a.n);
  const double k = static_cast<double>(a.k);
  for (std::size_t j = 2; j + 1 <= a.k; ++j) {
    DlrCycleCondition c;
    c.j = j;
    c.count = census.counts[j];
    c.bound = n * std::pow(t, 2.0 * k - static_cast<double>(j) - 1.0 - epsilon);
    c.margin = c.bound - static_cast<double>(c.count);
    c.ok = c.margin >= 0.0;
    a.all_ok = a.all_ok && c.ok;
    a.cycles.push_back(c);
  }
  return a;
}

double dlr_instantiated_t(std::size_t n, std::size_t k, double lambda, std::size_t l) {
  if (k < 2) throw InputError("dlr_instantiated_t: k must be >= 2");
  const double km1 = static_cast<double>(k - 1);
  return std::pow(lambda, 1.0 / km1) *
         std::pow(static_cast<double>(n), (static_cast<double>(l) - 1.0) / km1);
}

DlrAudit dlr_audit_instantiated(const Hypergraph& h, double lambda, std::size_t l,
                                double epsilon) {
  const std::size_t k = require_uniform(h, "dlr_audit");
  // No edges: every hypothesis holds vacuously, any t will do.
  const double t = k == 0 ? 1.0 : dlr_instantiated_t(h.vertex_count(), k, lambda, l);
  DlrAudit a = dlr_audit(h, t, epsilon);
  a.t_instantiated = true;
  return a;
}

}  // namespace omitlab

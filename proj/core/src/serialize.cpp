#include "omitlab/serialize.hpp"

#include <ostream>
#include <string>

#include "omitlab/error.hpp"

namespace omitlab {

using nlohmann::json;

void to_json(json& j, const Hypergraph& h) {
  j = json{{"n", h.vertex_count()}, {"edges", h.edges()}};
}

void from_json(const json& j, Hypergraph& h) {
  try {
    h = Hypergraph(j.at("n").get<std::size_t>(), j.at("edges").get<std::vector<Edge>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("hypergraph json: ") + e.what(), 0);
  }
}

void to_json(json& j, const Witness& w) {
  j = json{{"kind", std::string(to_string(w.kind))},
           {"vertices", w.vertices},
           {"edges", w.edge_values},
           {"edge_indices", w.edges}};
}

void from_json(const json& j, Witness& w) {
  const auto kind = j.at("kind").get<std::string>();
  static const std::pair<const char*, WitnessKind> kinds[] = {
      {"sunflower", WitnessKind::sunflower},
      {"fan", WitnessKind::fan},
      {"omitting-pair", WitnessKind::omitting_pair},
      {"independent-set", WitnessKind::independent_set},
      {"matching", WitnessKind::matching},
  };
  bool found = false;
  for (const auto& [name, k] : kinds) {
    if (kind == name) {
      w.kind = k;
      found = true;
    }
  }
  if (!found) throw ParseError("witness json: unknown kind '" + kind + "'", 0);
  w.vertices = j.at("vertices").get<std::vector<VertexSet>>();
  w.edge_values = j.at("edges").get<std::vector<Edge>>();
  w.edges = j.at("edge_indices").get<std::vector<std::size_t>>();
}

void to_json(json& j, const DegreeReport& r) {
  json maxi = json::object();
  for (std::size_t i = 1; i < r.max_i_degree.size(); ++i)
    maxi[std::to_string(i)] = r.max_i_degree[i];
  j = json{{"k", r.k},
           {"max_i_degree", maxi},
           {"codegree_max", r.codegree_max},
           {"average_degree", {{"num", r.average_degree_num}, {"den", r.average_degree_den}}},
           {"max_degree", r.max_degree}};
}

void to_json(json& j, const CycleCensus& c) {
  j = json{{"counts", c.counts}, {"is_linear", c.is_linear}};
}

void to_json(json& j, const RegularityReport& r) {
  j = json{{"uniform", r.uniform},
           {"regular", r.regular},
           {"offending_edges", r.offending_edges},
           {"offending_vertices", r.offending_vertices}};
}

void to_json(json& j, const GreedyTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({s.index, s.vertex, s.live_vertices, s.live_edges});
  j = json{{"i_max", t.i_max},
           {"completed", t.completed},
           {"independent_set", t.independent_set},
           {"steps", steps}};
}

void to_json(json& j, const DecompositionResult& r) {
  json family = json::array();
  for (const auto& m : r.family) {
    family.push_back({{"edge_size", m.edge_size},
                      {"edge_count", m.hypergraph.edge_count()},
                      {"provenance", m.provenance},
                      {"hypergraph", m.hypergraph}});
  }
  j = json{{"k", r.k}, {"k0", r.k0}, {"lambda", r.lambda}, {"splits", r.splits},
           {"family", family}};
}

void to_json(json& j, const DeletionResult& r) {
  j = json{{"best", r.best},
           {"best_size", r.best.size()},
           {"best_trial", r.best_trial},
           {"trials", r.trials},
           {"mean_sampled", r.mean_sampled},
           {"mean_surviving", r.mean_surviving},
           {"mean_estimate", r.mean_estimate},
           {"mean_repaired", r.mean_repaired}};
}

void to_json(json& j, const ProductResult& r) {
  j = json{{"independent_set", r.independent_set},
           {"size", r.independent_set.size()},
           {"width", r.width},
           {"degree", r.degree},
           {"p", r.p},
           {"target_steps", r.target_steps},
           {"greedy_steps", r.greedy_steps},
           {"shortfall", r.shortfall},
           {"budget_exhausted", r.budget_exhausted},
           {"cycle_deletions", r.cycle_deletions},
           {"column", r.column},
           {"column_size", r.column_size},
           {"g_removals", r.g_removals},
           {"independent_in_h", r.independent_in_h},
           {"independent_in_g", r.independent_in_g}};
}

void to_json(json& j, const ContainmentEstimate& e) {
  j = json{{"trials", e.trials},       {"step", e.step},
           {"mean", e.mean},           {"standard_error", e.standard_error},
           {"benchmark", e.benchmark}, {"min_reached_step", e.min_reached_step}};
}

void to_json(json& j, const IndependenceResult& r) {
  j = json{{"alpha", r.alpha}, {"witness", r.witness}, {"nodes", r.nodes}};
}

void to_json(json& j, const MatchingResult& r) {
  j = json{{"nu", r.size}, {"witness", r.witness}, {"nodes", r.nodes}};
}

void to_json(json& j, const IndecomposabilityVerdict& v) {
  j = json{{"indecomposable", v.indecomposable}, {"i0", v.i0}};
  if (v.witness) j["witness"] = *v.witness;
}

void to_json(json& j, const DlrAudit& a) {
  json cycles = json::array();
  for (const auto& c : a.cycles) {
    cycles.push_back({{"j", c.j}, {"count", c.count}, {"bound", c.bound},
                      {"margin", c.margin}, {"ok", c.ok}});
  }
  j = json{{"n", a.n},
           {"k", a.k},
           {"t", a.t},
           {"epsilon", a.epsilon},
           {"t_instantiated", a.t_instantiated},
           {"max_degree", a.max_degree},
           {"degree_bound", a.degree_bound},
           {"degree_margin", a.degree_margin},
           {"degree_ok", a.degree_ok},
           {"cycles", cycles},
           {"all_ok", a.all_ok}};
}

void to_json(json& j, const SpectrumReport& r) {
  j = json{{"eigenvalues", r.eigenvalues}, {"lambda2", r.lambda2},
           {"tolerance", r.tolerance},     {"rank", r.rank},
           {"gram_residual", r.gram_residual}, {"sweeps", r.sweeps}};
}

void to_json(json& j, const MixingReport& r) {
  j = json{{"edges_between", r.edges_between}, {"expected", r.expected},
           {"discrepancy", r.discrepancy},     {"bound", r.bound},
           {"pass", r.pass}};
}

void write_trace_csv(std::ostream& out, const GreedyTrace& t) {
  out << "step,vertex,live_vertices,live_edges\n";
  for (const auto& s : t.steps)
    out << s.index << ',' << s.vertex << ',' << s.live_vertices << ',' << s.live_edges << '\n';
}

}  // namespace omitlab

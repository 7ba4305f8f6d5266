#include "omitlab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "omitlab/bipartite.hpp"
#include "omitlab/constructions.hpp"
#include "omitlab/detail/parallel.hpp"
#include "omitlab/error.hpp"
#include "omitlab/oracles.hpp"
#include "omitlab/processes.hpp"
#include "omitlab/random.hpp"
#include "omitlab/regular_linear.hpp"
#include "omitlab/spectral.hpp"

namespace omitlab {

using nlohmann::json;

const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds = {
      "greedy-scaling", "omitting-alpha", "decompose-deletion", "spectrum-sweep",
      "mixing-sweep"};
  return kinds;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig c;
  try {
    c.raw = j;
    c.kind = j.at("kind").get<std::string>();
    const auto& kinds = experiment_kinds();
    if (std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end()) {
      throw ParseError("experiment config: unknown kind '" + c.kind + "'", 0);
    }
    if (j.contains("grid")) {
      for (const auto& [key, values] : j.at("grid").items()) {
        if (!values.is_array()) {
          throw ParseError("experiment config: grid entry '" + key + "' must be a list", 0);
        }
        c.grid.emplace_back(key, values.get<std::vector<json>>());
      }
    }
    c.trials = j.value("trials", c.trials);
    c.budget = j.value("budget", c.budget);
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("experiment config: ") + e.what(), 0);
  }
  return c;
}

std::vector<json> ExperimentConfig::cells() const {
  std::vector<json> out;
  if (grid.empty()) return out;
  for (const auto& [key, values] : grid)
    if (values.empty()) return out;
  std::vector<std::size_t> idx(grid.size(), 0);
  for (;;) {
    json cell = json::object();
    for (std::size_t g = 0; g < grid.size(); ++g) cell[grid[g].first] = grid[g].second[idx[g]];
    out.push_back(std::move(cell));
    std::size_t g = grid.size();
    while (g > 0) {
      --g;
      if (++idx[g] < grid[g].second.size()) break;
      idx[g] = 0;
      if (g == 0) return out;
    }
  }
}

namespace {

struct CellOutput {
  BoundTable table;
  std::vector<std::pair<std::string, bool>> checks;
};

std::size_t param(const json& cell, const char* key, std::optional<std::size_t> fallback = {}) {
  if (cell.contains(key)) return cell.at(key).get<std::size_t>();
  if (fallback) return *fallback;
  throw InputError(std::string("experiment cell lacks parameter '") + key + "'");
}

std::string describe(const json& cell) {
  std::string s;
  for (const auto& [key, value] : cell.items()) {
    if (key == "n") continue;
    if (!s.empty()) s += ';';
    s += key + "=" + value.dump();
  }
  return s;
}

void require(CellOutput& out, const std::string& name, bool ok) {
  out.checks.emplace_back(name, ok);
  if (!ok) throw VerificationError("experiment check failed: " + name);
}

CellOutput greedy_scaling(const json& cell, const ExperimentConfig& cfg, std::uint64_t seed) {
  CellOutput out;
  const std::size_t n = param(cell, "n"), k = param(cell, "k"), d = param(cell, "d");
  if (d < 1) throw InputError("greedy-scaling: d must be >= 1");
  const Hypergraph h = regular_linear(n, k, d, derive_seed(seed, {string_tag("instance")}));
  double total = 0.0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const GreedyTrace tr = greedy_independent_set(h, derive_seed(seed, {string_tag("trial"), t}));
    require(out, "greedy_maximal", tr.completed);
    total += static_cast<double>(tr.independent_set.size());
  }
  const double mean = cfg.trials ? total / static_cast<double>(cfg.trials) : 0.0;
  const double dn = static_cast<double>(n);
  const double root = std::pow(static_cast<double>(d), 1.0 / static_cast<double>(k - 1));
  const std::string p = describe(cell);
  out.table.add(n, p, "mean_greedy_size", mean, "spencer:n/d^(1/(k-1))", dn / root);
  out.table.add(n, p, "mean_greedy_size", mean, "bennett-bohman:(log n)^(1/(k-1))*n/d^(1/(k-1))",
                std::pow(std::log(dn), 1.0 / static_cast<double>(k - 1)) * dn / root);
  return out;
}

CellOutput omitting_alpha(const json& cell, const ExperimentConfig& cfg, std::uint64_t seed) {
  CellOutput out;
  const std::size_t n = param(cell, "n"), k = param(cell, "k"), l = param(cell, "l");
  const std::size_t attempts = param(cell, "attempts", 20 * n);
  const Hypergraph h = random_omitting_system(n, k, l, attempts, seed);
  require(out, "omitting_check", !omitting_check(h, l).has_value());
  const auto alpha = max_independent_set_exact(h, cfg.budget);
  const double dn = static_cast<double>(n), dl = static_cast<double>(l);
  const std::string p = describe(cell);
  const double a = static_cast<double>(alpha.alpha);
  out.table.add(n, p, "alpha", a, "upper:n^((l+1)/(2l))*(log n)^(1/l)",
                std::pow(dn, (dl + 1.0) / (2.0 * dl)) * std::pow(std::log(dn), 1.0 / dl));
  out.table.add(n, p, "alpha", a, "lower:max(n^((l+1)/(3l-1)),n^((l+1)/(k-1)))",
                std::max(std::pow(dn, (dl + 1.0) / (3.0 * dl - 1.0)),
                         std::pow(dn, (dl + 1.0) / (static_cast<double>(k) - 1.0))));
  out.table.add(n, p, "alpha", a, "spencer:n/d^(1/(k-1))",
                h.empty() ? dn
                          : dn / std::pow(static_cast<double>(k * h.edge_count()) / dn,
                                          1.0 / static_cast<double>(k - 1)));
  return out;
}

CellOutput decompose_deletion(const json& cell, const ExperimentConfig& cfg, std::uint64_t seed) {
  CellOutput out;
  const std::size_t n = param(cell, "n"), k = param(cell, "k"), l = param(cell, "l");
  const std::size_t k0 = param(cell, "k0", std::min(k, 2 * l + 1));
  const std::size_t lambda = param(cell, "lambda", 2);
  const std::size_t attempts = param(cell, "attempts", 20 * n);
  const Hypergraph h =
      random_omitting_system(n, k, l, attempts, derive_seed(seed, {string_tag("instance")}));
  const DecompositionResult dec = decompose(h, k0, lambda, cfg.budget);
  require(out, "family_size", dec.family.size() <= (std::size_t{1} << (k - k0)));
  require(out, "family_covers", family_covers(h, dec.family));
  std::vector<Hypergraph> members;
  for (const auto& m : dec.family) members.push_back(m.hypergraph);
  const double p = deletion_probability(n, l);
  const DeletionResult del =
      deletion_lower_bound(members, p, std::max<std::size_t>(cfg.trials, 1),
                           derive_seed(seed, {string_tag("deletion")}));
  require(out, "deletion_independent_in_input", h.is_independent(del.best));
  const double dn = static_cast<double>(n), dl = static_cast<double>(l);
  const std::string desc = describe(cell);
  out.table.add(n, desc, "deletion_best", static_cast<double>(del.best.size()),
                "lower:n^((l+1)/(3l-1))", std::pow(dn, (dl + 1.0) / (3.0 * dl - 1.0)));
  out.table.add(n, desc, "family_size", static_cast<double>(dec.family.size()), "cap:2^(k-k0)",
                std::ldexp(1.0, static_cast<int>(k - k0)));
  return out;
}

CellOutput spectrum_sweep(const json& cell, const ExperimentConfig&, std::uint64_t) {
  CellOutput out;
  const auto q = static_cast<std::uint32_t>(param(cell, "q"));
  const std::size_t l = param(cell, "l");
  const BipartiteGraph g = build_polynomial_graph(q, l);
  SpectrumOptions opts;
  opts.tolerance = 1e-8;
  const SpectrumReport rep = spectrum(g, opts);
  const auto expected = polynomial_graph_spectrum(q, l);
  bool match = expected.size() == rep.eigenvalues.size();
  for (std::size_t i = 0; match && i < expected.size(); ++i)
    match = std::abs(expected[i] - rep.eigenvalues[i]) <= 1e-8;
  require(out, "closed_form_spectrum", match);
  const double d1 = static_cast<double>(q);
  const double d2 = std::pow(static_cast<double>(q), static_cast<double>(l) - 1.0);
  const std::string p = describe(cell);
  const std::size_t n = g.left_count() + g.right_count();
  out.table.add(n, p, "lambda2", rep.lambda2, "sqrt(d1)", std::sqrt(d1));
  out.table.add(n, p, "lambda1", rep.eigenvalues.front(), "sqrt(d1*d2)", std::sqrt(d1 * d2));
  return out;
}

CellOutput mixing_sweep(const json& cell, const ExperimentConfig&, std::uint64_t seed) {
  CellOutput out;
  const auto q = static_cast<std::uint32_t>(param(cell, "q"));
  const std::size_t l = param(cell, "l");
  const std::size_t pairs = param(cell, "pairs", 1000);
  const BipartiteGraph g = build_polynomial_graph(q, l);
  const MixingSweep sweep = random_mixing_sweep(g, spectrum(g).lambda2, pairs, seed);
  require(out, "mixing_all_pass", sweep.violations == 0);
  out.table.add(g.left_count() + g.right_count(), describe(cell), "max_discrepancy_over_bound",
                sweep.max_ratio, "mixing:1", 1.0);
  return out;
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& config, std::uint64_t seed,
                                 std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  const auto cells = config.cells();
  std::vector<CellOutput> outputs(cells.size());
  detail::parallel_for(cells.size(), jobs, [&](std::size_t i) {
    const std::uint64_t cell_seed = derive_seed(seed, {string_tag(config.kind), i});
    const json& c = cells[i];
    if (config.kind == "greedy-scaling") {
      outputs[i] = greedy_scaling(c, config, cell_seed);
    } else if (config.kind == "omitting-alpha") {
      outputs[i] = omitting_alpha(c, config, cell_seed);
    } else if (config.kind == "decompose-deletion") {
      outputs[i] = decompose_deletion(c, config, cell_seed);
    } else if (config.kind == "spectrum-sweep") {
      outputs[i] = spectrum_sweep(c, config, cell_seed);
    } else if (config.kind == "mixing-sweep") {
      outputs[i] = mixing_sweep(c, config, cell_seed);
    } else {
      throw InputError("unknown experiment kind '" + config.kind + "'");
    }
  });
  ExperimentOutcome result;
  result.record.command = "experiment";
  result.record.parameters = config.raw;
  result.record.seed = seed;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    result.table.append(outputs[i].table);
    for (const auto& [name, ok] : outputs[i].checks) {
      const std::string key = "cell" + std::to_string(i) + ":" + name;
      auto it = result.record.verification.find(key);
      result.record.verification[key] = it == result.record.verification.end() ? ok : (it->second && ok);
    }
  }
  result.record.verification["ratios_finite_positive"] = result.table.ratios_finite_positive();
  result.record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace omitlab

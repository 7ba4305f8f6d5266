#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

#include <omitlab/bipartite.hpp>
#include <omitlab/combinatorics.hpp>
#include <omitlab/constructions.hpp>
#include <omitlab/edge_list.hpp>
#include <omitlab/error.hpp>
#include <omitlab/experiment.hpp>
#include <omitlab/hypergraph_ops.hpp>
#include <omitlab/omitting_system.hpp>
#include <omitlab/oracles.hpp>
#include <omitlab/processes.hpp>
#include <omitlab/random.hpp>
#include <omitlab/regular_linear.hpp>
#include <omitlab/serialize.hpp>
#include <omitlab/spectral.hpp>

#include "staging.hpp"

namespace omitlab::cli {

using nlohmann::json;

std::string Globals::resolved_out_dir() const {
  if (const char* env = std::getenv("OMITLAB_OUT"); env && *env) return env;
  return out_dir;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

void check(RunRecord& record, const std::string& name, bool ok) {
  record.verification[name] = ok;
  if (!ok) throw VerificationError(record.command + ": check '" + name + "' failed");
}

json nullable(const std::optional<Witness>& w) { return w ? json(*w) : json(nullptr); }

// Bipartite graph from --q/--l, or from a file when `input` is set.
BipartiteGraph bipartite_source(std::uint32_t q, std::size_t l, const std::string& input) {
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw InputError("cannot open " + input);
    return read_bipartite(in);
  }
  return build_polynomial_graph(q, l);
}

// ---- construct -----------------------------------------------------------

struct ConstructOptions {
  std::string name;
  std::size_t k = 3, l = 1, lambda = 3, m = 0, n = 0, d = 0;
  std::uint32_t q = 0;
  bool strict = false;
  std::size_t max_retries = 1000;
};

void finish_construct(const Globals& g, RunRecord& record, const std::string& stem,
                      const Hypergraph& h, Clock::time_point start) {
  record.parameters["vertices"] = h.vertex_count();
  record.parameters["edges"] = h.edge_count();
  Staging staging(g.resolved_out_dir());
  staging.artifact(stem + ".edges", to_edge_list(h));
  record.wall_seconds = seconds_since(start);
  staging.commit(record, stem);
  print(record.to_json());
}

int construct(const Globals& g, const std::string& kind, const ConstructOptions& o) {
  const auto start = Clock::now();
  RunRecord record;
  record.command = "construct " + kind;
  record.seed = g.seed;
  const std::string stem = o.name.empty() ? kind : o.name;

  if (kind == "sunflower") {
    record.parameters = {{"k", o.k}, {"l", o.l}, {"lambda", o.lambda}};
    const Hypergraph h = sunflower(o.k, o.l, o.lambda);
    check(record, "edge_count", h.edge_count() == o.lambda);
    if (o.lambda >= 2) {
      check(record, "sunflower_detected",
            contains_sunflower(h, o.l, o.lambda, g.budget).has_value());
    }
    finish_construct(g, record, stem, h, start);
  } else if (kind == "fan") {
    record.parameters = {{"k", o.k}};
    const Hypergraph h = fan(o.k);
    check(record, "edge_count", h.edge_count() == o.k + 1);
    check(record, "fan_detected", contains_fan(h, g.budget).has_value());
    finish_construct(g, record, stem, h, start);
  } else if (kind == "l") {
    record.parameters = {{"m", o.m}, {"n", o.n}, {"k", o.k}};
    const Hypergraph h = l_construction(o.m, o.n, o.k);
    check(record, "edge_count",
          h.edge_count() == binomial(o.m, o.k - 1) * binomial(o.n, 2));
    check(record, "fan_free", !contains_fan(h, g.budget).has_value());
    finish_construct(g, record, stem, h, start);
  } else if (kind == "linear-regular") {
    record.parameters = {{"n", o.n}, {"k", o.k}, {"d", o.d}};
    RegularLinearStats stats;
    const Hypergraph h = regular_linear(o.n, o.k, o.d, g.seed, {}, &stats);
    const auto deg = h.vertex_degrees();
    check(record, "regular",
          std::all_of(deg.begin(), deg.end(), [&](std::size_t x) { return x == o.d; }));
    check(record, "linear", h.empty() || cycle_census(h).is_linear);
    record.parameters["restarts_used"] = stats.restarts_used;
    record.parameters["permutations_tried"] = stats.permutations_tried;
    finish_construct(g, record, stem, h, start);
  } else if (kind == "polygraph") {
    record.parameters = {{"q", o.q}, {"l", o.l}};
    const BipartiteGraph bg = build_polynomial_graph(o.q, o.l);
    const auto right_deg = saturating_pow(o.q, o.l - 1);
    check(record, "left_regular", bg.left_regular_degree() == std::optional<std::size_t>(o.q));
    check(record, "right_regular", bg.right_regular_degree() == std::optional<std::size_t>(right_deg));
    check(record, "k2l_free", !k2l_free_check(bg, o.l).has_value());
    record.parameters["left"] = bg.left_count();
    record.parameters["right"] = bg.right_count();
    record.parameters["edges"] = bg.edge_count();
    Staging staging(g.resolved_out_dir());
    staging.artifact(stem + ".bip", to_bipartite_text(bg));
    record.wall_seconds = seconds_since(start);
    staging.commit(record, stem);
    print(record.to_json());
  } else if (kind == "incidence") {
    record.parameters = {{"q", o.q}, {"l", o.l}};
    const BipartiteGraph bg = build_polynomial_graph(o.q, o.l);
    const Hypergraph h = incidence_hypergraph(bg);
    check(record, "uniform", h.uniformity() == std::optional<std::size_t>(o.q));
    check(record, "edge_count", h.edge_count() == bg.left_count());
    const CycleCensus c = cycle_census(h);
    bool system = true;
    for (std::size_t j = o.l; j < c.counts.size(); ++j) system = system && c.counts[j] == 0;
    check(record, "intersections_below_l", system);
    finish_construct(g, record, stem, h, start);
  } else if (kind == "omitting") {
    OmittingSystemOptions opts;
    opts.l = o.l;
    opts.k = o.k;
    opts.q = o.q ? o.q : smallest_feasible_prime(o.l, o.k);
    opts.seed = g.seed;
    opts.strict = o.strict;
    opts.max_retries = o.max_retries;
    const OmittingSystemBuild b = omitting_system(opts);
    record.parameters = b.provenance();
    check(record, "omitting_check", b.omitting_verified);
    finish_construct(g, record, stem, b.hypergraph, start);
  } else {
    throw InputError("unknown construction '" + kind + "'");
  }
  return 0;
}

void add_construct(CLI::App& app, Globals& g, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("construct", "Build a named construction and write an edge list");
  cmd->require_subcommand(1);
  auto o = std::make_shared<ConstructOptions>();
  cmd->add_option("--name", o->name, "Output file stem (defaults to the construction name)");

  auto leaf = [&, o](const std::string& kind, const std::string& help) {
    auto* s = cmd->add_subcommand(kind, help);
    s->callback([&g, &action, o, kind] { action = [&g, o, kind] { return construct(g, kind, *o); }; });
    return s;
  };
  auto* sf = leaf("sunflower", "Sunflower S_lambda^k(l)");
  sf->add_option("--k", o->k)->required();
  sf->add_option("--l", o->l, "Core size")->required();
  sf->add_option("--lambda", o->lambda, "Petal count")->required();
  auto* fn = leaf("fan", "k-Fan");
  fn->add_option("--k", o->k)->required();
  auto* lc = leaf("l", "L-construction L_{m,n}");
  lc->add_option("--m", o->m)->required();
  lc->add_option("--n", o->n)->required();
  lc->add_option("--k", o->k)->required();
  auto* lr = leaf("linear-regular", "d-regular linear k-graph");
  lr->add_option("--n", o->n)->required();
  lr->add_option("--k", o->k)->required();
  lr->add_option("--d", o->d)->required();
  auto* pg = leaf("polygraph", "Polynomial bipartite graph G(q^l, q^2, 2, l)");
  pg->add_option("--q", o->q)->required();
  pg->add_option("--l", o->l)->required();
  auto* ic = leaf("incidence", "Incidence hypergraph of the polynomial graph");
  ic->add_option("--q", o->q)->required();
  ic->add_option("--l", o->l)->required();
  auto* om = leaf("omitting", "Subsampled, fitted omitting system");
  om->add_option("--q", o->q, "Prime modulus (0 picks the smallest feasible)");
  om->add_option("--l", o->l)->default_val(2);
  om->add_option("--k", o->k)->default_val(3);
  om->add_flag("--strict", o->strict, "Resample until every trace is in band");
  om->add_option("--max-retries", o->max_retries);
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeOptions {
  std::string input;
  std::vector<std::size_t> omitting;
  std::vector<std::string> sunflower;
  bool fan = false;
};

std::pair<std::size_t, std::size_t> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    return {std::stoul(s.substr(0, comma)), std::stoul(s.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw InputError("expected 'core,petals', got '" + s + "'");
  }
}

int analyze(const Globals& g, const AnalyzeOptions& o) {
  const auto start = Clock::now();
  const Hypergraph h = load_edge_list(o.input);
  json report = {{"input", o.input},
                 {"n", h.vertex_count()},
                 {"m", h.edge_count()},
                 {"collapsed_duplicates", h.collapsed_duplicates()}};
  report["uniformity"] = h.uniformity() ? json(*h.uniformity()) : json(nullptr);
  if (h.uniformity()) {
    const DegreeReport d = degree_profile(h);
    const CycleCensus c = cycle_census(h);
    report["degree_profile"] = d;
    report["cycle_census"] = c;
    report["is_linear"] = c.is_linear;
    report["codegree"] = d.codegree_max;
  }
  json omitting = json::array();
  for (std::size_t l : o.omitting)
    omitting.push_back({{"l", l}, {"witness", nullable(omitting_check(h, l))}});
  report["omitting"] = omitting;
  json sunflowers = json::array();
  for (const auto& s : o.sunflower) {
    const auto [core, petals] = parse_pair(s);
    sunflowers.push_back({{"core_size", core},
                          {"petals", petals},
                          {"witness", nullable(contains_sunflower(h, core, petals, g.budget))}});
  }
  report["sunflower"] = sunflowers;
  if (o.fan) report["fan"] = nullable(contains_fan(h, g.budget));

  RunRecord record;
  record.command = "analyze";
  record.seed = g.seed;
  record.parameters = {{"input", o.input},
                       {"omitting", o.omitting},
                       {"sunflower", o.sunflower},
                       {"fan", o.fan}};
  record.verification["input_parsed"] = true;
  const std::string stem = stem_of(o.input) + ".analyze";
  Staging staging(g.resolved_out_dir());
  staging.artifact(stem + ".json", report.dump(2) + "\n");
  record.wall_seconds = seconds_since(start);
  staging.commit(record, stem);
  print(report);
  return 0;
}

// ---- greedy / alpha / decompose -----------------------------------------

struct GreedyOptions {
  std::string input;
  std::optional<std::size_t> stop_at;
  std::size_t trials = 1;
};

int greedy(const Globals& g, const GreedyOptions& o) {
  const auto start = Clock::now();
  const Hypergraph h = load_edge_list(o.input);
  RunRecord record;
  record.command = "greedy";
  record.seed = g.seed;
  record.parameters = {{"input", o.input}, {"trials", o.trials}};
  if (o.stop_at) record.parameters["stop_at"] = *o.stop_at;
  if (o.trials == 0) throw InputError("greedy: --trials must be >= 1");

  json runs = json::array();
  std::string first_csv;
  double total = 0.0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const GreedyTrace tr = greedy_independent_set(h, derive_seed(g.seed, {t}), o.stop_at);
    check(record, "independent", h.is_independent(tr.independent_set));
    total += static_cast<double>(tr.independent_set.size());
    if (t == 0) {
      std::ostringstream csv;
      write_trace_csv(csv, tr);
      first_csv = csv.str();
    }
    runs.push_back({{"trial", t},
                    {"size", tr.independent_set.size()},
                    {"i_max", tr.i_max},
                    {"completed", tr.completed},
                    {"independent_set", tr.independent_set}});
  }
  const json report = {{"runs", runs}, {"mean_size", total / static_cast<double>(o.trials)}};
  const std::string stem = stem_of(o.input) + ".greedy";
  Staging staging(g.resolved_out_dir());
  staging.artifact(stem + ".json", report.dump(2) + "\n");
  staging.artifact(stem + ".trace.csv", first_csv);
  record.wall_seconds = seconds_since(start);
  staging.commit(record, stem);
  print(report);
  return 0;
}

struct AlphaOptions {
  std::string input;
  std::size_t max_vertices = 64;
  bool matching = false;
};

int alpha(const Globals& g, const AlphaOptions& o) {
  const auto start = Clock::now();
  const Hypergraph h = load_edge_list(o.input);
  RunRecord record;
  record.command = "alpha";
  record.seed = g.seed;
  record.parameters = {{"input", o.input}, {"budget", g.budget}, {"matching", o.matching}};
  const IndependenceResult r = max_independent_set_exact(h, g.budget, o.max_vertices);
  check(record, "witness_valid", validate(r.witness, h));
  json report = {{"alpha", r}};
  if (o.matching) {
    const MatchingResult mr = matching_number_exact(h, g.budget);
    check(record, "matching_witness_valid", validate(mr.witness, h));
    report["matching"] = mr;
  }
  const std::string stem = stem_of(o.input) + ".alpha";
  Staging staging(g.resolved_out_dir());
  staging.artifact(stem + ".json", report.dump(2) + "\n");
  record.wall_seconds = seconds_since(start);
  staging.commit(record, stem);
  print(report);
  return 0;
}

struct DecomposeOptions {
  std::string input;
  std::size_t k0 = 2;
  std::size_t lambda = 2;
  std::size_t deletion_trials = 0;
  std::optional<std::size_t> l;
};

int decompose_cmd(const Globals& g, const DecomposeOptions& o) {
  const auto start = Clock::now();
  const Hypergraph h = load_edge_list(o.input);
  RunRecord record;
  record.command = "decompose";
  record.seed = g.seed;
  record.parameters = {{"input", o.input}, {"k0", o.k0}, {"lambda", o.lambda},
                       {"deletion_trials", o.deletion_trials}};
  const DecompositionResult dec = decompose(h, o.k0, o.lambda, g.budget);
  const std::size_t k = dec.k;
  check(record, "family_size", k < o.k0 || dec.family.size() <= (std::size_t{1} << (k - o.k0)));
  check(record, "family_covers", family_covers(h, dec.family));
  json report = {{"decomposition", dec}};

  const std::string stem = stem_of(o.input) + ".decompose";
  Staging staging(g.resolved_out_dir());
  for (std::size_t i = 0; i < dec.family.size(); ++i)
    staging.artifact(stem + ".member" + std::to_string(i) + ".edges",
                     to_edge_list(dec.family[i].hypergraph));

  if (o.deletion_trials > 0) {
    if (!o.l) throw InputError("decompose: --deletion-trials needs --l");
    std::vector<Hypergraph> members;
    for (const auto& m : dec.family) members.push_back(m.hypergraph);
    const double p = deletion_probability(h.vertex_count(), *o.l);
    const DeletionResult del = deletion_lower_bound(members, p, o.deletion_trials,
                                                    derive_seed(g.seed, {string_tag("deletion")}),
                                                    g.jobs);
    check(record, "deletion_independent", h.is_independent(del.best));
    report["deletion"] = del;
    report["deletion"]["p"] = p;
  }
  staging.artifact(stem + ".json", report.dump(2) + "\n");
  record.wall_seconds = seconds_since(start);
  staging.commit(record, stem);
  print(report);
  return 0;
}

// ---- ramsey-fan ----------------------------------------------------------

struct RamseyOptions {
  std::size_t t = 0;
  std::size_t k = 3;
  bool verify = false;
};

int ramsey_fan(const Globals& g, const RamseyOptions& o) {
  const auto start = Clock::now();
  const auto [m, n] = ramsey_fan_parameters(o.t, o.k);
  const Hypergraph h = l_construction(m, n, o.k);
  json report = {{"t", o.t},
                 {"k", o.k},
                 {"m", m},
                 {"n", n},
                 {"vertices", h.vertex_count()},
                 {"edges", h.edge_count()},
                 {"degenerate", h.empty()},
                 {"lower_bound", m * n + 1},
                 {"upper_bound", o.t * (o.t - 1) + 1},
                 {"statement", "r_k(F^k, t) > " + std::to_string(m * n)},
                 {"verified", false}};
  RunRecord record;
  record.command = "ramsey-fan";
  record.seed = g.seed;
  record.parameters = {{"t", o.t}, {"k", o.k}, {"verify", o.verify}};

  if (o.verify) {
    try {
      if (h.vertex_count() > 64) {
        throw BudgetExceeded("L_{m,n} has " + std::to_string(h.vertex_count()) +
                             " vertices; the exact oracle handles at most 64");
      }
      const auto fan_witness = contains_fan(h, g.budget);
      const IndependenceResult a = max_independent_set_exact(h, g.budget);
      report["alpha"] = a.alpha;
      report["alpha_witness"] = a.witness;
      report["fan_witness"] = nullable(fan_witness);
      check(record, "fan_free", !fan_witness.has_value());
      check(record, "alpha_below_t", a.alpha + 1 <= o.t);
      report["verified"] = true;
    } catch (const BudgetExceeded& e) {
      report["refusal"] = std::string("verification refused: ") + e.what();
      print(report);
      std::cerr << "budget exhausted: " << e.what() << '\n';
      return 3;
    }
  }
  const std::string stem = "ramsey-fan-t" + std::to_string(o.t) + "-k" + std::to_string(o.k);
  Staging staging(g.resolved_out_dir());
  staging.artifact(stem + ".edges", to_edge_list(h));
  staging.sidecar(stem + ".json", report.dump(2) + "\n");
  record.wall_seconds = seconds_since(start);
  staging.commit(record, stem);
  print(report);
  return 0;
}

// ---- spectrum / mixing ---------------------------------------------------

struct SpectralOptions {
  std::uint32_t q = 3;
  std::size_t l = 2;
  std::string input;
  double tolerance = 1e-8;
  std::size_t pairs = 1000;
};

int spectrum_cmd(const Globals& g, const SpectralOptions& o) {
  const auto start = Clock::now();
  const BipartiteGraph bg = bipartite_source(o.q, o.l, o.input);
  RunRecord record;
  record.command = "spectrum";
  record.seed = g.seed;
  record.parameters = {{"q", o.q}, {"l", o.l}, {"input", o.input}, {"tolerance", o.tolerance}};
  SpectrumOptions opts;
  opts.tolerance = o.tolerance;
  const SpectrumReport rep = spectrum(bg, opts);
  json report = rep;
  if (o.input.empty()) {
    const auto expected = polynomial_graph_spectrum(o.q, o.l);
    double err = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i)
      err = std::max(err, std::abs(expected[i] - rep.eigenvalues.at(i)));
    report["closed_form_max_error"] = err;
    check(record, "closed_form_spectrum",
          expected.size() == rep.eigenvalues.size() && err <= o.tolerance);
  }
  std::ostringstream csv;
  write_spectrum_csv(csv, rep);
  const std::string stem =
      o.input.empty() ? "spectrum-q" + std::to_string(o.q) + "-l" + std::to_string(o.l)
                      : stem_of(o.input) + ".spectrum";
  Staging staging(g.resolved_out_dir());
  // Jacobi output is not bit-stable across platforms, so it is kept out of the digests.
  staging.sidecar(stem + ".csv", csv.str());
  staging.sidecar(stem + ".json", report.dump(2) + "\n");
  record.wall_seconds = seconds_since(start);
  staging.commit(record, stem);
  print(report);
  return 0;
}

int mixing_cmd(const Globals& g, const SpectralOptions& o) {
  const auto start = Clock::now();
  const BipartiteGraph bg = bipartite_source(o.q, o.l, o.input);
  RunRecord record;
  record.command = "mixing";
  record.seed = g.seed;
  record.parameters = {{"q", o.q}, {"l", o.l}, {"input", o.input}, {"pairs", o.pairs}};
  const double lambda = spectrum(bg).lambda2;
  const MixingSweep sweep = random_mixing_sweep(bg, lambda, o.pairs, g.seed);
  const json report = {{"lambda", lambda},
                       {"pairs", o.pairs},
                       {"violations", sweep.violations},
                       {"max_discrepancy_over_bound", sweep.max_ratio}};
  check(record, "mixing_all_pass", sweep.violations == 0);
  const std::string stem = "mixing-q" + std::to_string(o.q) + "-l" + std::to_string(o.l);
  Staging staging(g.resolved_out_dir());
  staging.sidecar(stem + ".json", report.dump(2) + "\n");
  record.wall_seconds = seconds_since(start);
  staging.commit(record, stem);
  print(report);
  return 0;
}

// ---- experiment ----------------------------------------------------------

int experiment(const Globals& g, const std::string& path) {
  const auto start = Clock::now();
  const ExperimentConfig config = ExperimentConfig::from_json(json::parse(read_text(path)));
  const std::uint64_t seed = config.seed.value_or(g.seed);
  const std::string stem = stem_of(path);
  ExperimentOutcome out;
  try {
    out = run_experiment(config, seed, g.jobs);
  } catch (const VerificationError& e) {
    RunRecord failed;
    failed.command = "experiment";
    failed.parameters = config.raw;
    failed.parameters["error"] = e.what();
    failed.seed = seed;
    failed.verification["grid"] = false;
    failed.wall_seconds = seconds_since(start);
    Staging staging(g.resolved_out_dir());
    staging.commit(failed, stem);
    throw;
  }
  if (!out.record.verification.count("ratios_finite_positive") ||
      !out.record.verification.at("ratios_finite_positive")) {
    throw VerificationError("experiment: non-finite or non-positive ratio in the table");
  }
  Staging staging(g.resolved_out_dir());
  staging.artifact(stem + ".csv", out.table.to_csv());
  out.record.wall_seconds = seconds_since(start);
  staging.commit(out.record, stem);
  std::cout << out.table.to_csv();
  return 0;
}

}  // namespace

void register_commands(CLI::App& app, Globals& g, std::function<int()>& action) {
  app.add_option("--seed", g.seed, "Master seed")->default_val(0);
  app.add_option("--budget", g.budget, "Oracle node budget")->default_val(g.budget);
  app.add_option("--jobs", g.jobs, "Worker threads")->default_val(1);
  app.add_option("--out-dir", g.out_dir, "Output directory (OMITLAB_OUT overrides)");

  add_construct(app, g, action);

  {
    auto o = std::make_shared<AnalyzeOptions>();
    auto* s = app.add_subcommand("analyze", "Degree, cycle and pattern report for an edge list");
    s->add_option("input", o->input)->required();
    s->add_option("--omitting", o->omitting, "Run omitting_check at this l (repeatable)");
    s->add_option("--sunflower", o->sunflower, "core,petals (repeatable)");
    s->add_flag("--fan", o->fan, "Search for a k-Fan");
    s->callback([&g, &action, o] { action = [&g, o] { return analyze(g, *o); }; });
  }
  {
    auto o = std::make_shared<GreedyOptions>();
    auto* s = app.add_subcommand("greedy", "Random greedy independent set process");
    s->add_option("input", o->input)->required();
    s->add_option("--stop-at", o->stop_at, "Stop after this many steps");
    s->add_option("--trials", o->trials)->default_val(1);
    s->callback([&g, &action, o] { action = [&g, o] { return greedy(g, *o); }; });
  }
  {
    auto o = std::make_shared<AlphaOptions>();
    auto* s = app.add_subcommand("alpha", "Exact independence number");
    s->add_option("input", o->input)->required();
    s->add_option("--max-vertices", o->max_vertices)->default_val(64);
    s->add_flag("--matching", o->matching, "Also compute the exact matching number");
    s->callback([&g, &action, o] { action = [&g, o] { return alpha(g, *o); }; });
  }
  {
    auto o = std::make_shared<DecomposeOptions>();
    auto* s = app.add_subcommand("decompose", "Split into k0-indecomposable members");
    s->add_option("input", o->input)->required();
    s->add_option("--k0", o->k0)->required();
    s->add_option("--lambda", o->lambda)->required();
    s->add_option("--deletion-trials", o->deletion_trials)->default_val(0);
    s->add_option("--l", o->l, "Omitted intersection size, for the deletion probability");
    s->callback([&g, &action, o] { action = [&g, o] { return decompose_cmd(g, *o); }; });
  }
  {
    auto o = std::make_shared<RamseyOptions>();
    auto* s = app.add_subcommand("ramsey-fan", "Fan Ramsey bounds from L_{m,n}");
    s->add_option("--t", o->t)->required();
    s->add_option("--k", o->k)->required();
    s->add_flag("--verify", o->verify, "Certify the lower bound with exact oracles");
    s->callback([&g, &action, o] { action = [&g, o] { return ramsey_fan(g, *o); }; });
  }
  {
    auto o = std::make_shared<SpectralOptions>();
    auto* s = app.add_subcommand("spectrum", "Adjacency spectrum of a bipartite graph");
    s->add_option("--q", o->q)->default_val(3);
    s->add_option("--l", o->l)->default_val(2);
    s->add_option("--input", o->input, "Bipartite file instead of the polynomial graph");
    s->add_option("--tolerance", o->tolerance)->default_val(1e-8);
    s->callback([&g, &action, o] { action = [&g, o] { return spectrum_cmd(g, *o); }; });
  }
  {
    auto o = std::make_shared<SpectralOptions>();
    auto* s = app.add_subcommand("mixing", "Seeded expander-mixing check");
    s->add_option("--q", o->q)->default_val(7);
    s->add_option("--l", o->l)->default_val(2);
    s->add_option("--input", o->input, "Bipartite file instead of the polynomial graph");
    s->add_option("--pairs", o->pairs)->default_val(1000);
    s->callback([&g, &action, o] { action = [&g, o] { return mixing_cmd(g, *o); }; });
  }
  {
    auto path = std::make_shared<std::string>();
    auto* s = app.add_subcommand("experiment", "Run an experiment grid from a JSON config");
    s->add_option("config", *path)->required();
    s->callback([&g, &action, path] { action = [&g, path] { return experiment(g, *path); }; });
  }
}

}  // namespace omitlab::cli

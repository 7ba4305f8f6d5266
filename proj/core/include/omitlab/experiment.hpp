#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "omitlab/bound_table.hpp"
#include "omitlab/run_record.hpp"

namespace omitlab {

// Experiment configuration (JSON):
//   {"kind": "greedy-scaling", "grid": {"n": [12, 15], "k": [3], "d": [2]},
//    "trials": 20, "seed": 7, "budget": 1000000}
// The grid is the cartesian product of its lists with keys in sorted order;
// an empty grid object or any empty list gives zero cells.
struct ExperimentConfig {
  std::string kind;
  std::vector<std::pair<std::string, std::vector<nlohmann::json>>> grid;
  std::size_t trials = 10;
  std::uint64_t budget = 50'000'000;
  std::optional<std::uint64_t> seed;
  nlohmann::json raw;

  static ExperimentConfig from_json(const nlohmann::json& j);
  std::vector<nlohmann::json> cells() const;
};

const std::vector<std::string>& experiment_kinds();

struct ExperimentOutcome {
  BoundTable table;
  RunRecord record;
};

// Cell i draws from the substream (seed, kind, i), so the table does not
// depend on `jobs`. Any failed self-check aborts with VerificationError.
ExperimentOutcome run_experiment(const ExperimentConfig& config, std::uint64_t seed,
                                 std::size_t jobs = 1);

}  // namespace omitlab

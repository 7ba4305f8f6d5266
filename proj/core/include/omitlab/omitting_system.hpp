#pragma once

#include <cstddef>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "omitlab/fitting.hpp"
#include "omitlab/hypergraph.hpp"

namespace omitlab {

struct OmittingSystemOptions {
  std::uint32_t q = 0;
  std::size_t l = 2;
  std::size_t k = 3;
  std::uint64_t seed = 0;
  // Strict: resample until every trace is inside the trace band (usually
  // hopeless at desk scale). Default: prune base edges with out-of-band traces.
  bool strict = false;
  std::size_t max_retries = 1000;
};

struct OmittingSystemBuild {
  Hypergraph hypergraph;
  OmittingSystemOptions options;
  double p = 0.0;
  Window vertex_window;
  Window trace_window;
  std::size_t base_edges = 0;     // edges of the incidence hypergraph
  std::size_t pruned_edges = 0;   // base edges dropped for their trace
  std::size_t fitted_edges = 0;   // base edges carrying a star member
  std::size_t kept_vertices = 0;  // |U|
  std::size_t rejected_rounds = 0;
  std::size_t coincident = 0;
  bool omitting_verified = false;

  nlohmann::json provenance() const;
};

// q^{(l-1)/(l+1)} / 2 >= k: the lower end of the trace band is at least k.
bool omitting_preflight(std::uint32_t q, std::size_t l, std::size_t k);

// Smallest prime q passing the preflight; InputError when none exists (l = 1).
std::uint32_t smallest_feasible_prime(std::size_t l, std::size_t k);

// G(q^l, q^2, 2, l) -> incidence hypergraph -> vertex subsample at
// p = q^{-2/(l+1)} -> star fitting family -> realization, then an exhaustive
// omitting check at l (VerificationError on failure).
OmittingSystemBuild omitting_system(const OmittingSystemOptions& opts);

}  // namespace omitlab

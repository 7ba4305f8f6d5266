#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "omitlab/bipartite.hpp"
#include "omitlab/hypergraph.hpp"
#include "omitlab/hypergraph_ops.hpp"
#include "omitlab/oracles.hpp"
#include "omitlab/processes.hpp"
#include "omitlab/spectral.hpp"
#include "omitlab/witness.hpp"

namespace omitlab {

// nlohmann::json adapters, found by ADL.
void to_json(nlohmann::json& j, const Hypergraph& h);  // {"n", "edges"}
void from_json(const nlohmann::json& j, Hypergraph& h);

// Edges are stored by value and by index, so a witness can be re-checked
// against a reloaded host.
void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);

void to_json(nlohmann::json& j, const DegreeReport& r);
void to_json(nlohmann::json& j, const CycleCensus& c);
void to_json(nlohmann::json& j, const RegularityReport& r);
void to_json(nlohmann::json& j, const GreedyTrace& t);
void to_json(nlohmann::json& j, const DecompositionResult& r);
void to_json(nlohmann::json& j, const DeletionResult& r);
void to_json(nlohmann::json& j, const ProductResult& r);
void to_json(nlohmann::json& j, const ContainmentEstimate& e);
void to_json(nlohmann::json& j, const IndependenceResult& r);
void to_json(nlohmann::json& j, const MatchingResult& r);
void to_json(nlohmann::json& j, const IndecomposabilityVerdict& v);
void to_json(nlohmann::json& j, const DlrAudit& a);
void to_json(nlohmann::json& j, const SpectrumReport& r);
void to_json(nlohmann::json& j, const MixingReport& r);

// "step,vertex,live_vertices,live_edges" rows.
void write_trace_csv(std::ostream& out, const GreedyTrace& t);

}  // namespace omitlab

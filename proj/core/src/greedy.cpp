#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "omitlab/detail/hash.hpp"
#include "omitlab/detail/parallel.hpp"
#include "omitlab/error.hpp"
#include "omitlab/processes.hpp"
#include "omitlab/random.hpp"

namespace omitlab {

namespace {

// Working hypergraph H(i) for the greedy process. Edges may shrink to any
// size >= 2, so this does not go through Hypergraph.
class GreedyState {
 public:
  explicit GreedyState(const Hypergraph& h)
      : incidence_(h.vertex_count()), pos_(h.vertex_count()) {
    live_.resize(h.vertex_count());
    for (std::size_t v = 0; v < live_.size(); ++v) {
      live_[v] = static_cast<Vertex>(v);
      pos_[v] = v;
    }
    for (const auto& e : h.edges()) add_edge(e);
  }

  std::size_t live_vertex_count() const { return live_.size(); }
  std::size_t live_edge_count() const { return index_.size(); }
  Vertex live_vertex(std::size_t i) const { return live_[i]; }

  void step(Vertex v) {
    std::vector<Vertex> neighbours;
    for (std::size_t id : incidence_[v]) {
      if (!alive_[id] || edges_[id].size() != 2) continue;
      neighbours.push_back(edges_[id][0] == v ? edges_[id][1] : edges_[id][0]);
    }
    // Rule 2: every edge through a neighbour disappears.
    for (Vertex u : neighbours) {
      for (std::size_t id : incidence_[u])
        if (alive_[id]) kill(id);
      remove_vertex(u);
    }
    // Rule 1: strip v from the remaining edges through it (all of size >= 3,
    // since surviving pairs through v would have had their other end killed).
    std::vector<Edge> shrunk;
    for (std::size_t id : incidence_[v]) {
      if (!alive_[id]) continue;
      if (edges_[id].size() < 3) {
        throw VerificationError("greedy: pair through the chosen vertex survived rule 2");
      }
      Edge e;
      e.reserve(edges_[id].size() - 1);
      for (Vertex x : edges_[id])
        if (x != v) e.push_back(x);
      kill(id);
      shrunk.push_back(std::move(e));
    }
    remove_vertex(v);
    for (auto& e : shrunk) add_edge(std::move(e));
  }

 private:
  void add_edge(Edge e) {
    if (index_.count(e)) return;  // duplicate constraint
    const std::size_t id = edges_.size();
    for (Vertex x : e) incidence_[x].push_back(id);
    index_.emplace(e, id);
    edges_.push_back(std::move(e));
    alive_.push_back(1);
  }

  void kill(std::size_t id) {
    alive_[id] = 0;
    index_.erase(edges_[id]);
  }

  void remove_vertex(Vertex v) {
    const std::size_t p = pos_[v];
    if (p == kGone) return;
    const Vertex last = live_.back();
    live_[p] = last;
    pos_[last] = p;
    live_.pop_back();
    pos_[v] = kGone;
    incidence_[v].clear();
  }

  static constexpr std::size_t kGone = static_cast<std::size_t>(-1);
  std::vector<Edge> edges_;
  std::vector<char> alive_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::unordered_map<Edge, std::size_t, detail::VectorHash> index_;
  std::vector<Vertex> live_;
  std::vector<std::size_t> pos_;
};

bool is_maximal(const Hypergraph& h, const VertexSet& set) {
  std::vector<char> in(h.vertex_count(), 0);
  for (Vertex v : set) in[v] = 1;
  const auto inc = h.incidence();
  for (std::size_t w = 0; w < h.vertex_count(); ++w) {
    if (in[w]) continue;
    bool blocked = false;
    for (std::size_t id : inc[w]) {
      const Edge& e = h.edge(id);
      if (std::all_of(e.begin(), e.end(), [&](Vertex x) { return x == w || in[x]; })) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return false;
  }
  return true;
}

}  // namespace

GreedyTrace greedy_independent_set(const Hypergraph& h, std::uint64_t seed,
                                   std::optional<std::size_t> stop_at) {
  GreedyState state(h);
  Rng rng = make_rng(seed, {string_tag("greedy")});
  GreedyTrace trace;
  while (state.live_vertex_count() > 0 && (!stop_at || trace.i_max < *stop_at)) {
    std::uniform_int_distribution<std::size_t> pick(0, state.live_vertex_count() - 1);
    const Vertex v = state.live_vertex(pick(rng));
    trace.steps.push_back({trace.i_max, v, state.live_vertex_count(), state.live_edge_count()});
    trace.independent_set.push_back(v);
    state.step(v);
    ++trace.i_max;
  }
  trace.completed = state.live_vertex_count() == 0;
  std::sort(trace.independent_set.begin(), trace.independent_set.end());
  if (!h.is_independent(trace.independent_set)) {
    throw VerificationError("greedy: output is not independent");
  }
  if (trace.completed && !is_maximal(h, trace.independent_set)) {
    throw VerificationError("greedy: completed run is not maximal");
  }
  return trace;
}

ContainmentEstimate containment_probe(const Hypergraph& h, const Hypergraph& g,
                                      std::size_t step, std::size_t trials,
                                      std::uint64_t seed, std::size_t jobs) {
  if (g.vertex_count() != h.vertex_count()) {
    throw InputError("containment_probe: H and G must share the vertex set");
  }
  if (step == 0) throw InputError("containment_probe: step must be >= 1");
  const std::size_t kp = require_uniform(g, "containment_probe");
  ContainmentEstimate est;
  est.trials = trials;
  est.step = step;
  if (h.vertex_count() > 0) {
    est.benchmark = std::pow(static_cast<double>(step) / static_cast<double>(h.vertex_count()),
                             static_cast<double>(kp)) *
                    static_cast<double>(g.edge_count());
  }
  std::vector<std::size_t> counts(trials), reached(trials);
  detail::parallel_for(trials, jobs, [&](std::size_t t) {
    const GreedyTrace tr =
        greedy_independent_set(h, derive_seed(seed, {string_tag("probe"), t}), step);
    reached[t] = tr.i_max;
    std::vector<char> in(h.vertex_count(), 0);
    for (Vertex v : tr.independent_set) in[v] = 1;
    std::size_t c = 0;
    for (const auto& e : g.edges())
      c += std::all_of(e.begin(), e.end(), [&](Vertex x) { return in[x] != 0; });
    counts[t] = c;
  });
  if (trials == 0) return est;
  double sum = 0.0, sq = 0.0;
  for (std::size_t c : counts) {
    sum += static_cast<double>(c);
    sq += static_cast<double>(c) * static_cast<double>(c);
  }
  est.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    const double var = (sq - sum * est.mean) / static_cast<double>(trials - 1);
    est.standard_error = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
  }
  est.min_reached_step = *std::min_element(reached.begin(), reached.end());
  return est;
}

}  // namespace omitlab

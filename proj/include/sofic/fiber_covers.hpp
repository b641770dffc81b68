#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sofic/language.hpp"
#include "sofic/subset_covers.hpp"

namespace sofic {

// An edge of G'': a set of base edges with a common label, one leaving each
// vertex of the source set.
struct MultiEdge {
  SymbolId label = 0;
  std::vector<EdgeId> members;  // ordered by (source, target)
  VertexSet source;
  VertexSet target;

  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

// [F,a] under the rule that every member of F must emit a; empty otherwise.
VertexSet strict_step(const LabeledGraph& g, VertexSet from, SymbolId a);
std::optional<MultiEdge> multi_edge(const LabeledGraph& g, VertexSet from, SymbolId a);

enum class SeedOrigin { tails, periodic, closure };
std::string_view to_string(SeedOrigin origin);

// G'' or a forward-closed part of it. graph() is a labeled graph on the
// vertex sets (canonical order); member_edges(e) lists the base edges of e.
class FiberGraph {
 public:
  FiberGraph() = default;
  FiberGraph(const LabeledGraph& base, std::vector<VertexSet> sets);

  const LabeledGraph& base() const { return base_; }
  const LabeledGraph& graph() const { return graph_; }
  const std::vector<VertexSet>& sets() const { return sets_; }
  VertexSet set(VertexId v) const { return sets_[v]; }
  std::optional<VertexId> find(VertexSet s) const;
  const MultiEdge& multi(EdgeId e) const { return multi_[e]; }
  std::optional<EdgeId> find_edge(const MultiEdge& m) const;

 private:
  LabeledGraph base_;
  LabeledGraph graph_;
  std::vector<VertexSet> sets_;
  std::vector<MultiEdge> multi_;
  std::unordered_map<VertexSet, VertexId, VertexSetHash> index_;
};

// Every nonempty subset (at most 16 base vertices).
FiberGraph g_double_prime_full(const LabeledGraph& g);
// Forward closure of the seeds.
FiberGraph g_double_prime_seeded(const LabeledGraph& g, const std::vector<VertexSet>& seeds);

// Start-vertex sets of right-infinite paths carrying an eventually periodic
// right tail: the stable sets of the transposed graph.
std::vector<VertexSet> co_stable_sets(const LabeledGraph& g, std::size_t budget = kDefaultMonoidBudget);

struct SeedCensus {
  std::size_t past_sets = 0;         // stable sets reached by tails within the bound
  std::size_t future_sets = 0;       // co-stable sets reached by tails within the bound
  std::size_t tail_seeds = 0;        // nonempty intersections
  std::size_t periodic_seeds = 0;    // fiber sets of periodic points
  std::size_t exact_seeds = 0;       // intersections over all stable and co-stable sets
  bool bounded_covers_exact = false; // every exact seed was found within the bounds
};

struct GPrime {
  FiberGraph graph;
  std::vector<SeedOrigin> origin;  // per vertex
  SeedCensus census;
};

GPrime g_prime(const LabeledGraph& g, std::size_t period_bound, std::size_t tail_bound,
               std::size_t budget = kDefaultMonoidBudget);

// Fiber of a periodic point p of period T at each phase k.
struct FiberData {
  PeriodicWord point;
  std::vector<VertexSet> past;    // D_k
  std::vector<VertexSet> future;  // E_k
  std::vector<VertexSet> fiber;   // F_k = D_k & E_k
};

FiberData fiber_sets_on_periodic(const LabeledGraph& g, const PeriodicWord& p);
// The periodic G'' path whose members are all preimages of p.
std::vector<MultiEdge> beta_on_periodic(const LabeledGraph& g, const PeriodicWord& p);

struct FiberCount {
  bool infinite = false;
  std::size_t count = 0;
};
std::string to_string(const FiberCount& c);

// Number of bi-infinite paths labeled p, from the product with the cyclic
// phase graph.
FiberCount fiber_count_periodic(const LabeledGraph& g, const PeriodicWord& p);

// The G''-path starting from all vertices of s(gamma) that can follow the
// label of gamma.
struct DominatedPath {
  std::vector<VertexSet> vertices;  // length |gamma| + 1
  std::vector<MultiEdge> edges;
};

DominatedPath maximal_dominated_path(const StableCore& core, std::span<const EdgeId> gamma);

}  // namespace sofic

#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "sofic/isomorphism.hpp"
#include "sofic/labeled_graph.hpp"
#include "sofic/language.hpp"
#include "sofic/relation.hpp"

namespace sofic {

// A labeled graph whose vertices are nonempty vertex sets of a base graph,
// listed in canonical order (cardinality, then members) and named "{a,c}".
class SetGraph {
 public:
  SetGraph() = default;
  SetGraph(const LabeledGraph& base, std::vector<VertexSet> sets, std::vector<Edge> edges);

  const LabeledGraph& graph() const { return graph_; }
  const std::vector<VertexSet>& sets() const { return sets_; }
  VertexSet set(VertexId v) const { return sets_[v]; }
  std::optional<VertexId> find(VertexSet s) const;

 private:
  LabeledGraph graph_;
  std::vector<VertexSet> sets_;
  std::unordered_map<VertexSet, VertexId, VertexSetHash> index_;
};

// Sorts sets canonically and builds the graph with edges (D,a) -> [D,a] for
// every nonempty target; targets outside `sets` raise ConstructionError.
SetGraph build_set_graph(const LabeledGraph& base, std::vector<VertexSet> sets, std::string_view what);

enum class SubsetMode { full, reachable };

inline constexpr std::size_t kFullModeCap = 16;

// Subset construction on nonempty vertex sets. The base need not be
// right-resolving.
SetGraph subset_construction(const LabeledGraph& g, SubsetMode mode = SubsetMode::reachable);

// D = D^y for any y whose left tail is ...uuu.v
struct StableWitness {
  Word tail;    // u, nonempty
  Word suffix;  // v
};

// Sets of terminal vertices of left-infinite paths carrying the left tail of
// a point of the shift, with all subset-construction edges between them.
struct StableCore {
  LabeledGraph base;
  SetGraph core;
  std::vector<StableWitness> witnesses;
  std::size_t monoid_size = 0;
  std::size_t monoid_depth = 0;

  const LabeledGraph& graph() const { return core.graph(); }
};

StableCore stable_core(const LabeledGraph& g, std::size_t budget = kDefaultMonoidBudget);

// Independent computation from words: for every u with 1 <= |u| <= bound the
// stabilized set of ...uuu, stepped by every v with |v| <= bound. Sorted
// canonically.
std::vector<VertexSet> stable_core_oracle(const LabeledGraph& g, std::size_t bound);

// A cover graph with its factor map onto the graph it was built from.
struct CoverBundle {
  LabeledGraph cover;
  std::vector<VertexId> vertex_map;             // origin vertex -> cover vertex
  std::vector<EdgeId> edge_map;                 // origin edge -> cover edge
  std::vector<std::vector<VertexId>> classes;   // cover vertex -> origin vertices
};

// Quotient of a right-resolving graph by equality of follower sets.
CoverBundle merged_graph(const LabeledGraph& h);

struct FutureCover {
  StableCore past;
  CoverBundle merge;  // past.graph() -> future cover

  const LabeledGraph& cover() const { return merge.cover; }
};

FutureCover future_cover(const LabeledGraph& g, std::size_t budget = kDefaultMonoidBudget);

struct ExtendedFutureCover {
  FutureCover future;
  StableCore extended;     // stable core of the future cover
  CoverBundle merge;       // extended.graph() -> merged graph
  Isomorphism to_future;   // merged graph -> future.cover()
};

ExtendedFutureCover extended_future_cover(const LabeledGraph& g, std::size_t budget = kDefaultMonoidBudget);

// A periodic path in some graph; edge k is traversed at time k and vertex k
// is its source.
struct PeriodicRay {
  std::vector<VertexId> vertices;
  Path edges;
};

// The ray in the stable core over p (phase 0 at the first symbol of p.word):
// vertex k is the stabilized past set of the left tail ending before k.
PeriodicRay alpha_on_periodic(const StableCore& core, const PeriodicWord& p);

// The ray over p in a future cover computed inside the cover itself: at each
// phase, the vertex with the largest follower set among the past set of the
// cover. Requires a right-resolving, follower-separated cover.
PeriodicRay alpha_in_future_cover(const LabeledGraph& cover, const PeriodicWord& p);

// Past set of the left tail ...www of a periodic word, computed from relations.
VertexSet periodic_past_set(const LabeledGraph& g, std::span<const SymbolId> period);

struct RegularityReport {
  bool regular = true;
  std::vector<std::optional<VertexSet>> witness;  // per vertex: a stable set certifying regularity
  std::vector<VertexId> failing;
};

RegularityReport check_regular(const LabeledGraph& h, std::size_t budget = kDefaultMonoidBudget);

}  // namespace sofic

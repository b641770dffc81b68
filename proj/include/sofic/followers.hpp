#pragma once

#include <vector>

#include "sofic/labeled_graph.hpp"

namespace sofic {

// Vertices grouped by equal follower sets. Classes are numbered by their
// smallest member, members listed in increasing order.
struct FollowerPartition {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<VertexId>> classes;

  bool discrete() const { return classes.size() == class_of.size(); }
};

// Moore refinement: start from emitted-label sets, split by the classes of
// the successors until stable. Requires a right-resolving graph.
FollowerPartition follower_partition(const LabeledGraph& g);
bool is_follower_separated(const LabeledGraph& g);

// f(u) is contained in f(v). Requires a right-resolving, essential graph.
bool follower_contains(const LabeledGraph& g, VertexId u, VertexId v);

}  // namespace sofic

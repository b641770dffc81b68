#include "sofic/followers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sofic {

namespace {

// Renumbers arbitrary class keys so that classes appear in order of their
// smallest member.
template <typename Key>
std::vector<std::size_t> canonical_classes(const std::vector<Key>& keys) {
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> out(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    auto [it, inserted] = ids.emplace(keys[v], ids.size());
    out[v] = it->second;
  }
  return out;
}

}  // namespace

FollowerPartition follower_partition(const LabeledGraph& g) {
  require_right_resolving(g, "follower_partition");
  const std::size_t n = g.vertex_count();
  const std::size_t k = g.alphabet().size();

  std::vector<std::vector<bool>> emitted(n, std::vector<bool>(k, false));
  for (const Edge& e : g.edges()) emitted[e.source][e.label] = true;
  std::vector<std::size_t> cls = canonical_classes(emitted);
  std::size_t class_count = *std::max_element(cls.begin(), cls.end()) + 1;

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  while (true) {
    std::vector<std::vector<std::size_t>> signature(n, std::vector<std::size_t>(k + 1, none));
    for (VertexId v = 0; v < n; ++v) {
      signature[v][0] = cls[v];
      for (SymbolId a = 0; a < k; ++a) {
        if (auto e = g.find_edge(v, a)) signature[v][a + 1] = cls[g.edge(*e).target];
      }
    }
    std::vector<std::size_t> next = canonical_classes(signature);
    const std::size_t next_count = *std::max_element(next.begin(), next.end()) + 1;
    cls = std::move(next);
    if (next_count == class_count) break;
    class_count = next_count;
  }

  FollowerPartition p;
  p.class_of = cls;
  p.classes.resize(class_count);
  for (VertexId v = 0; v < n; ++v) p.classes[cls[v]].push_back(v);
  return p;
}

bool is_follower_separated(const LabeledGraph& g) { return follower_partition(g).discrete(); }

bool follower_contains(const LabeledGraph& g, VertexId u, VertexId v) {
  require_right_resolving(g, "follower_contains");
  // Walk u and v in lockstep; containment fails exactly when u can emit a
  // label that the matching position of v cannot.
  std::set<std::pair<VertexId, VertexId>> seen{{u, v}};
  std::vector<std::pair<VertexId, VertexId>> queue{{u, v}};
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (EdgeId e : g.out_edges(x)) {
      const Edge& ed = g.edge(e);
      auto f = g.find_edge(y, ed.label);
      if (!f) return false;
      std::pair<VertexId, VertexId> next{ed.target, g.edge(*f).target};
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return true;
}

}  // namespace sofic

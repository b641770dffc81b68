#include "sofic/components.hpp"

#include <algorithm>

namespace sofic {

namespace {

// Iterative Tarjan; returns the SCC index of every vertex.
std::vector<std::size_t> tarjan(const LabeledGraph& g, std::size_t& count) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), scc(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, std::size_t>> call;  // vertex, next out-edge position
  std::size_t next_index = 0;
  count = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto out = g.out_edges(v);
      if (pos < out.size()) {
        VertexId w = g.edge(out[pos++]).target;
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const VertexId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          scc[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return scc;
}

}  // namespace

std::size_t ComponentInfo::component_of_edge(const LabeledGraph& g, EdgeId e) const {
  const Edge& ed = g.edge(e);
  const std::size_t c = component_of[ed.source];
  return (c != kNoComponent && component_of[ed.target] == c) ? c : kNoComponent;
}

std::vector<std::size_t> ComponentInfo::source_components() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (is_source[c]) out.push_back(c);
  }
  return out;
}

ComponentInfo components_and_sources(const LabeledGraph& g) {
  std::size_t count = 0;
  const std::vector<std::size_t> scc = tarjan(g, count);

  std::vector<bool> has_edge(count, false);
  for (const Edge& e : g.edges()) {
    if (scc[e.source] == scc[e.target]) has_edge[scc[e.source]] = true;
  }
  // Renumber the kept SCCs by smallest member.
  std::vector<std::size_t> renumber(count, kNoComponent);
  ComponentInfo info;
  info.component_of.assign(g.vertex_count(), kNoComponent);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t s = scc[v];
    if (!has_edge[s]) continue;
    if (renumber[s] == kNoComponent) {
      renumber[s] = info.components.size();
      info.components.emplace_back();
    }
    info.components[renumber[s]].push_back(v);
    info.component_of[v] = renumber[s];
  }
  info.is_source.assign(info.components.size(), true);
  for (const Edge& e : g.edges()) {
    const std::size_t c = info.component_of[e.target];
    if (c != kNoComponent && info.component_of[e.source] != c) info.is_source[c] = false;
  }
  info.multiplicity.assign(info.components.size(), std::nullopt);
  return info;
}

ComponentInfo components_and_sources(const LabeledGraph& g, std::span<const VertexSet> sets) {
  ComponentInfo info = components_and_sources(g);
  for (std::size_t c = 0; c < info.components.size(); ++c) {
    const std::size_t m = sets[info.components[c].front()].size();
    const bool uniform = std::all_of(info.components[c].begin(), info.components[c].end(),
                                     [&](VertexId v) { return sets[v].size() == m; });
    if (uniform) info.multiplicity[c] = m;
  }
  return info;
}

bool reachable_from_sources(const LabeledGraph& g, const ComponentInfo& info) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> queue;
  for (std::size_t c : info.source_components()) {
    for (VertexId v : info.components[c]) {
      seen[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    for (EdgeId e : g.out_edges(v)) {
      VertexId t = g.edge(e).target;
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace sofic

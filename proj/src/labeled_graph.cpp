#include "sofic/labeled_graph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "sofic/error.hpp"

namespace sofic {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidInput("alphabet: empty alphabet");
  for (SymbolId i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw InvalidInput("alphabet[" + std::to_string(i) + "]: empty symbol");
    if (!index_.emplace(symbols_[i], i).second) {
      throw InvalidInput("alphabet[" + std::to_string(i) + "]: duplicate symbol '" + symbols_[i] + "'");
    }
  }
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LabeledGraph::LabeledGraph(Alphabet alphabet, std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)), vertex_names_(std::move(vertex_names)), edges_(std::move(edges)) {
  if (alphabet_.size() == 0) throw InvalidInput("alphabet: empty alphabet");
  if (vertex_names_.empty()) throw InvalidInput("vertices: empty vertex list");
  for (VertexId v = 0; v < vertex_names_.size(); ++v) {
    if (!vertex_index_.emplace(vertex_names_[v], v).second) {
      throw InvalidInput("vertices[" + std::to_string(v) + "]: duplicate vertex name '" + vertex_names_[v] + "'");
    }
  }
  const std::size_t n = vertex_names_.size();
  const std::size_t k = alphabet_.size();
  out_.assign(n, {});
  in_.assign(n, {});
  out_by_label_.assign(n * k, {});
  std::set<Edge> seen;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.source >= n || ed.target >= n || ed.label >= k) {
      throw InvalidInput("edges[" + std::to_string(e) + "]: index out of range");
    }
    if (!seen.insert(ed).second) {
      throw InvalidInput("edges[" + std::to_string(e) + "]: duplicate edge " + vertex_names_[ed.source] + " -" +
                         alphabet_.name(ed.label) + "-> " + vertex_names_[ed.target]);
    }
    out_[ed.source].push_back(e);
    in_[ed.target].push_back(e);
    out_by_label_[ed.source * k + ed.label].push_back(e);
  }
  if (supports_sets()) {
    target_masks_.assign(n * k, VertexSet{});
    emitters_.assign(k, VertexSet{});
    for (const Edge& ed : edges_) {
      target_masks_[ed.source * k + ed.label].insert(ed.target);
      emitters_[ed.label].insert(ed.source);
    }
  }
}

std::optional<VertexId> LabeledGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> LabeledGraph::find_edge(VertexId v, SymbolId a) const {
  auto out = out_edges(v, a);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::optional<EdgeId> LabeledGraph::find_edge(VertexId v, SymbolId a, VertexId t) const {
  for (EdgeId e : out_edges(v, a)) {
    if (edges_[e].target == t) return e;
  }
  return std::nullopt;
}

VertexSet LabeledGraph::step(VertexSet from, SymbolId a) const {
  VertexSet out;
  const std::size_t k = alphabet_.size();
  from.for_each([&](VertexId v) { out |= target_masks_[v * k + a]; });
  return out;
}

VertexSet LabeledGraph::step(VertexSet from, std::span<const SymbolId> word) const {
  for (SymbolId a : word) {
    if (from.empty()) break;
    from = step(from, a);
  }
  return from;
}

std::string LabeledGraph::edge_name(EdgeId e) const {
  const Edge& ed = edges_.at(e);
  return vertex_names_[ed.source] + "-" + alphabet_.name(ed.label) + "->" + vertex_names_[ed.target];
}

std::vector<std::string> LabeledGraph::edge_names() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) out.push_back(edge_name(e));
  return out;
}

std::string LabeledGraph::set_name(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](VertexId v) {
    if (!first) out += ",";
    out += vertex_names_.at(v);
    first = false;
  });
  return out + "}";
}

LabeledGraph validate_graph(const GraphDescription& d) {
  Alphabet alphabet(d.alphabet);
  if (d.vertices.empty()) throw InvalidInput("vertices: empty vertex list");
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < d.vertices.size(); ++v) {
    if (d.vertices[v].empty()) throw InvalidInput("vertices[" + std::to_string(v) + "]: empty vertex name");
    if (!index.emplace(d.vertices[v], v).second) {
      throw InvalidInput("vertices[" + std::to_string(v) + "]: duplicate vertex name '" + d.vertices[v] + "'");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(d.edges.size());
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const auto& entry = d.edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    auto from = index.find(entry.from);
    if (from == index.end()) throw InvalidInput(where + ".from: unknown vertex '" + entry.from + "'");
    auto to = index.find(entry.to);
    if (to == index.end()) throw InvalidInput(where + ".to: unknown vertex '" + entry.to + "'");
    auto label = alphabet.find(entry.label);
    if (!label) throw InvalidInput(where + ".label: unknown symbol '" + entry.label + "'");
    edges.push_back(Edge{from->second, *label, to->second});
  }
  return LabeledGraph(std::move(alphabet), d.vertices, std::move(edges));
}

GraphDescription describe(const LabeledGraph& g) {
  GraphDescription d;
  d.alphabet = g.alphabet().symbols();
  d.vertices = g.vertex_names();
  for (const Edge& e : g.edges()) {
    d.edges.push_back({g.vertex_name(e.source), g.alphabet().name(e.label), g.vertex_name(e.target)});
  }
  return d;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<bool>& keep) {
  std::vector<VertexId> remap(g.vertex_count(), 0);
  std::vector<std::string> names;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) {
      remap[v] = static_cast<VertexId>(names.size());
      names.push_back(g.vertex_name(v));
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep[e.source] && keep[e.target]) edges.push_back({remap[e.source], e.label, remap[e.target]});
  }
  return LabeledGraph(g.alphabet(), std::move(names), std::move(edges));
}

LabeledGraph essentialize(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (const Edge& e : g.edges()) {
    ++outdeg[e.source];
    ++indeg[e.target];
  }
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] == 0 || outdeg[v] == 0) {
      alive[v] = false;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    for (EdgeId e : g.out_edges(v)) {
      VertexId t = g.edge(e).target;
      if (alive[t] && --indeg[t] == 0) {
        alive[t] = false;
        queue.push_back(t);
      }
    }
    for (EdgeId e : g.in_edges(v)) {
      VertexId s = g.edge(e).source;
      if (alive[s] && --outdeg[s] == 0) {
        alive[s] = false;
        queue.push_back(s);
      }
    }
  }
  if (std::none_of(alive.begin(), alive.end(), [](bool b) { return b; })) {
    throw EmptyShift("essentialize: graph presents the empty shift (no bi-infinite path)");
  }
  return induced_subgraph(g, alive);
}

bool is_essential(const LabeledGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.in_edges(v).empty() || g.out_edges(v).empty()) return false;
  }
  return true;
}

RightResolvingReport check_right_resolving(const LabeledGraph& g) {
  RightResolvingReport report;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (SymbolId a = 0; a < g.alphabet().size(); ++a) {
      if (g.out_edges(v, a).size() > 1) {
        report.right_resolving = false;
        report.conflicts.emplace_back(v, a);
      }
    }
  }
  return report;
}

void require_right_resolving(const LabeledGraph& g, std::string_view operation) {
  auto report = check_right_resolving(g);
  if (!report.right_resolving) {
    const auto [v, a] = report.conflicts.front();
    throw NotRightResolving(std::string(operation) + ": graph is not right-resolving (vertex '" + g.vertex_name(v) +
                            "' emits several edges labeled '" + g.alphabet().name(a) + "')");
  }
}

void require_set_capacity(const LabeledGraph& g, std::string_view operation) {
  if (!g.supports_sets()) {
    throw LimitExceeded(std::string(operation) + ": vertex-set representation supports at most 64 base vertices",
                        g.vertex_count());
  }
}

LabeledGraph transpose(const LabeledGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({e.target, e.label, e.source});
  return LabeledGraph(g.alphabet(), g.vertex_names(), std::move(edges));
}

LabeledGraph edge_shift_presentation(const LabeledGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back({g.edge(e).source, e, g.edge(e).target});
  return LabeledGraph(Alphabet(g.edge_names()), g.vertex_names(), std::move(edges));
}

LabeledGraph rename_vertices(const LabeledGraph& g, const std::vector<std::string>& new_names) {
  if (new_names.size() != g.vertex_count()) throw InvalidInput("rename_vertices: wrong number of names");
  return LabeledGraph(g.alphabet(), new_names, g.edges());
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b, std::string_view suffix_a,
                            std::string_view suffix_b) {
  std::vector<std::string> symbols = a.alphabet().symbols();
  for (const auto& s : b.alphabet().symbols()) {
    if (!a.alphabet().find(s)) symbols.push_back(s);
  }
  Alphabet alphabet(symbols);
  std::vector<std::string> names;
  for (const auto& n : a.vertex_names()) names.push_back(n + std::string(suffix_a));
  for (const auto& n : b.vertex_names()) names.push_back(n + std::string(suffix_b));
  std::vector<Edge> edges;
  for (const Edge& e : a.edges()) edges.push_back({e.source, *alphabet.find(a.alphabet().name(e.label)), e.target});
  const auto offset = static_cast<VertexId>(a.vertex_count());
  for (const Edge& e : b.edges()) {
    edges.push_back({e.source + offset, *alphabet.find(b.alphabet().name(e.label)), e.target + offset});
  }
  return LabeledGraph(std::move(alphabet), std::move(names), std::move(edges));
}

bool same_by_names(const LabeledGraph& a, const LabeledGraph& b) {
  using Triple = std::tuple<std::string, std::string, std::string>;
  auto vertex_set = [](const LabeledGraph& g) {
    return std::set<std::string>(g.vertex_names().begin(), g.vertex_names().end());
  };
  auto symbol_set = [](const LabeledGraph& g) {
    return std::set<std::string>(g.alphabet().symbols().begin(), g.alphabet().symbols().end());
  };
  auto edge_set = [](const LabeledGraph& g) {
    std::set<Triple> out;
    for (const Edge& e : g.edges()) {
      out.emplace(g.vertex_name(e.source), g.alphabet().name(e.label), g.vertex_name(e.target));
    }
    return out;
  };
  return a.edge_count() == b.edge_count() && vertex_set(a) == vertex_set(b) && symbol_set(a) == symbol_set(b) &&
         edge_set(a) == edge_set(b);
}

std::string format_word(const Alphabet& alphabet, std::span<const SymbolId> word) {
  bool compact = std::all_of(alphabet.symbols().begin(), alphabet.symbols().end(),
                             [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += alphabet.name(word[i]);
  }
  return out;
}

}  // namespace sofic

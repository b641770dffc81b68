#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sofic/vertex_set.hpp"

namespace sofic {

using Word = std::vector<SymbolId>;

// Ordered finite list of distinct, nonempty symbol names.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(SymbolId s) const { return symbols_.at(s); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<SymbolId> find(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
};

struct Edge {
  VertexId source = 0;
  SymbolId label = 0;
  VertexId target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Name-based description as it appears in a graph file.
struct GraphDescription {
  struct EdgeEntry {
    std::string from;
    std::string label;
    std::string to;
  };
  std::vector<std::string> alphabet;
  std::vector<std::string> vertices;
  std::vector<EdgeEntry> edges;
};

// Finite directed multigraph with labeled edges. Immutable after
// construction; vertex, symbol and edge order is the order given.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(Alphabet alphabet, std::vector<std::string> vertex_names, std::vector<Edge> edges);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_[v]; }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_[v]; }
  std::span<const EdgeId> out_edges(VertexId v, SymbolId a) const { return out_by_label_[v * alphabet_.size() + a]; }

  // First edge out of v labeled a; the only one when the graph is
  // right-resolving.
  std::optional<EdgeId> find_edge(VertexId v, SymbolId a) const;
  std::optional<EdgeId> find_edge(VertexId v, SymbolId a, VertexId t) const;

  // Set-valued transitions, available when vertex_count() <= 64.
  bool supports_sets() const { return vertex_count() <= kMaxSetVertices; }
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  // [D,a]: targets of a-labeled edges leaving D.
  VertexSet step(VertexSet from, SymbolId a) const;
  VertexSet step(VertexSet from, std::span<const SymbolId> word) const;
  // Vertices that emit an a-labeled edge.
  VertexSet emitters(SymbolId a) const { return emitters_.at(a); }

  std::string edge_name(EdgeId e) const;
  std::vector<std::string> edge_names() const;
  std::string set_name(VertexSet s) const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> out_by_label_;
  std::vector<VertexSet> target_masks_;  // [v * |A| + a]
  std::vector<VertexSet> emitters_;
};

LabeledGraph validate_graph(const GraphDescription& description);
GraphDescription describe(const LabeledGraph& g);

// Subgraph on the kept vertices (order preserved) and all edges between them.
LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<bool>& keep);

// Repeatedly strips vertices without incoming or outgoing edges. Throws
// EmptyShift if nothing remains.
LabeledGraph essentialize(const LabeledGraph& g);
bool is_essential(const LabeledGraph& g);

struct RightResolvingReport {
  bool right_resolving = true;
  std::vector<std::pair<VertexId, SymbolId>> conflicts;
};
RightResolvingReport check_right_resolving(const LabeledGraph& g);
void require_right_resolving(const LabeledGraph& g, std::string_view operation);
void require_set_capacity(const LabeledGraph& g, std::string_view operation);

// Same vertices and alphabet, every edge reversed.
LabeledGraph transpose(const LabeledGraph& g);

// Presentation of the edge shift X_G: every edge is labeled by its own name.
LabeledGraph edge_shift_presentation(const LabeledGraph& g);

LabeledGraph rename_vertices(const LabeledGraph& g, const std::vector<std::string>& new_names);
LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b, std::string_view suffix_a,
                            std::string_view suffix_b);

// Exact equality of vertex names, alphabet symbols and edge triples, compared
// by name and independent of listing order.
bool same_by_names(const LabeledGraph& a, const LabeledGraph& b);

std::string format_word(const Alphabet& alphabet, std::span<const SymbolId> word);

}  // namespace sofic

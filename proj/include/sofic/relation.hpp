#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "sofic/labeled_graph.hpp"

namespace sofic {

// n x n Boolean matrix over the vertices of one graph (n <= 64). Row u holds
// the vertices reachable from u along a path carrying a fixed word.
class BoolRelation {
 public:
  BoolRelation() = default;
  explicit BoolRelation(std::size_t n) : rows_(n) {}

  static BoolRelation identity(std::size_t n);
  static BoolRelation for_symbol(const LabeledGraph& g, SymbolId a);
  static BoolRelation for_word(const LabeledGraph& g, std::span<const SymbolId> word);

  std::size_t size() const { return rows_.size(); }
  VertexSet row(VertexId u) const { return rows_[u]; }
  void set(VertexId u, VertexId v) { rows_[u].insert(v); }
  bool test(VertexId u, VertexId v) const { return rows_[u].contains(v); }

  bool empty() const;
  VertexSet range() const;
  VertexSet domain() const;
  // Image of a set: vertices reachable from some member.
  VertexSet image(VertexSet from) const;
  // Preimage of a set: vertices that reach some member.
  VertexSet preimage(VertexSet to) const;
  // Vertices u with (u,u) in the relation.
  VertexSet diagonal() const;

  BoolRelation transposed() const;

  // Path composition: first this, then rhs.
  friend BoolRelation operator*(const BoolRelation& lhs, const BoolRelation& rhs);
  friend bool operator==(const BoolRelation&, const BoolRelation&) = default;

  std::size_t hash() const noexcept;

 private:
  std::vector<VertexSet> rows_;
};

struct BoolRelationHash {
  std::size_t operator()(const BoolRelation& r) const noexcept { return r.hash(); }
};

// Idempotent power m^k = m^{2k}, found by walking the power sequence until it
// cycles.
BoolRelation omega_power(const BoolRelation& m);

inline constexpr std::size_t kDefaultMonoidBudget = 200000;

// Closure of {R_a : a in alphabet} under composition, plus the identity.
// Elements are numbered in breadth-first order of their shortest words, so
// element 0 is the identity.
class TransitionMonoid {
 public:
  static TransitionMonoid build(const LabeledGraph& g, std::size_t budget = kDefaultMonoidBudget);

  std::size_t size() const { return elements_.size(); }
  const BoolRelation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<BoolRelation>& elements() const { return elements_; }
  std::size_t generator(SymbolId a) const { return generators_[a]; }
  std::size_t right_multiply(std::size_t i, SymbolId a) const { return cayley_[i * symbol_count_ + a]; }

  bool is_idempotent(std::size_t i) const { return idempotent_[i]; }
  // True when the element is R_w for a nonempty word w. Only the identity
  // can fail this.
  bool in_semigroup(std::size_t i) const { return in_semigroup_[i]; }
  // Idempotents of the semigroup generated by the letters.
  std::vector<std::size_t> semigroup_idempotents() const;

  std::optional<std::size_t> find(const BoolRelation& r) const;
  std::size_t omega_power(std::size_t i) const;

  // A shortest word realizing the element (empty for the identity).
  Word word(std::size_t i) const;
  // Shortest nonempty word realizing an element of the semigroup.
  Word nonempty_word(std::size_t i) const;
  std::size_t max_word_length() const { return max_word_length_; }

 private:
  std::size_t symbol_count_ = 0;
  std::vector<BoolRelation> elements_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> cayley_;
  std::vector<bool> idempotent_;
  std::vector<bool> in_semigroup_;
  std::vector<std::size_t> parent_;
  std::vector<SymbolId> parent_symbol_;
  Word identity_word_;  // nonempty word equal to the identity, if any
  std::size_t max_word_length_ = 0;
  std::unordered_map<BoolRelation, std::size_t, BoolRelationHash> index_;
};

}  // namespace sofic

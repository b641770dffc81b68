#include "sofic/relation.hpp"

#include <algorithm>
#include <map>

#include "sofic/error.hpp"

namespace sofic {

BoolRelation BoolRelation::identity(std::size_t n) {
  BoolRelation r(n);
  for (VertexId v = 0; v < n; ++v) r.set(v, v);
  return r;
}

BoolRelation BoolRelation::for_symbol(const LabeledGraph& g, SymbolId a) {
  require_set_capacity(g, "transition relation");
  BoolRelation r(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId e : g.out_edges(v, a)) r.set(v, g.edge(e).target);
  }
  return r;
}

BoolRelation BoolRelation::for_word(const LabeledGraph& g, std::span<const SymbolId> word) {
  BoolRelation r = identity(g.vertex_count());
  for (SymbolId a : word) r = r * for_symbol(g, a);
  return r;
}

bool BoolRelation::empty() const {
  return std::all_of(rows_.begin(), rows_.end(), [](VertexSet s) { return s.empty(); });
}

VertexSet BoolRelation::range() const {
  VertexSet out;
  for (VertexSet s : rows_) out |= s;
  return out;
}

VertexSet BoolRelation::domain() const {
  VertexSet out;
  for (VertexId u = 0; u < rows_.size(); ++u) {
    if (!rows_[u].empty()) out.insert(u);
  }
  return out;
}

VertexSet BoolRelation::image(VertexSet from) const {
  VertexSet out;
  from.for_each([&](VertexId u) { out |= rows_[u]; });
  return out;
}

VertexSet BoolRelation::preimage(VertexSet to) const {
  VertexSet out;
  for (VertexId u = 0; u < rows_.size(); ++u) {
    if (!(rows_[u] & to).empty()) out.insert(u);
  }
  return out;
}

VertexSet BoolRelation::diagonal() const {
  VertexSet out;
  for (VertexId u = 0; u < rows_.size(); ++u) {
    if (rows_[u].contains(u)) out.insert(u);
  }
  return out;
}

BoolRelation BoolRelation::transposed() const {
  BoolRelation t(rows_.size());
  for (VertexId u = 0; u < rows_.size(); ++u) rows_[u].for_each([&](VertexId v) { t.set(v, u); });
  return t;
}

BoolRelation operator*(const BoolRelation& lhs, const BoolRelation& rhs) {
  BoolRelation out(lhs.size());
  for (VertexId u = 0; u < lhs.size(); ++u) out.rows_[u] = rhs.image(lhs.rows_[u]);
  return out;
}

std::size_t BoolRelation::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (VertexSet s : rows_) {
    h ^= s.bits();
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

BoolRelation omega_power(const BoolRelation& m) {
  // Walk m, m^2, m^3, ... until a repeat m^i = m^j (i < j). The idempotent
  // power is m^k for the least k >= i divisible by j - i.
  std::unordered_map<BoolRelation, std::size_t, BoolRelationHash> seen;
  std::vector<BoolRelation> powers;
  BoolRelation p = m;
  std::size_t exponent = 1;
  while (true) {
    auto [it, inserted] = seen.emplace(p, exponent);
    if (!inserted) {
      const std::size_t index = it->second;
      const std::size_t period = exponent - index;
      const std::size_t k = ((index + period - 1) / period) * period;
      return powers[k - 1];
    }
    powers.push_back(p);
    p = p * m;
    ++exponent;
  }
}

TransitionMonoid TransitionMonoid::build(const LabeledGraph& g, std::size_t budget) {
  require_set_capacity(g, "transition monoid");
  TransitionMonoid m;
  const std::size_t k = g.alphabet().size();
  m.symbol_count_ = k;
  std::vector<BoolRelation> letters;
  letters.reserve(k);
  for (SymbolId a = 0; a < k; ++a) letters.push_back(BoolRelation::for_symbol(g, a));

  std::vector<std::size_t> depth;
  auto add = [&](BoolRelation r, std::size_t parent, SymbolId symbol, std::size_t d) {
    if (m.elements_.size() >= budget) {
      throw LimitExceeded("transition monoid: element budget exceeded", m.elements_.size());
    }
    m.index_.emplace(r, m.elements_.size());
    m.elements_.push_back(std::move(r));
    m.parent_.push_back(parent);
    m.parent_symbol_.push_back(symbol);
    m.in_semigroup_.push_back(d > 0);
    depth.push_back(d);
  };
  add(BoolRelation::identity(g.vertex_count()), 0, 0, 0);

  m.cayley_.clear();
  for (std::size_t i = 0; i < m.elements_.size(); ++i) {
    for (SymbolId a = 0; a < k; ++a) {
      BoolRelation next = m.elements_[i] * letters[a];
      auto it = m.index_.find(next);
      std::size_t j;
      if (it == m.index_.end()) {
        j = m.elements_.size();
        add(std::move(next), i, a, depth[i] + 1);
      } else {
        j = it->second;
        if (j == 0 && !m.in_semigroup_[0]) {
          m.in_semigroup_[0] = true;
          m.identity_word_ = m.word(i);
          m.identity_word_.push_back(a);
        }
      }
      m.cayley_.push_back(j);
    }
  }
  m.generators_.resize(k);
  for (SymbolId a = 0; a < k; ++a) m.generators_[a] = m.cayley_[a];
  m.idempotent_.resize(m.elements_.size());
  for (std::size_t i = 0; i < m.elements_.size(); ++i) {
    m.idempotent_[i] = (m.elements_[i] * m.elements_[i]) == m.elements_[i];
  }
  m.max_word_length_ = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
  return m;
}

std::vector<std::size_t> TransitionMonoid::semigroup_idempotents() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (idempotent_[i] && in_semigroup_[i]) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> TransitionMonoid::find(const BoolRelation& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TransitionMonoid::omega_power(std::size_t i) const {
  // Powers stay inside the monoid, so walk indices through the Cayley graph.
  std::map<std::size_t, std::size_t> seen;
  std::vector<std::size_t> powers;
  std::size_t p = i;
  const Word w = word(i);
  for (std::size_t exponent = 1;; ++exponent) {
    auto [it, inserted] = seen.emplace(p, exponent);
    if (!inserted) {
      const std::size_t index = it->second;
      const std::size_t period = exponent - index;
      const std::size_t k = ((index + period - 1) / period) * period;
      return powers[k - 1];
    }
    powers.push_back(p);
    for (SymbolId a : w) p = right_multiply(p, a);
  }
}

Word TransitionMonoid::word(std::size_t i) const {
  Word w;
  while (i != 0) {
    w.push_back(parent_symbol_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Word TransitionMonoid::nonempty_word(std::size_t i) const {
  if (i == 0) {
    if (!in_semigroup_[0]) throw InvalidInput("transition monoid: identity is not realized by a nonempty word");
    return identity_word_;
  }
  return word(i);
}

}  // namespace sofic

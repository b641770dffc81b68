#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace sofic {

using VertexId = std::uint32_t;
using SymbolId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::size_t kMaxSetVertices = 64;

// A set of vertices of one base graph with at most 64 vertices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet singleton(VertexId v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet full(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      f(static_cast<VertexId>(std::countr_zero(rest)));
    }
  }

  constexpr VertexId first() const { return static_cast<VertexId>(std::countr_zero(bits_)); }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order used for every derived graph: by cardinality, then by the
// sorted member list.
inline bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Lexicographic on ascending members equals comparing the lowest differing
  // bit: the set owning it comes first.
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() >> std::countr_zero(diff)) & 1U;
}

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace sofic

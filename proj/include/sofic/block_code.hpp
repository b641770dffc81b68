#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sofic/labeled_graph.hpp"

namespace sofic {

using Block = std::vector<SymbolId>;

// Sliding block code with memory and anticipation equal to `radius`: output
// at i depends on input [i - radius, i + radius]. The rule is either a table
// or a function; tables may be partial.
class SlidingBlockCode {
 public:
  using Rule = std::function<std::optional<SymbolId>(std::span<const SymbolId>)>;

  SlidingBlockCode() = default;
  SlidingBlockCode(Alphabet input, Alphabet output, std::size_t radius, std::map<Block, SymbolId> table);
  SlidingBlockCode(Alphabet input, Alphabet output, std::size_t radius, Rule rule);

  const Alphabet& input_alphabet() const { return input_; }
  const Alphabet& output_alphabet() const { return output_; }
  std::size_t radius() const { return radius_; }
  std::size_t block_length() const { return 2 * radius_ + 1; }
  bool tabulated() const { return !rule_; }
  const std::map<Block, SymbolId>& table() const { return table_; }

  std::optional<SymbolId> lookup(std::span<const SymbolId> block) const;
  // Throws InvalidInput naming the block when it is unmapped.
  SymbolId operator()(std::span<const SymbolId> block) const;

 private:
  Alphabet input_;
  Alphabet output_;
  std::size_t radius_ = 0;
  std::map<Block, SymbolId> table_;
  Rule rule_;
};

// Output over the window shrunk by the radius on both sides.
Word apply_code(const SlidingBlockCode& code, std::span<const SymbolId> window);
// Image of w^infinity as one period of length |w| (not reduced).
Word apply_code_periodic(const SlidingBlockCode& code, std::span<const SymbolId> period);

SlidingBlockCode identity_code(const Alphabet& alphabet);
// Symbol-to-symbol code (radius 0) from a name map.
SlidingBlockCode relabeling_code(const Alphabet& input, const Alphabet& output,
                                 const std::map<std::string, std::string>& names);
// `second` after `first`; radius adds up.
SlidingBlockCode compose(const SlidingBlockCode& first, const SlidingBlockCode& second);
// Same code over alphabets with the same symbol names in another order.
SlidingBlockCode reindex(const SlidingBlockCode& code, const Alphabet& input, const Alphabet& output);
// Table of the code over the given blocks; unmapped blocks are skipped.
SlidingBlockCode tabulate(const SlidingBlockCode& code, const std::vector<Block>& blocks);

// Blocks of the presented shift of length 2r+1 that the code leaves unmapped.
std::vector<Block> unmapped_blocks(const SlidingBlockCode& code, const LabeledGraph& presentation);
std::string format_block(const Alphabet& alphabet, std::span<const SymbolId> block);

}  // namespace sofic

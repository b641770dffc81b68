#include "sofic/block_code.hpp"

#include "sofic/error.hpp"
#include "sofic/language.hpp"

namespace sofic {

SlidingBlockCode::SlidingBlockCode(Alphabet input, Alphabet output, std::size_t radius,
                                   std::map<Block, SymbolId> table)
    : input_(std::move(input)), output_(std::move(output)), radius_(radius), table_(std::move(table)) {
  for (const auto& [block, out] : table_) {
    if (block.size() != block_length()) {
      throw InvalidInput("block code: rule block of length " + std::to_string(block.size()) + ", expected " +
                         std::to_string(block_length()));
    }
    for (SymbolId s : block) {
      if (s >= input_.size()) throw InvalidInput("block code: input symbol out of range");
    }
    if (out >= output_.size()) throw InvalidInput("block code: output symbol out of range");
  }
}

SlidingBlockCode::SlidingBlockCode(Alphabet input, Alphabet output, std::size_t radius, Rule rule)
    : input_(std::move(input)), output_(std::move(output)), radius_(radius), rule_(std::move(rule)) {}

std::optional<SymbolId> SlidingBlockCode::lookup(std::span<const SymbolId> block) const {
  if (block.size() != block_length()) return std::nullopt;
  if (rule_) return rule_(block);
  auto it = table_.find(Block(block.begin(), block.end()));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

SymbolId SlidingBlockCode::operator()(std::span<const SymbolId> block) const {
  if (auto out = lookup(block)) return *out;
  throw InvalidInput("block code: unmapped block [" + format_block(input_, block) + "]");
}

Word apply_code(const SlidingBlockCode& code, std::span<const SymbolId> window) {
  const std::size_t len = code.block_length();
  if (window.size() < len) {
    throw InvalidInput("apply_code: window of length " + std::to_string(window.size()) +
                       " is shorter than the code block length " + std::to_string(len));
  }
  Word out;
  out.reserve(window.size() - len + 1);
  for (std::size_t i = 0; i + len <= window.size(); ++i) out.push_back(code(window.subspan(i, len)));
  return out;
}

Word apply_code_periodic(const SlidingBlockCode& code, std::span<const SymbolId> period) {
  if (period.empty()) throw InvalidInput("apply_code: empty period");
  const std::size_t t = period.size();
  const std::size_t r = code.radius();
  // Unroll so that positions 0..t-1 see their full neighbourhood.
  Word unrolled;
  unrolled.reserve(t + 2 * r);
  for (std::size_t i = 0; i < t + 2 * r; ++i) unrolled.push_back(period[(i + t * (r / t + 1) - r) % t]);
  return apply_code(code, unrolled);
}

SlidingBlockCode identity_code(const Alphabet& alphabet) {
  return SlidingBlockCode(alphabet, alphabet, 0,
                          [](std::span<const SymbolId> b) -> std::optional<SymbolId> { return b[0]; });
}

SlidingBlockCode relabeling_code(const Alphabet& input, const Alphabet& output,
                                 const std::map<std::string, std::string>& names) {
  std::map<Block, SymbolId> table;
  for (const auto& [from, to] : names) {
    auto a = input.find(from);
    auto b = output.find(to);
    if (!a || !b) throw InvalidInput("relabeling code: unknown symbol '" + (a ? to : from) + "'");
    table[{*a}] = *b;
  }
  return SlidingBlockCode(input, output, 0, std::move(table));
}

SlidingBlockCode compose(const SlidingBlockCode& first, const SlidingBlockCode& second) {
  auto rule = [first, second](std::span<const SymbolId> block) -> std::optional<SymbolId> {
    Word middle;
    const std::size_t len = first.block_length();
    for (std::size_t i = 0; i + len <= block.size(); ++i) {
      auto s = first.lookup(block.subspan(i, len));
      if (!s) return std::nullopt;
      middle.push_back(*s);
    }
    return second.lookup(middle);
  };
  return SlidingBlockCode(first.input_alphabet(), second.output_alphabet(), first.radius() + second.radius(), rule);
}

SlidingBlockCode reindex(const SlidingBlockCode& code, const Alphabet& input, const Alphabet& output) {
  auto map_symbols = [](const Alphabet& from, const Alphabet& to, const char* which) {
    std::vector<SymbolId> m(from.size());
    for (SymbolId s = 0; s < from.size(); ++s) {
      auto t = to.find(from.name(s));
      if (!t) throw InvalidInput(std::string("block code: ") + which + " symbol '" + from.name(s) + "' is unknown");
      m[s] = *t;
    }
    return m;
  };
  const auto in_map = map_symbols(code.input_alphabet(), input, "input");
  const auto out_map = map_symbols(code.output_alphabet(), output, "output");
  if (code.tabulated()) {
    std::map<Block, SymbolId> table;
    for (const auto& [block, out] : code.table()) {
      Block b;
      for (SymbolId s : block) b.push_back(in_map[s]);
      table.emplace(std::move(b), out_map[out]);
    }
    return SlidingBlockCode(input, output, code.radius(), std::move(table));
  }
  std::vector<SymbolId> in_back(input.size(), static_cast<SymbolId>(-1));
  for (SymbolId s = 0; s < in_map.size(); ++s) in_back[in_map[s]] = s;
  auto rule = [code, in_back, out_map](std::span<const SymbolId> block) -> std::optional<SymbolId> {
    Block b;
    for (SymbolId s : block) {
      if (in_back[s] == static_cast<SymbolId>(-1)) return std::nullopt;
      b.push_back(in_back[s]);
    }
    auto out = code.lookup(b);
    if (!out) return std::nullopt;
    return out_map[*out];
  };
  return SlidingBlockCode(input, output, code.radius(), rule);
}

SlidingBlockCode tabulate(const SlidingBlockCode& code, const std::vector<Block>& blocks) {
  std::map<Block, SymbolId> table;
  for (const Block& b : blocks) {
    if (auto out = code.lookup(b)) table.emplace(b, *out);
  }
  return SlidingBlockCode(code.input_alphabet(), code.output_alphabet(), code.radius(), std::move(table));
}

std::vector<Block> unmapped_blocks(const SlidingBlockCode& code, const LabeledGraph& presentation) {
  std::vector<Block> missing;
  std::vector<SymbolId> to_code(presentation.alphabet().size());
  for (SymbolId s = 0; s < to_code.size(); ++s) {
    auto t = code.input_alphabet().find(presentation.alphabet().name(s));
    if (!t) throw InvalidInput("block code: symbol '" + presentation.alphabet().name(s) + "' missing from input alphabet");
    to_code[s] = *t;
  }
  for (const Word& w : words_of_length(presentation, code.block_length())) {
    Block b;
    for (SymbolId s : w) b.push_back(to_code[s]);
    if (!code.lookup(b)) missing.push_back(b);
  }
  return missing;
}

std::string format_block(const Alphabet& alphabet, std::span<const SymbolId> block) {
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) out += ' ';
    out += alphabet.name(block[i]);
  }
  return out;
}

}  // namespace sofic

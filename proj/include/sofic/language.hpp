#pragma once

#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sofic/labeled_graph.hpp"

namespace sofic {

using Path = std::vector<EdgeId>;

// Words of the presented shift with length 1..max_length.
std::set<Word> words_up_to(const LabeledGraph& g, std::size_t max_length);
std::set<Word> words_of_length(const LabeledGraph& g, std::size_t length);
bool in_language(const LabeledGraph& g, std::span<const SymbolId> word);
// Words of length 1..max_length readable from some vertex of `from`.
std::set<Word> follower_words(const LabeledGraph& g, VertexSet from, std::size_t max_length);

// w^infinity, stored primitive and in least rotation.
struct PeriodicWord {
  Word word;

  std::size_t period() const { return word.size(); }
  SymbolId at(long long i) const;
  friend auto operator<=>(const PeriodicWord&, const PeriodicWord&) = default;
};

// Orders periodic words by period, then lexicographically.
bool periodic_less(const PeriodicWord& a, const PeriodicWord& b);
PeriodicWord make_periodic(std::span<const SymbolId> word);
std::string format_periodic(const Alphabet& alphabet, const PeriodicWord& p);
// Parses "0 1 2" or, over single-character alphabets, "012".
Word parse_word(const Alphabet& alphabet, std::string_view text);

// Some bi-infinite path carries the label w^infinity (cycle in the product of
// g with the cyclic phase graph of length |w|).
bool periodic_realizable(const LabeledGraph& g, std::span<const SymbolId> word);
void require_realizable(const LabeledGraph& g, const PeriodicWord& p);

// All periodic points of least period <= max_period, sorted by periodic_less.
std::vector<PeriodicWord> periodic_points(const LabeledGraph& g, std::size_t max_period);

// Every path with `length` edges, in lexicographic order of edge ids.
void for_each_path(const LabeledGraph& g, std::size_t length, const std::function<void(const Path&)>& visit);
std::vector<Path> paths_of_length(const LabeledGraph& g, std::size_t length);
bool is_path(const LabeledGraph& g, std::span<const EdgeId> path);
Word path_label(const LabeledGraph& g, std::span<const EdgeId> path);

}  // namespace sofic

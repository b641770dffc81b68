#include "sofic/language.hpp"

#include <algorithm>
#include <cctype>

#include "sofic/error.hpp"

namespace sofic {

namespace {

void collect_words(const LabeledGraph& g, VertexSet at, Word& prefix, std::size_t max_length, std::size_t min_length,
                   std::set<Word>& out) {
  if (prefix.size() >= min_length && !prefix.empty()) out.insert(prefix);
  if (prefix.size() == max_length) return;
  for (SymbolId a = 0; a < g.alphabet().size(); ++a) {
    VertexSet next = g.step(at, a);
    if (next.empty()) continue;
    prefix.push_back(a);
    collect_words(g, next, prefix, max_length, min_length, out);
    prefix.pop_back();
  }
}

// Vertices of the product with the cyclic phase graph that lie on a cycle.
std::vector<bool> product_core(const LabeledGraph& g, std::span<const SymbolId> word) {
  const std::size_t n = g.vertex_count();
  const std::size_t period = word.size();
  const std::size_t total = n * period;
  auto id = [&](VertexId v, std::size_t k) { return k * n + v; };
  std::vector<std::vector<std::size_t>> succ(total), pred(total);
  for (std::size_t k = 0; k < period; ++k) {
    for (VertexId v = 0; v < n; ++v) {
      for (EdgeId e : g.out_edges(v, word[k])) {
        const std::size_t s = id(v, k), t = id(g.edge(e).target, (k + 1) % period);
        succ[s].push_back(t);
        pred[t].push_back(s);
      }
    }
  }
  std::vector<std::size_t> indeg(total), outdeg(total);
  std::vector<bool> alive(total, true);
  std::vector<std::size_t> queue;
  for (std::size_t x = 0; x < total; ++x) {
    indeg[x] = pred[x].size();
    outdeg[x] = succ[x].size();
    if (indeg[x] == 0 || outdeg[x] == 0) {
      alive[x] = false;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    const std::size_t x = queue.back();
    queue.pop_back();
    for (std::size_t t : succ[x]) {
      if (alive[t] && --indeg[t] == 0) {
        alive[t] = false;
        queue.push_back(t);
      }
    }
    for (std::size_t s : pred[x]) {
      if (alive[s] && --outdeg[s] == 0) {
        alive[s] = false;
        queue.push_back(s);
      }
    }
  }
  return alive;
}

// w is strictly smaller than each of its proper rotations.
bool is_lyndon(std::span<const SymbolId> w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const SymbolId a = w[i], b = w[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: not primitive
    }
  }
  return true;
}

}  // namespace

std::set<Word> words_up_to(const LabeledGraph& g, std::size_t max_length) {
  if (max_length < 1) throw InvalidInput("words_up_to: length bound must be at least 1");
  require_set_capacity(g, "words_up_to");
  std::set<Word> out;
  Word prefix;
  collect_words(g, g.all_vertices(), prefix, max_length, 1, out);
  return out;
}

std::set<Word> words_of_length(const LabeledGraph& g, std::size_t length) {
  if (length < 1) throw InvalidInput("words_of_length: length must be at least 1");
  require_set_capacity(g, "words_of_length");
  std::set<Word> out;
  Word prefix;
  collect_words(g, g.all_vertices(), prefix, length, length, out);
  return out;
}

bool in_language(const LabeledGraph& g, std::span<const SymbolId> word) {
  require_set_capacity(g, "in_language");
  return !g.step(g.all_vertices(), word).empty();
}

std::set<Word> follower_words(const LabeledGraph& g, VertexSet from, std::size_t max_length) {
  require_set_capacity(g, "follower_words");
  std::set<Word> out;
  Word prefix;
  collect_words(g, from, prefix, max_length, 1, out);
  return out;
}

SymbolId PeriodicWord::at(long long i) const {
  const auto t = static_cast<long long>(word.size());
  return word[static_cast<std::size_t>(((i % t) + t) % t)];
}

bool periodic_less(const PeriodicWord& a, const PeriodicWord& b) {
  if (a.period() != b.period()) return a.period() < b.period();
  return a.word < b.word;
}

PeriodicWord make_periodic(std::span<const SymbolId> word) {
  if (word.empty()) throw InvalidInput("periodic word: empty word");
  const std::size_t n = word.size();
  std::size_t root = n;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = word[i] == word[i - d];
    if (repeats) {
      root = d;
      break;
    }
  }
  Word best(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(root));
  for (std::size_t r = 1; r < root; ++r) {
    Word rotated;
    for (std::size_t i = 0; i < root; ++i) rotated.push_back(word[(r + i) % root]);
    if (rotated < best) best = rotated;
  }
  return PeriodicWord{best};
}

std::string format_periodic(const Alphabet& alphabet, const PeriodicWord& p) {
  const std::string body = format_word(alphabet, p.word);
  return (p.period() == 1 ? body : "(" + body + ")") + "^inf";
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  std::vector<std::string> tokens;
  const bool separated = text.find_first_of(" ,") != std::string_view::npos;
  if (separated) {
    std::string current;
    for (char c : text) {
      if (c == ' ' || c == ',') {
        if (!current.empty()) tokens.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    if (!current.empty()) tokens.push_back(current);
  } else if (alphabet.find(text)) {
    tokens.emplace_back(text);
  } else {
    for (char c : text) tokens.emplace_back(1, c);
  }
  Word w;
  for (const auto& t : tokens) {
    auto s = alphabet.find(t);
    if (!s) throw InvalidInput("word: unknown symbol '" + t + "'");
    w.push_back(*s);
  }
  if (w.empty()) throw InvalidInput("word: empty");
  return w;
}

bool periodic_realizable(const LabeledGraph& g, std::span<const SymbolId> word) {
  if (word.empty()) return false;
  auto alive = product_core(g, word);
  return std::any_of(alive.begin(), alive.end(), [](bool b) { return b; });
}

void require_realizable(const LabeledGraph& g, const PeriodicWord& p) {
  if (!periodic_realizable(g, p.word)) {
    throw InvalidInput("periodic point " + format_periodic(g.alphabet(), p) + " is not realizable in the graph");
  }
}

std::vector<PeriodicWord> periodic_points(const LabeledGraph& g, std::size_t max_period) {
  if (max_period < 1) throw InvalidInput("periodic_points: period bound must be at least 1");
  std::set<Word> candidates = words_up_to(g, max_period);
  std::vector<PeriodicWord> out;
  for (const Word& w : candidates) {
    if (is_lyndon(w) && periodic_realizable(g, w)) out.push_back(PeriodicWord{w});
  }
  std::sort(out.begin(), out.end(), periodic_less);
  return out;
}

void for_each_path(const LabeledGraph& g, std::size_t length, const std::function<void(const Path&)>& visit) {
  if (length == 0) return;
  Path path;
  path.reserve(length);
  std::function<void()> extend = [&]() {
    if (path.size() == length) {
      visit(path);
      return;
    }
    for (EdgeId e : g.out_edges(g.edge(path.back()).target)) {
      path.push_back(e);
      extend();
      path.pop_back();
    }
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    path.assign(1, e);
    extend();
  }
}

std::vector<Path> paths_of_length(const LabeledGraph& g, std::size_t length) {
  std::vector<Path> out;
  for_each_path(g, length, [&](const Path& p) { out.push_back(p); });
  return out;
}

bool is_path(const LabeledGraph& g, std::span<const EdgeId> path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.edge_count()) return false;
    if (i > 0 && g.edge(path[i - 1]).target != g.edge(path[i]).source) return false;
  }
  return true;
}

Word path_label(const LabeledGraph& g, std::span<const EdgeId> path) {
  Word w;
  w.reserve(path.size());
  for (EdgeId e : path) w.push_back(g.edge(e).label);
  return w;
}

}  // namespace sofic

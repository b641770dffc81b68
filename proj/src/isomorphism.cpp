#include "sofic/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace sofic {

namespace {

struct Normalized {
  std::size_t n = 0;
  std::set<std::tuple<VertexId, std::size_t, VertexId>> edges;  // label as shared id
  std::vector<std::vector<std::pair<std::size_t, VertexId>>> out, in;
};

Normalized normalize(const LabeledGraph& g, const std::map<std::string, std::size_t>& label_ids) {
  Normalized out;
  out.n = g.vertex_count();
  out.out.resize(out.n);
  out.in.resize(out.n);
  for (const Edge& e : g.edges()) {
    const std::size_t a = label_ids.at(g.alphabet().name(e.label));
    out.edges.emplace(e.source, a, e.target);
    out.out[e.source].emplace_back(a, e.target);
    out.in[e.target].emplace_back(a, e.source);
  }
  return out;
}

// Joint colour refinement of both graphs so that colours are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Normalized& a, const Normalized& b) {
  std::vector<std::size_t> ca(a.n, 0), cb(b.n, 0);
  std::size_t classes = 1;
  while (true) {
    using Signature = std::tuple<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>,
                                 std::vector<std::pair<std::size_t, std::size_t>>>;
    auto signature = [](const Normalized& g, const std::vector<std::size_t>& c, VertexId v) {
      std::vector<std::pair<std::size_t, std::size_t>> outs, ins;
      for (auto [l, t] : g.out[v]) outs.emplace_back(l, c[t]);
      for (auto [l, s] : g.in[v]) ins.emplace_back(l, c[s]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      return Signature{c[v], outs, ins};
    };
    std::map<Signature, std::size_t> ids;
    std::vector<Signature> sa, sb;
    for (VertexId v = 0; v < a.n; ++v) sa.push_back(signature(a, ca, v));
    for (VertexId v = 0; v < b.n; ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (VertexId v = 0; v < a.n; ++v) ca[v] = ids[sa[v]];
    for (VertexId v = 0; v < b.n; ++v) cb[v] = ids[sb[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {ca, cb};
}

class Matcher {
 public:
  Matcher(const Normalized& a, const Normalized& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), map_(a.n, kUnset), used_(b.n, false) {}

  bool run() { return extend(0); }
  const std::vector<VertexId>& mapping() const { return map_; }

 private:
  static constexpr VertexId kUnset = static_cast<VertexId>(-1);

  // Every edge of a between mapped vertices has an image, and the number of
  // such edges matches the number of b edges among the images.
  bool consistent(VertexId v) const {
    std::size_t count_a = 0, count_b = 0;
    for (auto [l, t] : a_.out[v]) {
      if (map_[t] == kUnset) continue;
      ++count_a;
      if (!b_.edges.count({map_[v], l, map_[t]})) return false;
    }
    for (auto [l, s] : a_.in[v]) {
      if (map_[s] == kUnset || s == v) continue;
      ++count_a;
      if (!b_.edges.count({map_[s], l, map_[v]})) return false;
    }
    const VertexId w = map_[v];
    for (auto [l, t] : b_.out[w]) {
      if (mapped_b(t)) ++count_b;
    }
    for (auto [l, s] : b_.in[w]) {
      if (mapped_b(s) && s != w) ++count_b;
    }
    return count_a == count_b;
  }

  bool mapped_b(VertexId w) const { return used_[w]; }

  bool extend(VertexId v) {
    if (v == a_.n) return true;
    for (VertexId w = 0; w < b_.n; ++w) {
      if (used_[w] || cb_[w] != ca_[v]) continue;
      map_[v] = w;
      used_[w] = true;
      if (consistent(v) && extend(v + 1)) return true;
      used_[w] = false;
      map_[v] = kUnset;
    }
    return false;
  }

  const Normalized& a_;
  const Normalized& b_;
  std::vector<std::size_t> ca_, cb_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
};

}  // namespace

Isomorphism graphs_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2) {
  Isomorphism result;
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return result;
  std::set<std::string> labels1, labels2;
  for (const Edge& e : g1.edges()) labels1.insert(g1.alphabet().name(e.label));
  for (const Edge& e : g2.edges()) labels2.insert(g2.alphabet().name(e.label));
  if (labels1 != labels2) return result;
  std::map<std::string, std::size_t> label_ids;
  for (const auto& l : labels1) label_ids.emplace(l, label_ids.size());

  const Normalized a = normalize(g1, label_ids);
  const Normalized b = normalize(g2, label_ids);
  auto [ca, cb] = refine(a, b);
  std::vector<std::size_t> sorted_a = ca, sorted_b = cb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return result;

  Matcher matcher(a, b, std::move(ca), std::move(cb));
  if (!matcher.run()) return result;
  result.isomorphic = true;
  result.vertex_map = matcher.mapping();
  return result;
}

}  // namespace sofic

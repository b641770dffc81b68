#include "doctest.h"
#include "sofic/components.hpp"
#include "sofic/error.hpp"
#include "sofic/fixtures.hpp"
#include "sofic/followers.hpp"
#include "sofic/subset_covers.hpp"
#include "support.hpp"

using namespace sofic;

namespace {

// Stabilized set of the left tail ...www ending at phase k, by iterating the
// set transition from all vertices.
test::Members stabilized(const LabeledGraph& g, const std::vector<unsigned>& w) {
  test::Members t = test::all_of(g);
  while (true) {
    auto next = test::step(g, t, w);
    if (next == t) return t;
    t = next;
  }
}

}  // namespace

TEST_CASE("full subset construction of Example-A") {
  const auto g = fixture_graph("example_a");
  const SetGraph s = subset_construction(g, SubsetMode::full);
  CHECK(s.graph().vertex_count() == 7);
  CHECK(s.graph().edge_count() == 24);
  CHECK(same_by_names(s.graph(), fixture_graph("example_a_subset")));
  // Every edge is the set transition.
  for (const Edge& e : s.graph().edges()) {
    CHECK(test::step(g, test::members_of(s.set(e.source)), e.label) == test::members_of(s.set(e.target)));
  }
}

TEST_CASE("reachable subset construction starts from all vertices") {
  const auto g = fixture_graph("example_a");
  // Breadth-first search over sets, written out independently.
  std::set<test::Members> seen = {test::all_of(g)};
  std::vector<test::Members> queue = {test::all_of(g)};
  while (!queue.empty()) {
    auto d = queue.back();
    queue.pop_back();
    for (unsigned a = 0; a < g.alphabet().size(); ++a) {
      auto t = test::step(g, d, a);
      if (!t.empty() && seen.insert(t).second) queue.push_back(t);
    }
  }
  const SetGraph s = subset_construction(g);
  CHECK(s.graph().vertex_count() == seen.size());
  for (VertexSet v : s.sets()) CHECK(seen.count(test::members_of(v)) == 1);
  CHECK(seen.count({0, 1}) == 0);  // {a,b} is not reached from {a,b,c}
}

TEST_CASE("full mode is capped") {
  std::vector<std::string> names;
  std::vector<std::array<std::string, 3>> edges;
  for (int i = 0; i < 17; ++i) names.push_back("v" + std::to_string(i));
  for (int i = 0; i < 17; ++i) edges.push_back({names[i], "0", names[(i + 1) % 17]});
  const auto g = test::make_graph({"0"}, names, edges);
  CHECK_THROWS_AS(subset_construction(g, SubsetMode::full), LimitExceeded);
  CHECK(subset_construction(g).graph().vertex_count() == 1);
}

TEST_CASE("stable core of Example-A omits {a,b}") {
  const auto g = fixture_graph("example_a");
  const StableCore core = stable_core(g);
  CHECK(core.graph().vertex_count() == 6);
  CHECK(core.graph().edge_count() == 21);
  CHECK(same_by_names(core.graph(), fixture_graph("example_a_past_cover")));
  CHECK_FALSE(core.core.find(VertexSet(0b011)));
  CHECK(follower_partition(core.graph()).discrete());
}

TEST_CASE("stable-set witnesses reproduce their sets") {
  for (const char* name : {"example_a", "example_b", "even_shift", "pq"}) {
    CAPTURE(name);
    const auto g = fixture_graph(name);
    const StableCore core = stable_core(g);
    REQUIRE(core.witnesses.size() == core.graph().vertex_count());
    for (VertexId v = 0; v < core.graph().vertex_count(); ++v) {
      const auto& w = core.witnesses[v];
      REQUIRE_FALSE(w.tail.empty());
      const test::Members tail(w.tail.begin(), w.tail.end()), suffix(w.suffix.begin(), w.suffix.end());
      CHECK(test::step(g, stabilized(g, tail), suffix) == test::members_of(core.core.set(v)));
    }
  }
}

TEST_CASE("stable core equals the word oracle on random graphs") {
  for (const auto& g : random_fixtures(25, 1)) {
    const StableCore core = stable_core(g);
    CHECK(stable_core_oracle(g, std::max<std::size_t>(1, core.monoid_depth)) == core.core.sets());
  }
}

TEST_CASE("stable core follower words are the member unions") {
  for (const char* name : {"example_a", "example_b", "even_shift"}) {
    const auto g = fixture_graph(name);
    const StableCore core = stable_core(g);
    for (VertexId v = 0; v < core.graph().vertex_count(); ++v) {
      CHECK(follower_words(core.graph(), VertexSet::singleton(v), 6) == follower_words(g, core.core.set(v), 6));
    }
  }
}

TEST_CASE("future covers") {
  const auto b = fixture_graph("example_b");
  CHECK(graphs_isomorphic(future_cover(b).cover(), b).isomorphic);
  // Even shift: three future sets (after ...1, after ...10, after ...000).
  const auto e = future_cover(fixture_graph("even_shift"));
  CHECK(e.cover().vertex_count() == 3);
  CHECK(e.cover().edge_count() == 5);
  const auto a = future_cover(fixture_graph("example_a"));
  CHECK(graphs_isomorphic(a.cover(), a.past.graph()).isomorphic);
  // The factor map is a graph homomorphism preserving labels.
  for (EdgeId x = 0; x < a.past.graph().edge_count(); ++x) {
    const Edge& from = a.past.graph().edge(x);
    const Edge& to = a.cover().edge(a.merge.edge_map[x]);
    CHECK(to.label == from.label);
    CHECK(to.source == a.merge.vertex_map[from.source]);
    CHECK(to.target == a.merge.vertex_map[from.target]);
  }
}

TEST_CASE("extended future cover of Example-B") {
  const auto b = fixture_graph("example_b");
  const ExtendedFutureCover e = extended_future_cover(b);
  CHECK(e.extended.graph().vertex_count() == 3);
  CHECK(e.extended.graph().edge_count() == 8);
  CHECK(graphs_isomorphic(e.extended.graph(), fixture_graph("example_b_extended")).isomorphic);
  CHECK(graphs_isomorphic(e.merge.cover, b).isomorphic);
  REQUIRE(e.merge.classes.size() == 2);
  // {a} and {a,b} share a class: sizes 1 and 2 in one class, {b} alone.
  std::multiset<std::size_t> sizes;
  for (const auto& cls : e.merge.classes) sizes.insert(cls.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2});
}

TEST_CASE("alpha on periodic points follows the stabilized past sets") {
  for (const char* name : {"example_a", "example_b", "even_shift"}) {
    CAPTURE(name);
    const auto g = fixture_graph(name);
    const StableCore core = stable_core(g);
    for (const auto& p : periodic_points(g, 4)) {
      const PeriodicRay ray = alpha_on_periodic(core, p);
      REQUIRE(ray.vertices.size() == p.period());
      const test::Members w(p.word.begin(), p.word.end());
      for (std::size_t k = 0; k < p.period(); ++k) {
        // Past set before position k: tail ...w w w[0..k).
        const auto d = test::step(g, stabilized(g, w), test::Members(w.begin(), w.begin() + k));
        CHECK(test::members_of(core.core.set(ray.vertices[k])) == d);
        CHECK(core.graph().edge(ray.edges[k]).label == p.word[k]);
      }
      CHECK(periodic_past_set(g, p.word) == core.core.set(ray.vertices[0]));
    }
  }
}

TEST_CASE("regularity") {
  const auto pq = fixture_graph("pq");
  const auto r = check_regular(pq);
  CHECK_FALSE(r.regular);
  REQUIRE(r.failing.size() == 1);
  CHECK(pq.vertex_name(r.failing[0]) == "q");
  for (const char* name : {"example_a", "example_b", "even_shift", "pq", "single_loop"}) {
    const auto fc = future_cover(fixture_graph(name));
    CHECK(check_regular(fc.past.graph()).regular);
    CHECK(check_regular(fc.cover()).regular);
  }
  CHECK(check_regular(fixture_graph("example_b")).regular);
}

TEST_CASE("stable core budget is a hard limit") {
  CHECK_THROWS_AS(stable_core(fixture_graph("example_a"), 3), LimitExceeded);
}

TEST_CASE("every stable-core vertex is reachable from a source component") {
  for (const auto& g : random_fixtures(10, 50)) {
    const StableCore core = stable_core(g);
    CHECK(reachable_from_sources(core.graph(), components_and_sources(core.graph())));
  }
}

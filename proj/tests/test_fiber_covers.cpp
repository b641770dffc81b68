#include "doctest.h"
#include "sofic/error.hpp"
#include "sofic/fiber_covers.hpp"
#include "sofic/fixtures.hpp"
#include "support.hpp"

using namespace sofic;

namespace {

// Every member of `from` has an edge labeled a (right-resolving base).
bool all_emit(const LabeledGraph& g, const test::Members& from, unsigned a) {
  for (unsigned v : from) {
    if (test::step(g, {v}, a).empty()) return false;
  }
  return true;
}

std::vector<unsigned> repeat(const std::vector<unsigned>& w, std::size_t times) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

TEST_CASE("G'' of Example-A has an edge exactly where every member emits the label") {
  const auto g = fixture_graph("example_a");
  const FiberGraph full = g_double_prime_full(g);
  CHECK(full.graph().vertex_count() == 7);
  std::size_t expected = 0;
  for (VertexSet s : full.sets()) {
    for (unsigned a = 0; a < g.alphabet().size(); ++a) {
      if (all_emit(g, test::members_of(s), a)) ++expected;
    }
  }
  CHECK(full.graph().edge_count() == expected);
  for (EdgeId e = 0; e < full.graph().edge_count(); ++e) {
    const MultiEdge& m = full.multi(e);
    CHECK(m.members.size() == m.source.size());
    CHECK(test::members_of(m.target) == test::step(g, test::members_of(m.source), m.label));
    for (EdgeId x : m.members) CHECK(g.edge(x).label == m.label);
  }
}

TEST_CASE("strict steps need every member to emit") {
  const auto g = fixture_graph("example_a");
  const auto& A = g.alphabet();
  const VertexSet a = VertexSet::singleton(*g.find_vertex("a"));
  const VertexSet ab = a | VertexSet::singleton(*g.find_vertex("b"));
  const VertexSet ac = a | VertexSet::singleton(*g.find_vertex("c"));
  // Only c emits 3.
  CHECK(strict_step(g, ac, *A.find("3")).empty());
  CHECK_FALSE(multi_edge(g, ac, *A.find("3")).has_value());
  CHECK(g.set_name(strict_step(g, ab, *A.find("2"))) == "{a,c}");
  // The permissive subset step keeps going.
  CHECK(g.set_name(g.step(ac, *A.find("3"))) == "{b}");
}

TEST_CASE("G' of Example-A") {
  const auto g = fixture_graph("example_a");
  const GPrime gp = g_prime(g, 6, 8);
  CHECK(gp.graph.graph().vertex_count() == 7);
  CHECK(gp.graph.graph().edge_count() == 18);
  CHECK(same_by_names(gp.graph.graph(), fixture_graph("example_a_gprime")));
  CHECK(gp.census.bounded_covers_exact);
  CHECK(gp.origin.size() == 7);
  // Member edges leave every vertex of the source set once.
  for (EdgeId e = 0; e < gp.graph.graph().edge_count(); ++e) {
    const MultiEdge& m = gp.graph.multi(e);
    VertexSet sources;
    for (EdgeId x : m.members) sources.insert(g.edge(x).source);
    CHECK(sources == m.source);
  }
}

TEST_CASE("fiber sets match paths reading the period many times") {
  for (const char* name : {"example_a", "example_b", "even_shift", "pq"}) {
    CAPTURE(name);
    const auto g = fixture_graph(name);
    const std::size_t reps = g.vertex_count() + 1;
    for (const auto& p : periodic_points(g, 4)) {
      const FiberData data = fiber_sets_on_periodic(g, p);
      REQUIRE(data.fiber.size() == p.period());
      for (std::size_t k = 0; k < p.period(); ++k) {
        const auto rot = test::rotate(p.word, k);
        const auto past = test::step(g, test::all_of(g), repeat(rot, reps));
        test::Members future;
        for (unsigned v = 0; v < g.vertex_count(); ++v) {
          if (!test::step(g, {v}, repeat(rot, reps)).empty()) future.push_back(v);
        }
        CHECK(test::members_of(data.past[k]) == past);
        CHECK(test::members_of(data.future[k]) == future);
        CHECK(data.fiber[k] == (data.past[k] & data.future[k]));
      }
    }
  }
}

TEST_CASE("beta follows the fiber sets") {
  const auto g = fixture_graph("example_a");
  for (const auto& p : periodic_points(g, 4)) {
    const auto beta = beta_on_periodic(g, p);
    const FiberData data = fiber_sets_on_periodic(g, p);
    REQUIRE(beta.size() == p.period());
    for (std::size_t k = 0; k < beta.size(); ++k) {
      CHECK(beta[k].source == data.fiber[k]);
      CHECK(beta[k].label == p.word[k]);
    }
  }
}

TEST_CASE("fiber counts") {
  const auto a = fixture_graph("example_a");
  const auto b = fixture_graph("example_b");
  const auto zero = make_periodic(parse_word(a.alphabet(), "0"));
  CHECK(fiber_count_periodic(a, zero).count == 3);
  CHECK_FALSE(fiber_count_periodic(a, zero).infinite);
  CHECK(to_string(fiber_count_periodic(a, zero)) == "3");
  const auto two = make_periodic(parse_word(b.alphabet(), "2"));
  CHECK(fiber_count_periodic(b, two).count == 2);
  for (const char* name : {"example_a", "example_b", "even_shift", "pq"}) {
    CAPTURE(name);
    const auto g = fixture_graph(name);
    for (const auto& p : periodic_points(g, 5)) {
      const auto c = fiber_count_periodic(g, p);
      CHECK_FALSE(c.infinite);
      CHECK(c.count == test::periodic_cycle_vertices(g, p.word));
    }
  }
}

TEST_CASE("fiber covers reject graphs that are not right-resolving") {
  const auto g = test::make_graph({"0"}, {"a", "b"}, {{"a", "0", "a"}, {"a", "0", "b"}, {"b", "0", "a"}});
  CHECK_THROWS_AS(g_double_prime_full(g), NotRightResolving);
  CHECK_THROWS_AS(g_prime(g, 4, 4), NotRightResolving);
  CHECK_THROWS_AS(beta_on_periodic(g, make_periodic(Word{0})), NotRightResolving);
}

TEST_CASE("co-stable sets are the stable sets of the transposed graph") {
  for (const auto& g : random_fixtures(10, 7)) {
    const StableCore reversed = stable_core(transpose(g));
    std::set<test::Members> expected;
    for (VertexSet s : reversed.core.sets()) expected.insert(test::members_of(s));
    std::set<test::Members> found;
    for (const auto& s : co_stable_sets(g)) found.insert(test::members_of(s));
    CHECK(found == expected);
  }
}

TEST_CASE("maximal dominated paths") {
  for (const char* name : {"example_a", "example_b", "even_shift"}) {
    CAPTURE(name);
    const auto g = fixture_graph(name);
    const StableCore core = stable_core(g);
    const auto& h = core.graph();
    for (const Path& gamma : paths_of_length(h, 3)) {
      const DominatedPath d = maximal_dominated_path(core, gamma);
      REQUIRE(d.vertices.size() == gamma.size() + 1);
      REQUIRE(d.edges.size() == gamma.size());
      const Word label = path_label(h, gamma);
      const test::Members w(label.begin(), label.end());
      test::Members start;
      for (unsigned v : test::members_of(core.core.set(h.edge(gamma[0]).source))) {
        if (!test::step(g, {v}, w).empty()) start.push_back(v);
      }
      CHECK(test::members_of(d.vertices[0]) == start);
      for (std::size_t i = 0; i < gamma.size(); ++i) {
        // Dominated by the stable-core path, carried by the same label.
        CHECK(d.vertices[i + 1].subset_of(core.core.set(h.edge(gamma[i]).target)));
        CHECK(d.edges[i].label == label[i]);
        CHECK(test::members_of(d.vertices[i + 1]) ==
              test::step(g, start, test::Members(w.begin(), w.begin() + static_cast<long>(i) + 1)));
      }
    }
  }
}

#include "sofic/cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "sofic/error.hpp"
#include "sofic/fixtures.hpp"
#include "sofic/followers.hpp"
#include "sofic/io.hpp"
#include "sofic/theorem_checks.hpp"

namespace sofic {

namespace {

struct Options {
  bool json = false;
  bool timings = false;
  std::size_t max_period = 6;
  std::size_t window = 12;
  std::size_t tail_bound = 8;
  std::size_t budget = kDefaultMonoidBudget;
  std::string output;
  std::string dot;
};

class Stopwatch {
 public:
  Stopwatch(RunReport& report, bool enabled) : report_(report), enabled_(enabled) {}
  template <typename F>
  auto operator()(const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    if (enabled_) {
      const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      report_.add_timing(name, ms.count());
    }
    return result;
  }

 private:
  RunReport& report_;
  bool enabled_;
};

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

// Loads a graph, records it in the digest and strips stranded vertices.
LabeledGraph load_input(const std::string& path, RunReport& report) {
  const std::string text = read_file(path);
  report.add_input(path, text);
  LabeledGraph g = parse_graph(text, path);
  if (!is_essential(g)) {
    g = essentialize(g);
    report.add_note("removed vertices without incoming or outgoing edges; " + std::to_string(g.vertex_count()) +
                    " remain");
  }
  return g;
}

void emit_graph(const Options& o, const LabeledGraph& g, const Json& file, RunReport& report) {
  if (!o.output.empty()) write_file(o.output, serialize(file));
  if (!o.dot.empty()) write_file(o.dot, export_dot(g));
  report.set_output(file);
}

void print(const Options& o, const RunReport& report, std::ostream& out) {
  if (o.json) {
    out << serialize(report.json());
  } else {
    out << report.text();
  }
}

void add_counts(RunReport& r, const std::string& name, const LabeledGraph& g) {
  r.add_count(name, g.vertex_count(), g.edge_count());
}

std::string set_list(const LabeledGraph& g, const std::vector<std::vector<VertexId>>& classes) {
  std::string out = "{";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (std::size_t k = 0; k < classes[i].size(); ++k) {
      if (k) out += ",";
      out += g.vertex_name(classes[i][k]);
    }
    out += "}";
  }
  return out + "}";
}

void add_result(RunReport& r, const CheckResult& c, const std::string& suffix = {}) {
  std::string detail = c.detail;
  if (c.passed) detail = std::to_string(c.cases) + " cases" + (c.detail.empty() ? "" : "; " + c.detail);
  r.add_check(c.name + suffix, c.passed, detail);
}

// ---- commands -----------------------------------------------------------

int cmd_check(const Options& o, const std::string& path, std::ostream& out) {
  RunReport r("check");
  const std::string text = read_file(path);
  r.add_input(path, text);
  const LabeledGraph g = parse_graph(text, path);
  add_counts(r, stem(path), g);
  r.add_check("essential", is_essential(g));
  const ComponentInfo info = components_and_sources(g);
  r.add_check("irreducible", info.size() == 1 && info.components[0].size() == g.vertex_count());
  const RightResolvingReport rr = check_right_resolving(g);
  std::string conflict;
  if (!rr.right_resolving) {
    const auto [v, a] = rr.conflicts.front();
    conflict = "vertex " + g.vertex_name(v) + " has two edges labeled " + g.alphabet().name(a);
  }
  r.add_check("right-resolving", rr.right_resolving, conflict);
  if (rr.right_resolving && is_essential(g)) {
    r.add_check("follower-separated", is_follower_separated(g));
    const RegularityReport reg = check_regular(g, o.budget);
    std::string failing;
    for (VertexId v : reg.failing) failing += (failing.empty() ? "fails at " : ", ") + g.vertex_name(v);
    r.add_check("regular", reg.regular, failing);
  } else {
    r.add_check("follower-separated", CheckStatus::skip, "needs an essential right-resolving graph");
    r.add_check("regular", CheckStatus::skip, "needs an essential right-resolving graph");
  }
  print(o, r, out);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_subset(const Options& o, const std::string& path, bool full, std::ostream& out) {
  RunReport r("subset");
  const LabeledGraph g = load_input(path, r);
  Stopwatch time(r, o.timings);
  const SetGraph s = time("subset", [&] { return subset_construction(g, full ? SubsetMode::full : SubsetMode::reachable); });
  add_counts(r, "subset(" + stem(path) + ")", s.graph());
  emit_graph(o, s.graph(), graph_to_json(s.graph(), set_graph_provenance(s, full ? "subset (full)" : "subset")), r);
  print(o, r, out);
  return kExitOk;
}

int cmd_past_cover(const Options& o, const std::string& path, std::ostream& out) {
  RunReport r("past-cover");
  const LabeledGraph g = load_input(path, r);
  Stopwatch time(r, o.timings);
  const StableCore core = time("stable core", [&] { return stable_core(g, o.budget); });
  add_counts(r, "past-cover(" + stem(path) + ")", core.graph());
  r.add_note("transition monoid: " + std::to_string(core.monoid_size) + " elements");
  r.add_check("regular", check_regular(core.graph(), o.budget).regular);
  r.add_check("every vertex reachable from a source component",
              reachable_from_sources(core.graph(), components_and_sources(core.graph())));
  emit_graph(o, core.graph(), graph_to_json(core.graph(), stable_core_provenance(core)), r);
  print(o, r, out);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_merge(const Options& o, const std::string& path, std::ostream& out) {
  RunReport r("merge");
  const LabeledGraph g = load_input(path, r);
  const CoverBundle m = merged_graph(g);
  add_counts(r, "merge(" + stem(path) + ")", m.cover);
  emit_graph(o, m.cover, graph_to_json(m.cover, cover_provenance(m, g, "merged graph")), r);
  print(o, r, out);
  return kExitOk;
}

int cmd_future_cover(const Options& o, const std::string& path, std::ostream& out) {
  RunReport r("future-cover");
  const LabeledGraph g = load_input(path, r);
  Stopwatch time(r, o.timings);
  const FutureCover fc = time("future cover", [&] { return future_cover(g, o.budget); });
  add_counts(r, "past-cover(" + stem(path) + ")", fc.past.graph());
  add_counts(r, "future-cover(" + stem(path) + ")", fc.cover());
  r.add_check("follower-separated", is_follower_separated(fc.cover()));
  emit_graph(o, fc.cover(), graph_to_json(fc.cover(), cover_provenance(fc.merge, fc.past.graph(), "future cover")), r);
  print(o, r, out);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_extended(const Options& o, const std::string& path, std::ostream& out) {
  RunReport r("extended-future-cover");
  const LabeledGraph g = load_input(path, r);
  Stopwatch time(r, o.timings);
  const ExtendedFutureCover e = time("extended future cover", [&] { return extended_future_cover(g, o.budget); });
  add_counts(r, "future-cover(" + stem(path) + ")", e.future.cover());
  add_counts(r, "extended(" + stem(path) + ")", e.extended.graph());
  r.add_check("merge of the extended cover isomorphic to the future cover", e.to_future.isomorphic);
  r.add_note("follower classes: " + set_list(e.extended.graph(), e.merge.classes));
  emit_graph(o, e.extended.graph(), graph_to_json(e.extended.graph(), stable_core_provenance(e.extended)), r);
  print(o, r, out);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_gpp(const Options& o, const std::string& path, std::ostream& out) {
  RunReport r("gpp");
  const LabeledGraph g = load_input(path, r);
  Stopwatch time(r, o.timings);
  const FiberGraph f = time("G''", [&] { return g_double_prime_full(g); });
  add_counts(r, "gpp(" + stem(path) + ")", f.graph());
  const Json file = fiber_graph_to_json(f);
  if (!o.output.empty()) write_file(o.output, serialize(file));
  if (!o.dot.empty()) write_file(o.dot, export_dot(f));
  r.set_output(file);
  print(o, r, out);
  return kExitOk;
}

int cmd_gprime(const Options& o, const std::string& path, std::ostream& out) {
  RunReport r("gprime");
  const LabeledGraph g = load_input(path, r);
  Stopwatch time(r, o.timings);
  const GPrime gp = time("G'", [&] { return g_prime(g, o.max_period, o.tail_bound, o.budget); });
  add_counts(r, "gprime(" + stem(path) + ")", gp.graph.graph());
  const SeedCensus& c = gp.census;
  r.add_note("seeds: " + std::to_string(c.tail_seeds) + " from tails of length <= " + std::to_string(o.tail_bound) +
             ", " + std::to_string(c.periodic_seeds) + " from periodic points of period <= " +
             std::to_string(o.max_period) + ", " + std::to_string(c.exact_seeds) + " in the exact census");
  r.add_check("bounded seeds cover the exact census", c.bounded_covers_exact,
              c.bounded_covers_exact ? "" : "raise --tail-bound");
  const Json file = fiber_graph_to_json(gp.graph, &gp.origin);
  if (!o.output.empty()) write_file(o.output, serialize(file));
  if (!o.dot.empty()) write_file(o.dot, export_dot(gp.graph));
  r.set_output(file);
  print(o, r, out);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_fibers(const Options& o, const std::string& path, std::size_t period, std::ostream& out) {
  RunReport r("fibers");
  const LabeledGraph g = load_input(path, r);
  const StableCore core = stable_core(g, o.budget);
  Json points = Json::array();
  for (const PeriodicWord& p : periodic_points(g, period)) {
    const FiberData f = fiber_sets_on_periodic(g, p);
    const FiberCount count = fiber_count_periodic(g, p);
    const PeriodicRay alpha = alpha_on_periodic(core, p);
    Json sets = Json::array();
    bool same = true;
    for (std::size_t k = 0; k < p.period(); ++k) {
      sets.push_back(g.set_name(f.fiber[k]));
      same = same && f.fiber[k] == core.core.set(alpha.vertices[k]);
    }
    const std::string name = format_periodic(g.alphabet(), p);
    r.add_check(name + ": fiber sets equal past sets", same);
    r.add_note(name + ": " + to_string(count) + " preimage(s), fiber sets " + sets.dump());
    points.push_back({{"point", name}, {"fiber_sets", sets}, {"count", to_string(count)}});
  }
  r.set_output({{"periodic_points", points}});
  print(o, r, out);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

struct SquareSource {
  std::string square;
  std::string graph_g, graph_h, phi, phi_inv, psi, psi_inv;
};

ConjugacySquare load_square_from(const SquareSource& s, RunReport& r) {
  if (!s.square.empty()) {
    r.add_input(s.square, read_file(s.square));
    return load_square(s.square);
  }
  for (const std::string* p : {&s.graph_g, &s.graph_h, &s.phi, &s.phi_inv, &s.psi, &s.psi_inv}) {
    if (p->empty()) throw InvalidInput("lift: give --square or all of GRAPH, --graph-h, --phi, --phi-inv, --psi, --psi-inv");
    r.add_input(*p, read_file(*p));
  }
  return make_square(load_graph(s.graph_g), load_graph(s.graph_h), load_code(s.phi), load_code(s.phi_inv),
                     load_code(s.psi), load_code(s.psi_inv));
}

int cmd_lift(const Options& o, const SquareSource& src, const std::string& table, std::size_t limit,
             std::ostream& out) {
  RunReport r("lift");
  const ConjugacySquare s = load_square_from(src, r);
  Stopwatch time(r, o.timings);
  const LiftedConjugacy lift = time("lift", [&] { return lift_conjugacy(s, o.budget); });
  add_counts(r, "past-cover(G)", lift.setup().g_core().graph());
  add_counts(r, "past-cover(H)", lift.setup().h_core().graph());
  r.add_note("kappa = " + std::to_string(lift.kappa()) + ", block radius D = " + std::to_string(lift.radius()) +
             ", longest path with short component stretches = " + std::to_string(lift.longest_short_path()));
  Json output = {{"kappa", lift.kappa()}, {"radius", lift.radius()}};
  if (!table.empty()) {
    const SlidingBlockCode code = time("table", [&] { return lift.tabulate(limit); });
    write_file(table, serialize(code_to_json(code)));
    r.add_note("wrote " + std::to_string(code.table().size()) + " rules to " + table);
  }
  r.set_output(output);
  print(o, r, out);
  return kExitOk;
}

int cmd_verify(const Options& o, const std::string& square_path, std::size_t samples, std::uint64_t seed,
               std::ostream& out) {
  RunReport r("verify");
  SquareSource src;
  src.square = square_path;
  const ConjugacySquare s = load_square_from(src, r);
  Stopwatch time(r, o.timings);
  const SquareReport sq = time("square", [&] { return verify_square(s, o.window, o.max_period); });
  r.add_check("square commutes on " + std::to_string(sq.windows) + " windows and " +
                  std::to_string(sq.periodic_points) + " periodic points",
              sq.passed(), sq.passed() ? "" : sq.failures.front().check + ": " + sq.failures.front().detail);
  if (sq.passed()) {
    const LiftedConjugacy lift = time("lift", [&] { return lift_conjugacy(s, o.budget); });
    TheoremBounds bounds;
    bounds.max_period = o.max_period;
    bounds.samples = samples;
    bounds.seed = seed;
    const TheoremReport t = time("theorem", [&] { return verify_main_theorem(lift, bounds); });
    for (const CheckResult& c : t.checks) add_result(r, c);
    r.add_note("kappa = " + std::to_string(t.kappa) + ", D = " + std::to_string(t.radius) + ", " +
               std::to_string(t.windows) + " windows of length " + std::to_string(t.window_length) +
               (t.exhaustive ? " (all of them)" : " (sampled)") + ", periodic points up to period " +
               std::to_string(bounds.max_period));
    r.add_note("bounded verification: the checks cover the listed windows and periodic points only");
  } else {
    r.add_check("lifted conjugacy", CheckStatus::skip, "square does not commute");
  }
  print(o, r, out);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_iso(const Options& o, const std::string& a, const std::string& b, std::ostream& out) {
  RunReport r("iso");
  const std::string ta = read_file(a), tb = read_file(b);
  r.add_input(a, ta);
  r.add_input(b, tb);
  const LabeledGraph g1 = parse_graph(ta, a), g2 = parse_graph(tb, b);
  const Isomorphism iso = graphs_isomorphic(g1, g2);
  r.add_check("isomorphic", iso.isomorphic);
  if (iso.isomorphic) {
    Json map = Json::object();
    for (VertexId v = 0; v < g1.vertex_count(); ++v) {
      map[g1.vertex_name(v)] = g2.vertex_name(iso.vertex_map[v]);
      r.add_note(g1.vertex_name(v) + " -> " + g2.vertex_name(iso.vertex_map[v]));
    }
    r.set_output({{"vertex_map", map}});
  }
  print(o, r, out);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_export(const Options& o, const std::string& path, const std::string& what, std::ostream& out) {
  RunReport r("export");
  const LabeledGraph g = load_input(path, r);
  std::string dot;
  if (what == "graph") {
    dot = export_dot(g, stem(path));
  } else if (what == "subset") {
    dot = export_dot(subset_construction(g).graph(), what);
  } else if (what == "past-cover") {
    dot = export_dot(stable_core(g, o.budget).graph(), what);
  } else if (what == "future-cover") {
    dot = export_dot(future_cover(g, o.budget).cover(), what);
  } else if (what == "extended-future-cover") {
    dot = export_dot(extended_future_cover(g, o.budget).extended.graph(), what);
  } else if (what == "gpp") {
    dot = export_dot(g_double_prime_full(g), what);
  } else if (what == "gprime") {
    dot = export_dot(g_prime(g, o.max_period, o.tail_bound, o.budget).graph, what);
  } else {
    throw InvalidInput("export: unknown construction '" + what + "'");
  }
  if (!o.output.empty()) {
    write_file(o.output, dot);
  } else {
    out << dot;
  }
  return kExitOk;
}

int cmd_higher_block(const Options& o, const std::string& path, std::size_t n, std::ostream& out) {
  RunReport r("higher-block");
  const LabeledGraph g = load_input(path, r);
  const ConjugacySquare s = higher_block_square(g, n);
  add_counts(r, "higher-block(" + stem(path) + ")", s.h);
  const Json file = square_to_json(s);
  if (!o.output.empty()) write_file(o.output, serialize(file));
  r.set_output(file);
  print(o, r, out);
  return kExitOk;
}

}  // namespace

RunReport paper_fixture_report(std::size_t max_period, std::size_t window, std::size_t tail_bound) {
  RunReport r("verify-paper");
  for (const std::string& name : fixture_names()) r.add_input(name, fixture_text(name));
  const LabeledGraph a = fixture_graph("example_a");
  const LabeledGraph b = fixture_graph("example_b");
  const LabeledGraph e = fixture_graph("even_shift");
  const LabeledGraph pq = fixture_graph("pq");

  // Example-A
  const SetGraph a_subset = subset_construction(a, SubsetMode::full);
  add_counts(r, "subset(Example-A)", a_subset.graph());
  r.add_check("subset(Example-A) matches the expected graph",
              graphs_isomorphic(a_subset.graph(), fixture_graph("example_a_subset")).isomorphic);
  const FutureCover a_future = future_cover(a);
  add_counts(r, "past-cover(Example-A)", a_future.past.graph());
  const auto ab = a.find_vertex("a"), bb = a.find_vertex("b");
  r.add_check("past-cover(Example-A) matches the expected graph and omits {a,b}",
              graphs_isomorphic(a_future.past.graph(), fixture_graph("example_a_past_cover")).isomorphic &&
                  !a_future.past.core.find(VertexSet::singleton(*ab) | VertexSet::singleton(*bb)));
  r.add_check("past-cover(Example-A) is follower-separated", follower_partition(a_future.past.graph()).discrete());
  add_counts(r, "future-cover(Example-A)", a_future.cover());
  r.add_check("future-cover(Example-A) isomorphic to past-cover(Example-A)",
              graphs_isomorphic(a_future.cover(), a_future.past.graph()).isomorphic);
  const GPrime a_prime = g_prime(a, max_period, tail_bound);
  add_counts(r, "gprime(Example-A)", a_prime.graph.graph());
  r.add_check("gprime(Example-A) matches the expected graph edge for edge",
              same_by_names(a_prime.graph.graph(), fixture_graph("example_a_gprime")));

  // Example-B
  const ExtendedFutureCover b_ext = extended_future_cover(b);
  add_counts(r, "future-cover(Example-B)", b_ext.future.cover());
  r.add_check("future-cover(Example-B) isomorphic to Example-B", graphs_isomorphic(b_ext.future.cover(), b).isomorphic);
  add_counts(r, "extended(Example-B)", b_ext.extended.graph());
  r.add_check("extended(Example-B) matches the expected graph",
              graphs_isomorphic(b_ext.extended.graph(), fixture_graph("example_b_extended")).isomorphic);
  r.add_check("merge of extended(Example-B) isomorphic to Example-B", graphs_isomorphic(b_ext.merge.cover, b).isomorphic);
  // Extended-cover vertices are sets of future-cover vertices; name them by
  // the matching vertices of Example-B itself.
  const Isomorphism to_b = graphs_isomorphic(b_ext.future.cover(), b);
  std::string classes = "{";
  for (const auto& cls : b_ext.merge.classes) {
    classes += classes.size() > 1 ? ",{" : "{";
    for (std::size_t k = 0; k < cls.size(); ++k) {
      VertexSet members;
      b_ext.extended.core.set(cls[k]).for_each([&](VertexId v) { members.insert(to_b.vertex_map[v]); });
      classes += (k ? "," : "") + b.set_name(members);
    }
    classes += "}";
  }
  classes += "}";
  r.add_check("follower classes of extended(Example-B)", classes == "{{{a},{a,b}},{{b}}}", classes);

  // Even shift
  add_counts(r, "future-cover(G_E)", future_cover(e).cover());

  // Property suites on every base fixture.
  const std::vector<std::pair<std::string, LabeledGraph>> bases = {
      {"Example-A", a}, {"Example-B", b}, {"G_E", e}, {"single_loop", fixture_graph("single_loop")}, {"pq", pq}};
  for (const auto& [name, g] : bases) {
    const std::string suffix = " [" + name + "]";
    add_result(r, check_oracle_equivalence(g), suffix);
    add_result(r, check_cover_regularity(g), suffix);
    add_result(r, check_idempotence(g), suffix);
    add_result(r, check_follower_language(g, std::min<std::size_t>(window, 8)), suffix);
    for (const CheckResult& c : check_periodic_identities(g, max_period, tail_bound)) add_result(r, c, suffix);
    add_result(r, check_source_injectivity(g), suffix);
  }
  const RegularityReport pq_regular = check_regular(pq);
  r.add_check("pq is not regular, failing exactly at q",
              !pq_regular.regular && pq_regular.failing.size() == 1 && pq.vertex_name(pq_regular.failing[0]) == "q");
  const FiberCount a0 = fiber_count_periodic(a, make_periodic(parse_word(a.alphabet(), "0")));
  const FiberCount b2 = fiber_count_periodic(b, make_periodic(parse_word(b.alphabet(), "2")));
  r.add_check("Example-A: 0^inf has 3 preimages", !a0.infinite && a0.count == 3, to_string(a0));
  r.add_check("Example-B: 2^inf has 2 preimages", !b2.infinite && b2.count == 2, to_string(b2));

  std::size_t oracle_ok = 0;
  const auto randoms = random_fixtures(25, 1);
  for (const LabeledGraph& g : randoms) oracle_ok += check_oracle_equivalence(g).passed;
  r.add_check("stable core = word oracle on 25 random graphs", oracle_ok == randoms.size(),
              std::to_string(oracle_ok) + "/" + std::to_string(randoms.size()));
  return r;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidInput*>(&e)) return kExitInvalidInput;
  if (dynamic_cast<const LimitExceeded*>(&e)) return kExitLimit;
  return kExitCheckFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covers of sofic shifts and lifted conjugacies between them", "sofic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.add_flag("--timings", o.timings, "Include stage timings in the report");
  app.add_option("-P,--max-period", o.max_period, "Largest period of periodic points")->capture_default_str();
  app.add_option("-l,--window", o.window, "Window length for word and path checks")->capture_default_str();
  app.add_option("-B,--tail-bound", o.tail_bound, "Length bound for tail words")->capture_default_str();
  app.add_option("--budget", o.budget, "Transition monoid size limit")->capture_default_str();

  std::string graph, graph2, what = "graph", table;
  bool full = false, dot = false;
  std::size_t period = 0, n = 2, samples = 400, limit = 200000;
  std::uint64_t seed = 1;
  SquareSource square;
  std::function<int()> action;

  auto with_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write the derived graph file here");
    sub->add_option("--dot", o.dot, "Write a DOT rendering here");
  };
  auto graph_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", graph, "Graph file")->required();
    return sub;
  };

  graph_command("check", "Structural predicates of a presentation")->callback([&] {
    action = [&] { return cmd_check(o, graph, out); };
  });
  auto* subset = graph_command("subset", "Subset construction");
  subset->add_flag("--full", full, "Use every nonempty subset (at most 16 vertices)");
  with_output(subset);
  subset->callback([&] { action = [&] { return cmd_subset(o, graph, full, out); }; });
  auto* past = graph_command("past-cover", "Stable core of the subset construction");
  with_output(past);
  past->callback([&] { action = [&] { return cmd_past_cover(o, graph, out); }; });
  auto* merge = graph_command("merge", "Merge vertices with equal follower sets (right-resolving input)");
  with_output(merge);
  merge->callback([&] { action = [&] { return cmd_merge(o, graph, out); }; });
  auto* future = graph_command("future-cover", "Future cover of the presented shift");
  with_output(future);
  future->callback([&] { action = [&] { return cmd_future_cover(o, graph, out); }; });
  auto* extended = graph_command("extended-future-cover", "Stable core of the future cover");
  with_output(extended);
  extended->callback([&] { action = [&] { return cmd_extended(o, graph, out); }; });
  auto* gpp = graph_command("gpp", "Fiber graph on every nonempty subset (at most 16 vertices)");
  with_output(gpp);
  gpp->callback([&] { action = [&] { return cmd_gpp(o, graph, out); }; });
  auto* gprime = graph_command("gprime", "Fiber graph generated by fibers of tail points");
  with_output(gprime);
  gprime->callback([&] { action = [&] { return cmd_gprime(o, graph, out); }; });
  auto* fibers = graph_command("fibers", "Fiber sets and preimage counts of periodic points");
  fibers->add_option("--period", period, "Largest period")->required();
  fibers->callback([&] { action = [&] { return cmd_fibers(o, graph, period, out); }; });

  auto* lift = app.add_subcommand("lift", "Lift a conjugacy square to the stable cores");
  lift->add_option("graph", square.graph_g, "Graph file of G");
  lift->add_option("--square", square.square, "Square file");
  lift->add_option("--graph-h", square.graph_h, "Graph file of H");
  lift->add_option("--phi", square.phi, "Code file X_G -> X_H");
  lift->add_option("--phi-inv", square.phi_inv, "Code file X_H -> X_G");
  lift->add_option("--psi", square.psi, "Code file Y -> Z");
  lift->add_option("--psi-inv", square.psi_inv, "Code file Z -> Y");
  lift->add_option("--table", table, "Write the lifted code as a table here");
  lift->add_option("--limit", limit, "Largest table size")->capture_default_str();
  lift->callback([&] { action = [&] { return cmd_lift(o, square, table, limit, out); }; });

  auto* verify = app.add_subcommand("verify", "Check a conjugacy square and its lift");
  verify->add_option("--square", square.square, "Square file")->required();
  verify->add_option("--samples", samples, "Random windows per bias level")->capture_default_str();
  verify->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(o, square.square, samples, seed, out); }; });

  app.add_subcommand("verify-paper", "Run the bundled example fixtures")->callback([&] {
    action = [&] {
      RunReport r = paper_fixture_report(o.max_period, o.window, o.tail_bound);
      print(o, r, out);
      return r.passed() ? kExitOk : kExitCheckFailed;
    };
  });

  auto* iso = app.add_subcommand("iso", "Label-preserving isomorphism test");
  iso->add_option("graph1", graph, "First graph file")->required();
  iso->add_option("graph2", graph2, "Second graph file")->required();
  iso->callback([&] { action = [&] { return cmd_iso(o, graph, graph2, out); }; });

  auto* exp = graph_command("export", "Render a graph or a derived cover");
  exp->add_flag("--dot", dot, "DOT output (the only format)");
  exp->add_option("--cover", what, "graph, subset, past-cover, future-cover, extended-future-cover, gpp or gprime")
      ->capture_default_str();
  exp->add_option("-o,--output", o.output, "Write here instead of standard output");
  exp->callback([&] { action = [&] { return cmd_export(o, graph, what, out); }; });

  auto* hb = graph_command("higher-block", "Write the higher-block conjugacy square of a graph");
  hb->add_option("-n,--block", n, "Block length")->capture_default_str();
  hb->add_option("-o,--output", o.output, "Square file to write");
  hb->callback([&] { action = [&] { return cmd_higher_block(o, graph, n, out); }; });

  std::vector<char*> argv;
  std::vector<std::string> storage(args);
  if (storage.empty()) storage.push_back("sofic");
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "sofic: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

int run_cli(int argc, char** argv) {
  return run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace sofic

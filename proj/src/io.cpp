#include "sofic/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sofic/error.hpp"

namespace sofic {

namespace {

[[noreturn]] void fail(std::string_view source, const std::string& where, const std::string& what) {
  throw InvalidInput(std::string(source) + ": " + where + ": " + what);
}

const Json& member(const Json& obj, const char* key, std::string_view source, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(source, where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string as_string(const Json& j, std::string_view source, const std::string& where) {
  if (!j.is_string()) fail(source, where, "expected a string, found " + std::string(j.type_name()));
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const Json& j, std::string_view source, const std::string& where) {
  if (!j.is_array()) fail(source, where, "expected an array, found " + std::string(j.type_name()));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], source, where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_format(const Json& j, std::string_view source) {
  if (!j.is_object()) fail(source, "document", "expected an object, found " + std::string(j.type_name()));
  auto it = j.find("format");
  if (it != j.end() && (!it->is_number_integer() || it->get<int>() != kFileFormat)) {
    fail(source, "format", "unsupported format " + it->dump() + " (expected 1)");
  }
}

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(source, "byte " + std::to_string(e.byte), "malformed JSON");
  }
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json sets_json(const LabeledGraph& base, const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) {
    Json members = Json::array();
    s.for_each([&](VertexId v) { members.push_back(base.vertex_name(v)); });
    out.push_back(members);
  }
  return out;
}

// Resolves a square entry: inline object or a path next to the square file.
Json square_entry(const Json& j, const char* key, const std::filesystem::path& dir, std::string& source) {
  const Json& v = member(j, key, source, "");
  if (v.is_string()) {
    const std::string path = (dir / v.get<std::string>()).string();
    source = path;
    return parse_json(read_file(path), path);
  }
  source += std::string(":") + key;
  return v;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput(path + ": cannot write file");
  out << text;
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

LabeledGraph graph_from_json(const Json& j, std::string_view source) {
  check_format(j, source);
  GraphDescription d;
  d.alphabet = as_strings(member(j, "alphabet", source, ""), source, "alphabet");
  d.vertices = as_strings(member(j, "vertices", source, ""), source, "vertices");
  const Json& edges = member(j, "edges", source, "");
  if (!edges.is_array()) fail(source, "edges", "expected an array, found " + std::string(edges.type_name()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_object()) fail(source, where, "expected an object");
    d.edges.push_back({as_string(member(e, "from", source, where), source, where + ".from"),
                       as_string(member(e, "label", source, where), source, where + ".label"),
                       as_string(member(e, "to", source, where), source, where + ".to")});
  }
  try {
    return validate_graph(d);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(source) + ": " + e.what());
  }
}

LabeledGraph parse_graph(std::string_view text, std::string_view source) {
  return graph_from_json(parse_json(text, source), source);
}

LabeledGraph load_graph(const std::string& path) { return parse_graph(read_file(path), path); }

Json graph_to_json(const LabeledGraph& g, const Json& provenance) {
  Json j;
  j["format"] = kFileFormat;
  j["alphabet"] = g.alphabet().symbols();
  j["vertices"] = g.vertex_names();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"from", g.vertex_name(e.source)}, {"label", g.alphabet().name(e.label)},
                     {"to", g.vertex_name(e.target)}});
  }
  j["edges"] = std::move(edges);
  if (!provenance.is_null()) j["provenance"] = provenance;
  return j;
}

Json set_graph_provenance(const SetGraph& s, std::string_view construction) {
  // The base graph is not stored in SetGraph; member names are recovered
  // from the vertex names, which list the members.
  Json j;
  j["construction"] = construction;
  Json members = Json::array();
  for (VertexId v = 0; v < s.graph().vertex_count(); ++v) members.push_back(s.graph().vertex_name(v));
  j["members"] = std::move(members);
  return j;
}

Json stable_core_provenance(const StableCore& core) {
  Json j;
  j["construction"] = "stable core";
  j["members"] = sets_json(core.base, core.core.sets());
  Json witnesses = Json::array();
  for (const StableWitness& w : core.witnesses) {
    witnesses.push_back({{"tail", format_word(core.base.alphabet(), w.tail)},
                         {"suffix", format_word(core.base.alphabet(), w.suffix)}});
  }
  j["witnesses"] = std::move(witnesses);
  j["monoid_size"] = core.monoid_size;
  return j;
}

Json cover_provenance(const CoverBundle& bundle, const LabeledGraph& origin, std::string_view construction) {
  Json j;
  j["construction"] = construction;
  Json classes = Json::array();
  for (const auto& cls : bundle.classes) {
    Json names = Json::array();
    for (VertexId v : cls) names.push_back(origin.vertex_name(v));
    classes.push_back(names);
  }
  j["classes"] = std::move(classes);
  Json vmap = Json::object();
  for (VertexId v = 0; v < origin.vertex_count(); ++v) {
    vmap[origin.vertex_name(v)] = bundle.cover.vertex_name(bundle.vertex_map[v]);
  }
  j["vertex_map"] = std::move(vmap);
  Json emap = Json::object();
  for (EdgeId e = 0; e < origin.edge_count(); ++e) emap[origin.edge_name(e)] = bundle.cover.edge_name(bundle.edge_map[e]);
  j["edge_map"] = std::move(emap);
  return j;
}

Json fiber_graph_to_json(const FiberGraph& f, const std::vector<SeedOrigin>* origin) {
  Json prov;
  prov["construction"] = origin ? "G'" : "G''";
  prov["members"] = sets_json(f.base(), f.sets());
  if (origin) {
    Json o = Json::array();
    for (SeedOrigin s : *origin) o.push_back(std::string(to_string(s)));
    prov["seed_origin"] = std::move(o);
  }
  Json j = graph_to_json(f.graph(), prov);
  for (EdgeId e = 0; e < f.graph().edge_count(); ++e) {
    Json members = Json::array();
    for (EdgeId m : f.multi(e).members) members.push_back(f.base().edge_name(m));
    j["edges"][e]["member_edges"] = std::move(members);
  }
  return j;
}

SlidingBlockCode code_from_json(const Json& j, std::string_view source) {
  check_format(j, source);
  const Json& r = member(j, "window_radius", source, "");
  if (!r.is_number_unsigned()) fail(source, "window_radius", "expected a nonnegative integer");
  const std::size_t radius = r.get<std::size_t>();
  Alphabet input, output;
  try {
    input = Alphabet(as_strings(member(j, "input_alphabet", source, ""), source, "input_alphabet"));
    output = Alphabet(as_strings(member(j, "output_alphabet", source, ""), source, "output_alphabet"));
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(source) + ": " + e.what());
  }
  const Json& rules = member(j, "rules", source, "");
  if (!rules.is_array()) fail(source, "rules", "expected an array");
  std::map<Block, SymbolId> table;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const std::string where = "rules[" + std::to_string(i) + "]";
    const auto names = as_strings(member(rules[i], "block", source, where), source, where + ".block");
    if (names.size() != 2 * radius + 1) {
      fail(source, where + ".block", "length " + std::to_string(names.size()) + " differs from 2r+1 = " +
                                         std::to_string(2 * radius + 1));
    }
    Block block;
    for (std::size_t k = 0; k < names.size(); ++k) {
      auto s = input.find(names[k]);
      if (!s) fail(source, where + ".block[" + std::to_string(k) + "]", "unknown input symbol '" + names[k] + "'");
      block.push_back(*s);
    }
    const std::string out_name = as_string(member(rules[i], "out", source, where), source, where + ".out");
    auto out = output.find(out_name);
    if (!out) fail(source, where + ".out", "unknown output symbol '" + out_name + "'");
    if (!table.emplace(block, *out).second) fail(source, where, "duplicate block");
  }
  return SlidingBlockCode(std::move(input), std::move(output), radius, std::move(table));
}

SlidingBlockCode load_code(const std::string& path) { return code_from_json(parse_json(read_file(path), path), path); }

Json code_to_json(const SlidingBlockCode& code) {
  if (!code.tabulated()) throw InvalidInput("code: only tabulated codes can be serialized");
  Json j;
  j["format"] = kFileFormat;
  j["window_radius"] = code.radius();
  j["input_alphabet"] = code.input_alphabet().symbols();
  j["output_alphabet"] = code.output_alphabet().symbols();
  Json rules = Json::array();
  for (const auto& [block, out] : code.table()) {
    Json names = Json::array();
    for (SymbolId s : block) names.push_back(code.input_alphabet().name(s));
    rules.push_back({{"block", std::move(names)}, {"out", code.output_alphabet().name(out)}});
  }
  j["rules"] = std::move(rules);
  return j;
}

ConjugacySquare load_square(const std::string& path) {
  const Json j = parse_json(read_file(path), path);
  check_format(j, path);
  const auto dir = std::filesystem::path(path).parent_path();
  auto graph = [&](const char* key) {
    std::string source = path;
    const Json v = square_entry(j, key, dir, source);
    return graph_from_json(v, source);
  };
  auto code = [&](const char* key) {
    std::string source = path;
    const Json v = square_entry(j, key, dir, source);
    return code_from_json(v, source);
  };
  return make_square(graph("g"), graph("h"), code("phi"), code("phi_inv"), code("psi"), code("psi_inv"));
}

Json square_to_json(const ConjugacySquare& s) {
  // Rule-based codes are written as tables over the blocks that occur.
  auto on_paths = [](const SlidingBlockCode& c, const LabeledGraph& g) {
    if (c.tabulated()) return c;
    return tabulate(c, paths_of_length(g, c.block_length()));
  };
  auto on_words = [](const SlidingBlockCode& c, const LabeledGraph& g) {
    if (c.tabulated()) return c;
    const auto words = words_of_length(g, c.block_length());
    return tabulate(c, std::vector<Block>(words.begin(), words.end()));
  };
  Json j;
  j["format"] = kFileFormat;
  j["g"] = graph_to_json(s.g);
  j["h"] = graph_to_json(s.h);
  j["phi"] = code_to_json(on_paths(s.phi, s.g));
  j["phi_inv"] = code_to_json(on_paths(s.phi_inv, s.h));
  j["psi"] = code_to_json(on_words(s.psi, s.g));
  j["psi_inv"] = code_to_json(on_words(s.psi_inv, s.h));
  return j;
}

std::string export_dot(const LabeledGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << dot_quote(g.vertex_name(v)) << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << dot_quote(g.vertex_name(e.source)) << " -> " << dot_quote(g.vertex_name(e.target))
        << " [label=" << dot_quote(g.alphabet().name(e.label)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const FiberGraph& f, std::string_view name) {
  const LabeledGraph& g = f.graph();
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << dot_quote(g.vertex_name(v)) << ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << dot_quote(g.vertex_name(ed.source)) << " -> " << dot_quote(g.vertex_name(ed.target))
        << " [label=" << dot_quote(g.alphabet().name(ed.label) + " x" + std::to_string(f.multi(e).members.size()))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sofic

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "sofic/conjugacy.hpp"
#include "sofic/fiber_covers.hpp"
#include "sofic/subset_covers.hpp"

namespace sofic {

using Json = nlohmann::ordered_json;

inline constexpr int kFileFormat = 1;

// Graph files: {"format":1, "alphabet":[..], "vertices":[..],
// "edges":[{"from","label","to"}..], "provenance":{..}}. "format" may be
// omitted. Errors are InvalidInput with "<source>: <location>: <message>".
LabeledGraph parse_graph(std::string_view text, std::string_view source = "<input>");
LabeledGraph graph_from_json(const Json& j, std::string_view source = "<input>");
LabeledGraph load_graph(const std::string& path);

Json graph_to_json(const LabeledGraph& g, const Json& provenance = nullptr);
std::string serialize(const Json& j);
void write_file(const std::string& path, std::string_view text);
std::string read_file(const std::string& path);

// Provenance blocks for derived graphs.
Json set_graph_provenance(const SetGraph& s, std::string_view construction);
Json stable_core_provenance(const StableCore& core);
Json cover_provenance(const CoverBundle& bundle, const LabeledGraph& origin, std::string_view construction);

// G'' and G' with a "member_edges" list on every edge.
Json fiber_graph_to_json(const FiberGraph& f, const std::vector<SeedOrigin>* origin = nullptr);

// Code files: {"format":1, "window_radius":r, "input_alphabet":[..],
// "output_alphabet":[..], "rules":[{"block":[..], "out":s}..]}.
SlidingBlockCode code_from_json(const Json& j, std::string_view source = "<input>");
SlidingBlockCode load_code(const std::string& path);
Json code_to_json(const SlidingBlockCode& code);

// Square files: {"format":1, "g", "h", "phi", "phi_inv", "psi", "psi_inv"};
// each entry is an inline object or a path relative to the square file.
ConjugacySquare load_square(const std::string& path);
Json square_to_json(const ConjugacySquare& s);

std::string export_dot(const LabeledGraph& g, std::string_view name = "G");
// Edge labels carry the number of member edges.
std::string export_dot(const FiberGraph& f, std::string_view name = "G");

}  // namespace sofic

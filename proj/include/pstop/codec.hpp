#pragma once

// Interchange formats. Every JSON document is emitted with sorted keys and
// points in canonical carrier order, so output is byte-stable.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pstop/builders.hpp"
#include "pstop/space.hpp"

namespace pstop {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

/// {"points": [..], "kind": "point-limit", "limits": {"p": ["q", ..]}} or
/// {"points": [..], "kind": "subset-limit",
///  "limits": [{"filter": [..], "limits": [..]}, ..]}.
Space read_space(const json& doc);
json write_space(const Space& s);

/// Edge-list text: an optional "# vertices: a b c" header, then one "u v"
/// pair per line. Other '#' lines are comments.
GraphData read_edge_list(const std::string& text);
std::string write_edge_list(const GraphData& g);

HypergraphData read_hypergraph(const json& doc);
json write_hypergraph(const HypergraphData& h);

/// Header row of point names, then one row of distances per point. A leading
/// label column is accepted.
ScaledMetricData read_distance_csv(const std::string& text, double scale);

FiniteTopologyData read_topology(const json& doc);
json write_topology(const FiniteTopologyData& t);

/// A space given inline or as a path relative to base.
Space read_space_ref(const json& v, const std::filesystem::path& base, const std::string& where);
/// {"domain": <space doc | path>, "codomain": <space doc | path>,
///  "assignment": {"p": "q", ..}}. Relative paths resolve against base_dir.
SpaceMap read_map(const json& doc, const std::filesystem::path& base_dir = {});
json write_map(const SpaceMap& f, bool embed_spaces = true);
/// Assignment only, as {"p": "q"} in canonical domain order.
json write_assignment(const Space& dom, const Space& cod, const Assignment& a);

std::string read_text_file(const std::filesystem::path& p);
json read_json_file(const std::filesystem::path& p);
/// Reads a space from a .json document, an edge list (.edges / .txt) or a
/// CSV matrix (needs scale).
Space load_space(const std::filesystem::path& p);

/// Canonical textual rendering used for all emitted JSON.
std::string dump(const json& j);

}  // namespace pstop

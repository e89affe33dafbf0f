#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "linkgraph/multigraph.hpp"

namespace linkgraph {

using Json = nlohmann::ordered_json;

// Map JSON: 1-indexed sigma and alpha images, isolated vertex count, and an
// optional weight list keyed by 1-indexed edge (edges numbered by least dart).
Json map_to_json(const CombinatorialMap& g);
CombinatorialMap map_from_json(const Json& j);

// a plane map plus one c/d label per edge, given either as a top-level "cd"
// array or through the "cd" field of each weight
struct LabeledGraph {
    CombinatorialMap map;
    std::vector<CdLabel> labels;
};
LabeledGraph labeled_graph_from_json(const Json& j);
Json labeled_graph_to_json(const CombinatorialMap& g, const std::vector<CdLabel>& labels);

Json multigraph_to_json(const AbstractMultigraph& g);

// ParseError on malformed text
Json parse_json_text(const std::string& text);

}  // namespace linkgraph

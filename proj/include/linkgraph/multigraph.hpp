#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkgraph/combinatorial_map.hpp"

namespace linkgraph {

struct AbstractMultigraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> labels;  // empty or one per edge

    int degree(int v) const;
};

// vertices: sigma orbits in Orbits order, then isolated vertices
AbstractMultigraph underlying_graph(const CombinatorialMap& g);

class BudgetExceeded : public Error {
public:
    BudgetExceeded(int edges, int budget);
};

// respect_labels: an isomorphism must also carry every edge to the edge with
// the same label.
bool graph_is_isomorphic(const AbstractMultigraph& g, const AbstractMultigraph& h,
                         int budget = 40, bool respect_labels = false);

struct GraphPredicates {
    bool is_bipartite = false;
    bool components_eulerian = false;
    std::vector<std::vector<int>> blocks;  // edge indices per biconnected block
    std::vector<int> cut_vertices;
};

GraphPredicates graph_predicates(const AbstractMultigraph& g);
bool is_bipartite(const AbstractMultigraph& g);
bool all_degrees_even(const AbstractMultigraph& g);
int num_components(const AbstractMultigraph& g);

std::string to_dot(const AbstractMultigraph& g, const std::string& name = "G");

}  // namespace linkgraph

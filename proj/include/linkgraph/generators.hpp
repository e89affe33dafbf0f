#pragma once

#include <random>
#include <set>
#include <vector>

#include "linkgraph/link_diagram.hpp"
#include "linkgraph/states.hpp"

namespace linkgraph {

using Rng = std::mt19937_64;

// uniformly random rotation on 2e darts; may be disconnected and of any genus
CombinatorialMap random_map(Rng& rng, int edges, bool weighted = true);
// connected plane map grown by pendant edges and face chords
CombinatorialMap random_plane_map(Rng& rng, int edges, bool weighted = true);
std::set<EdgeId> random_subset(Rng& rng, int edges);
std::vector<Weight> random_weights(Rng& rng, int edges);

// every connected plane map with the given edge count, one per
// orientation-preserving isomorphism class
std::vector<CombinatorialMap> plane_maps_with_edges(int edges);

// connected diagram with at most max_crossings crossings; random signs and
// random component orientations
LinkDiagram random_diagram(Rng& rng, int max_crossings);

}  // namespace linkgraph

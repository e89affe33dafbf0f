#pragma once

#include <string>
#include <vector>

#include "linkgraph/states.hpp"

namespace linkgraph {

enum class VertexKind : std::uint8_t { Tait, Dual, Crossing };
enum class Provenance : std::uint8_t { Tait, Dual };

// Standard immersion of T and T* as one plane map.  Overlay edge 4e+j is a
// half of T-edge e: j=0 joins x_e to the tail end u of e, j=1 to the head end
// v, j=2 joins x_e to the face on the right of u->v and j=3 to the face on its
// left.  Dart 2k of overlay edge k sits at the far end, dart 2k+1 at x_e.
struct OverlayMap {
    CombinatorialMap map;
    std::vector<VertexKind> vertex_kind;  // per overlay vertex (sigma orbit)
    std::vector<int> vertex_origin;       // T vertex, T face, or T edge
    std::vector<Provenance> source;       // per overlay edge
    std::vector<EdgeId> parent;           // per overlay edge
};

OverlayMap overlay_pair(const CombinatorialMap& t);

// odd c-degree vertices of T and of T*; both empty iff admissible
struct Admissibility {
    std::vector<int> odd_tait;
    std::vector<int> odd_dual;
    bool admissible() const { return odd_tait.empty() && odd_dual.empty(); }
};

Admissibility admissibility(const CombinatorialMap& t, const std::vector<CdLabel>& labels);

struct PhiGraph {
    OverlayMap overlay;
    std::vector<CdLabel> labels;
    std::vector<char> kept;           // per overlay edge
    std::vector<int> region_of_face;  // per overlay face
    int num_regions = 0;
    AbstractMultigraph c_graph;        // c-edges of T on V(T)
    AbstractMultigraph c_prime_graph;  // duals of d-edges on V(T*)
};

PhiGraph build_phi(const CombinatorialMap& t, const std::vector<CdLabel>& labels);
// edge e of the result is T-edge e
AbstractMultigraph region_dual(const PhiGraph& phi);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SeifertReport {
    std::vector<Check> checks;
    std::vector<CdLabel> labels;
    int regions = 0;
    AbstractMultigraph phi_star;
    bool all_pass() const;
};

SeifertReport verify_seifert_characterization(const LinkDiagram& d, const CheckerboardColoring& col);

// even d-count on each fundamental cycle of a spanning forest of T
bool even_d_cycles(const CombinatorialMap& t, const std::vector<CdLabel>& labels);

struct Reconstruction {
    LinkDiagram diagram;
    CheckerboardColoring coloring;  // black faces are the vertices of T
};

// T must be plane and carry Tait signs.  Throws NotEulerian for inadmissible
// labels and Error("NotPlane") otherwise.
Reconstruction reconstruct_link(const CombinatorialMap& t, const std::vector<CdLabel>& labels);

bool region_dual_identity(const CombinatorialMap& g, const std::set<EdgeId>& a);

// number of distinct cd labelings over all orientations of the components
int distinct_labelings(const LinkDiagram& d);

}  // namespace linkgraph

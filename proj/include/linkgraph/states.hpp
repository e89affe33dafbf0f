#pragma once

#include <set>
#include <string>
#include <vector>

#include "linkgraph/arrow_presentation.hpp"
#include "linkgraph/link_diagram.hpp"
#include "linkgraph/multigraph.hpp"

namespace linkgraph {

enum class Splice : std::uint8_t { A, B };
using SpliceState = std::vector<Splice>;

SpliceState parse_state(const std::string& s, int num_crossings);
std::string state_string(const SpliceState& s);

// One vertex per black face, one edge per crossing (edge c = crossing c),
// weights (m_c, sigma_c).
CombinatorialMap tait_graph(const LinkDiagram& d, const CheckerboardColoring& col);

// state circles as an arrow presentation; labels are crossings
ArrowPresentation state_presentation(const LinkDiagram& d, const SpliceState& s);
int state_circle_count(const LinkDiagram& d, const SpliceState& s);
CombinatorialMap state_ribbon_graph(const LinkDiagram& d, const SpliceState& s, const CheckerboardColoring& col);

struct CanonicalStates {
    SpliceState all_a, all_b, seifert, tait_black, tait_white;
};

CanonicalStates canonical_states(const LinkDiagram& d, const CheckerboardColoring& col);
SpliceState seifert_state(const LinkDiagram& d);
SpliceState opposite_state(const SpliceState& s);

std::set<EdgeId> state_dual_set(const LinkDiagram& d, const SpliceState& s, const CheckerboardColoring& col);

struct SeifertData {
    int circle_count = 0;
    CombinatorialMap seifert_map;
    int genus = 0;          // genus of the ribbon graph
    int boundary = 0;       // p of the ribbon graph
    int surface_genus = 0;  // genus of the surface from Seifert's algorithm
    AbstractMultigraph graph;
};

SeifertData seifert_data(const LinkDiagram& d);

// label c exactly when m = sigma
std::vector<CdLabel> cd_labeling(const LinkDiagram& d, const CheckerboardColoring& col);
// the same labels obtained by asking whether the oriented smoothing joins the
// two black corners at each crossing
std::vector<CdLabel> cd_labeling_by_regions(const LinkDiagram& d, const CheckerboardColoring& col);

}  // namespace linkgraph

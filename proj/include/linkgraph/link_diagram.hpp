#pragma once

#include <array>
#include <string>
#include <vector>

#include "linkgraph/combinatorial_map.hpp"

namespace linkgraph {

// Darts of a diagram are 4*c + pos.  Positions run counterclockwise around
// crossing c starting at the incoming under-strand, so pos 2 is the outgoing
// under-strand and pos 1 / pos 3 carry the over-strand.
class LinkDiagram {
public:
    LinkDiagram() : n_(0) {}
    // arc_of_dart has 4n entries; arc_ends[a] = {tail dart, head dart}.
    LinkDiagram(int num_crossings, std::vector<int> arc_of_dart, std::vector<std::array<Dart, 2>> arc_ends);

    int num_crossings() const { return n_; }
    int num_arcs() const { return static_cast<int>(ends_.size()); }
    int num_components() const { return static_cast<int>(components_.size()); }
    int num_faces() const { return static_cast<int>(faces_.cycles.size()); }

    static int crossing_of(Dart d) { return d >> 2; }
    static int position_of(Dart d) { return d & 3; }
    static Dart rotate(Dart d) { return (d & ~3) | ((d + 1) & 3); }

    int arc_at(Dart d) const { return arc_of_[d]; }
    Dart tail(int arc) const { return ends_[arc][0]; }
    Dart head(int arc) const { return ends_[arc][1]; }
    // the other end of the arc leaving d
    Dart opposite(Dart d) const { return ends_[arc_of_[d]][0] == d ? ends_[arc_of_[d]][1] : ends_[arc_of_[d]][0]; }
    bool incoming(Dart d) const { return ends_[arc_of_[d]][1] == d; }
    // over-strand runs from pos 3 to pos 1
    bool over_from_3(int c) const { return incoming(4 * c + 3); }

    const Orbits& faces() const { return faces_; }
    int face_of(Dart d) const { return faces_.index[d]; }
    // face of the corner between pos k and pos k+1 at crossing c
    int corner_face(int c, int k) const { return faces_.index[opposite(4 * c + k)]; }
    // face on the left of an arc when travelling along it
    int left_face(int arc) const { return faces_.index[head(arc)]; }
    int right_face(int arc) const { return faces_.index[tail(arc)]; }

    // arcs of each component in travel order, each starting at its least arc;
    // components sorted by least arc
    const std::vector<std::vector<int>>& components() const { return components_; }
    int component_of_arc(int arc) const { return component_of_[arc]; }

    // PD tuples with 1-based labels numbered along components
    std::vector<std::array<int, 4>> to_pd() const;
    std::string to_pd_text() const;

    bool operator==(const LinkDiagram& o) const { return arc_of_ == o.arc_of_ && ends_ == o.ends_; }

private:
    int n_;
    std::vector<int> arc_of_;
    std::vector<std::array<Dart, 2>> ends_;
    Orbits faces_;
    std::vector<std::vector<int>> components_;
    std::vector<int> component_of_;
};

LinkDiagram parse_pd(const std::string& text);
LinkDiagram diagram_from_pd(const std::vector<std::array<int, 4>>& pd);

// reverse the orientation of every component whose bit is set
LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<bool>& which);

struct CheckerboardColoring {
    std::vector<char> black;  // per face
    CheckerboardColoring swapped() const;
    int num_black() const;
    bool operator==(const CheckerboardColoring&) const = default;
};

// first: the face left of arc 1 is white
std::pair<CheckerboardColoring, CheckerboardColoring> checkerboard(const LinkDiagram& d);

struct CrossingSign {
    Sign tait;
    Sign oriented;
};

std::vector<CrossingSign> crossing_signs(const LinkDiagram& d, const CheckerboardColoring& col);

}  // namespace linkgraph

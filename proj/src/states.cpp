#include "linkgraph/states.hpp"

#include <algorithm>

namespace linkgraph {

SpliceState parse_state(const std::string& s, int num_crossings) {
    SpliceState out;
    for (char ch : s) {
        if (ch == 'A' || ch == 'a') out.push_back(Splice::A);
        else if (ch == 'B' || ch == 'b') out.push_back(Splice::B);
        else throw Error("ParseError", std::string("state letters must be A or B, got '") + ch + "'");
    }
    if (static_cast<int>(out.size()) != num_crossings)
        throw Error("ParseError", "state has " + std::to_string(out.size()) + " letters for " +
                                      std::to_string(num_crossings) + " crossings");
    return out;
}

std::string state_string(const SpliceState& s) {
    std::string out;
    for (Splice x : s) out.push_back(x == Splice::A ? 'A' : 'B');
    return out;
}

CombinatorialMap tait_graph(const LinkDiagram& d, const CheckerboardColoring& col) {
    const int n = d.num_crossings();
    auto signs = crossing_signs(d, col);
    // crossing c has black corners {1,3} when m=+ and {0,2} otherwise; the
    // lower one carries dart 2c
    auto tait_dart = [&](Dart x) {
        int c = LinkDiagram::crossing_of(x), k = LinkDiagram::position_of(x);
        int low = signs[c].tait == Sign::Plus ? 1 : 0;
        return 2 * c + (k == low ? 0 : 1);
    };
    std::vector<Dart> sigma(2 * n, -1);
    for (auto& face : d.faces().cycles) {
        if (!col.black[d.face_of(face[0])]) continue;
        // the boundary walk keeps the face on its right; reverse it for the
        // counterclockwise rotation
        std::vector<Dart> rot;
        for (Dart x : face) rot.push_back(tait_dart(d.opposite(x)));
        std::reverse(rot.begin(), rot.end());
        for (size_t i = 0; i < rot.size(); ++i) sigma[rot[i]] = rot[(i + 1) % rot.size()];
    }
    std::vector<Weight> w;
    for (auto& s : signs) w.push_back({s.tait, s.oriented, std::nullopt});
    return CombinatorialMap(std::move(sigma), 0, std::move(w));
}

namespace {

int partner(Splice s, int p) {
    if (s == Splice::A) return p ^ 1;              // (0,1) (2,3)
    return p == 0 ? 3 : p == 3 ? 0 : 3 - p;        // (1,2) (3,0)
}

}  // namespace

ArrowPresentation state_presentation(const LinkDiagram& d, const SpliceState& s) {
    const int n = d.num_crossings();
    std::vector<char> seen(4 * n, 0);
    ArrowPresentation ap;
    for (Dart start = 0; start < 4 * n; ++start) {
        if (seen[start]) continue;
        std::vector<Arrow> cyc;
        Dart x = start;
        do {
            int c = LinkDiagram::crossing_of(x), p = LinkDiagram::position_of(x);
            int q = partner(s[c], p);
            seen[x] = 1;
            seen[4 * c + q] = 1;
            cyc.push_back({c, q == ((p + 1) & 3) ? ArrowDir::Along : ArrowDir::Against});
            x = d.opposite(4 * c + q);
        } while (x != start);
        ap.cycles.push_back(std::move(cyc));
    }
    return ap;
}

int state_circle_count(const LinkDiagram& d, const SpliceState& s) {
    return static_cast<int>(state_presentation(d, s).cycles.size());
}

CombinatorialMap state_ribbon_graph(const LinkDiagram& d, const SpliceState& s, const CheckerboardColoring& col) {
    ArrowPresentation ap = state_presentation(d, s);
    auto signs = crossing_signs(d, col);
    std::set<EdgeId> a = state_dual_set(d, s, col);
    for (int c = 0; c < d.num_crossings(); ++c) {
        Sign m = a.count(c) ? negate(signs[c].tait) : signs[c].tait;
        ap.label_weights[c] = {m, signs[c].oriented, std::nullopt};
    }
    return from_arrow_presentation(ap);
}

SpliceState seifert_state(const LinkDiagram& d) {
    SpliceState s;
    for (int c = 0; c < d.num_crossings(); ++c) s.push_back(d.over_from_3(c) ? Splice::A : Splice::B);
    return s;
}

SpliceState opposite_state(const SpliceState& s) {
    SpliceState o = s;
    for (auto& x : o) x = x == Splice::A ? Splice::B : Splice::A;
    return o;
}

CanonicalStates canonical_states(const LinkDiagram& d, const CheckerboardColoring& col) {
    const int n = d.num_crossings();
    CanonicalStates cs;
    cs.all_a.assign(n, Splice::A);
    cs.all_b.assign(n, Splice::B);
    cs.seifert = seifert_state(d);
    auto signs = crossing_signs(d, col);
    for (auto& x : signs) {
        cs.tait_black.push_back(x.tait == Sign::Minus ? Splice::A : Splice::B);
        cs.tait_white.push_back(x.tait == Sign::Minus ? Splice::B : Splice::A);
    }
    return cs;
}

std::set<EdgeId> state_dual_set(const LinkDiagram& d, const SpliceState& s, const CheckerboardColoring& col) {
    auto signs = crossing_signs(d, col);
    std::set<EdgeId> a;
    for (int c = 0; c < d.num_crossings(); ++c) {
        bool plus = signs[c].tait == Sign::Plus;
        if ((plus && s[c] == Splice::A) || (!plus && s[c] == Splice::B)) a.insert(c);
    }
    return a;
}

SeifertData seifert_data(const LinkDiagram& d) {
    SeifertData out;
    auto col = checkerboard(d).first;
    SpliceState s = seifert_state(d);
    out.seifert_map = state_ribbon_graph(d, s, col);
    out.circle_count = static_cast<int>(out.seifert_map.vertices().cycles.size());
    MapCounts mc = counts(out.seifert_map);
    out.genus = mc.g;
    out.boundary = mc.p;
    out.surface_genus = (d.num_crossings() - out.circle_count - d.num_components() + 2) / 2;
    out.graph = underlying_graph(out.seifert_map);
    return out;
}

std::vector<CdLabel> cd_labeling(const LinkDiagram& d, const CheckerboardColoring& col) {
    std::vector<CdLabel> out;
    for (auto& x : crossing_signs(d, col)) out.push_back(x.tait == x.oriented ? CdLabel::C : CdLabel::D);
    return out;
}

std::vector<CdLabel> cd_labeling_by_regions(const LinkDiagram& d, const CheckerboardColoring& col) {
    std::vector<CdLabel> out;
    SpliceState s = seifert_state(d);
    for (int c = 0; c < d.num_crossings(); ++c) {
        // the splice merges the two corners it does not hug
        int hugged = partner(s[c], 0) == 1 ? 0 : 3;
        bool hugged_black = col.black[d.corner_face(c, hugged)];
        out.push_back(hugged_black ? CdLabel::D : CdLabel::C);
    }
    return out;
}

}  // namespace linkgraph

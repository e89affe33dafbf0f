#include "linkgraph/parallels.hpp"

#include <algorithm>

namespace linkgraph {

int grid_index(int parent, int i, int j, int r) { return parent * r * r + (i - 1) * r + (j - 1); }

ParallelDiagram parallel_diagram(const LinkDiagram& d, int r) {
    if (r < 1) throw Error("BadR", "r must be at least 1");
    const int n = d.num_crossings();
    ParallelDiagram out;
    out.r = r;
    out.grid.resize(n * r * r);
    // over copy j lies in row y; rows count northwards
    auto row = [&](int c, int j) { return d.over_from_3(c) ? r + 1 - j : j; };
    auto cell = [&](int c, int x, int y) {
        int j = d.over_from_3(c) ? r + 1 - y : y;
        return grid_index(c, x, j, r);
    };
    for (int c = 0; c < n; ++c)
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) out.grid[grid_index(c, i, j, r)] = {c, i, j, i, row(c, j)};

    const int nn = n * r * r;
    std::vector<int> arc_of(4 * nn, -1);
    std::vector<std::array<Dart, 2>> ends;
    auto add_arc = [&](Dart tail, Dart head, StrandCopy sc) {
        int id = static_cast<int>(ends.size());
        arc_of[tail] = arc_of[head] = id;
        ends.push_back({tail, head});
        out.strands.push_back(sc);
    };
    // where copy k leaves or enters the grid of c through position p
    auto exit_dart = [&](int c, int p, int k) {
        if (p == 2) return 4 * cell(c, k, r) + 2;
        if (p == 1) return 4 * cell(c, r, r + 1 - k) + 1;
        return 4 * cell(c, 1, k) + 3;
    };
    auto entry_dart = [&](int c, int p, int k) {
        if (p == 0) return 4 * cell(c, k, 1) + 0;
        if (p == 3) return 4 * cell(c, 1, r + 1 - k) + 3;
        return 4 * cell(c, r, k) + 1;
    };
    for (int a = 0; a < d.num_arcs(); ++a) {
        Dart t = d.tail(a), h = d.head(a);
        for (int k = 1; k <= r; ++k)
            add_arc(exit_dart(LinkDiagram::crossing_of(t), LinkDiagram::position_of(t), k),
                    entry_dart(LinkDiagram::crossing_of(h), LinkDiagram::position_of(h), k), {a, k});
    }
    for (int c = 0; c < n; ++c) {
        int under_arc = d.arc_at(4 * c);
        int over_arc = d.arc_at(4 * c + (d.over_from_3(c) ? 3 : 1));
        for (int x = 1; x <= r; ++x)
            for (int y = 1; y < r; ++y) add_arc(4 * cell(c, x, y) + 2, 4 * cell(c, x, y + 1) + 0, {under_arc, x});
        for (int y = 1; y <= r; ++y) {
            int j = d.over_from_3(c) ? r + 1 - y : y;
            for (int x = 1; x < r; ++x) {
                if (d.over_from_3(c))
                    add_arc(4 * cell(c, x, y) + 1, 4 * cell(c, x + 1, y) + 3, {over_arc, j});
                else
                    add_arc(4 * cell(c, x + 1, y) + 3, 4 * cell(c, x, y) + 1, {over_arc, j});
            }
        }
    }
    out.diagram = LinkDiagram(nn, std::move(arc_of), std::move(ends));
    return out;
}

SpliceState induced_state(const SpliceState& s, const ParallelDiagram& p) {
    SpliceState out;
    for (auto& g : p.grid) out.push_back(s.at(g.parent));
    return out;
}

CheckerboardColoring parallel_coloring(const LinkDiagram& d, const CheckerboardColoring& col,
                                       const ParallelDiagram& p) {
    const LinkDiagram& dr = p.diagram;
    const int r = p.r;
    // a black corner of crossing 0 of D and the matching outer corner of its grid
    int k = col.black[d.corner_face(0, 1)] ? 1 : 2;
    auto at = [&](int x, int y) {
        for (size_t q = 0; q < p.grid.size(); ++q)
            if (p.grid[q].parent == 0 && p.grid[q].x == x && p.grid[q].y == y) return static_cast<int>(q);
        return -1;
    };
    int seed = k == 1 ? dr.corner_face(at(r, r), 1) : dr.corner_face(at(1, r), 2);
    CheckerboardColoring c = checkerboard(dr).first;
    return c.black[seed] ? c : c.swapped();
}

ParallelTait parallel_tait(const LinkDiagram& d, const CheckerboardColoring& col, int r) {
    ParallelTait pt;
    pt.r = r;
    pt.parallel = parallel_diagram(d, r);
    pt.coloring = parallel_coloring(d, col, pt.parallel);
    pt.t_r = tait_graph(pt.parallel.diagram, pt.coloring);
    for (auto& x : crossing_signs(d, col)) pt.base_signs.push_back(x.tait);
    for (auto& x : crossing_signs(pt.parallel.diagram, pt.coloring)) pt.signs.push_back(x.tait);
    if (r >= 2) {
        ParallelDiagram prev = parallel_diagram(d, r - 1);
        CheckerboardColoring pc = parallel_coloring(d, col, prev);
        for (auto& x : crossing_signs(prev.diagram, pc)) pt.prev_signs.push_back(x.tait);
    }
    for (auto& g : pt.parallel.grid) {
        pt.rho.push_back(g.parent);
        bool plus = pt.base_signs[g.parent] == Sign::Plus;
        // normalize so that the black diagonal is x = y
        int yt = plus ? g.y : r + 1 - g.y;
        if (g.x == yt) {
            pt.phi.push_back({true, g.parent});
            continue;
        }
        int x2 = g.x, y2 = yt;
        if (g.x < yt) --y2;
        else --x2;
        int rp = r - 1;
        int y_prev = plus ? y2 : rp + 1 - y2;
        int j_prev = d.over_from_3(g.parent) ? rp + 1 - y_prev : y_prev;
        pt.phi.push_back({false, grid_index(g.parent, x2, j_prev, rp)});
    }
    MapCounts mc = counts(pt.t_r);
    pt.v = mc.v;
    pt.e = mc.e;
    pt.f = mc.p;
    for (auto& face : pt.t_r.faces().cycles) ++pt.face_sizes[static_cast<int>(face.size())];
    return pt;
}

bool verify_overlay_base(const LinkDiagram& d, const CheckerboardColoring& col) {
    ParallelTait pt = parallel_tait(d, col, 2);
    OverlayMap ov = overlay_pair(tait_graph(d, col));
    return map_isomorphic(pt.t_r, ov.map, true, false);
}

bool verify_face_structure(const LinkDiagram& d, const CheckerboardColoring& col, int r) {
    ParallelTait pt = parallel_tait(d, col, r);
    CombinatorialMap t = tait_graph(d, col);
    std::map<int, int> expected;
    if (r % 2 == 0) {
        expected[4] = pt.e / 2;
    } else {
        for (auto& face : t.faces().cycles) ++expected[static_cast<int>(face.size())];
        expected[4] += t.num_edges() * (r * r - 1) / 2;
    }
    return pt.face_sizes == expected;
}

bool verify_overlay_recurrence(const LinkDiagram& d, const CheckerboardColoring& col) {
    return verify_overlay_base(d, col) && verify_face_structure(d, col, 3) && verify_face_structure(d, col, 4);
}

CountCheck parallel_counts(const LinkDiagram& d, const CheckerboardColoring& col, int r) {
    ParallelTait pt = parallel_tait(d, col, r);
    MapCounts base = counts(tait_graph(d, col));
    CountCheck c;
    c.r = r;
    c.v = pt.v;
    c.e = pt.e;
    c.f = pt.f;
    c.e_formula = r * r * base.e;
    if (r % 2 == 0) {
        c.f_formula = r * r * base.e / 2;
        c.v_formula = 2 + r * r * base.e / 2;
    } else {
        c.f_formula = base.p + base.e * (r * r - 1) / 2;
        c.v_formula = base.v + base.e * (r * r - 1) / 2;
    }
    return c;
}

bool check_sign_projection(const ParallelTait& pt) {
    if (pt.r < 2) return false;
    const int m = pt.t_r.num_edges();
    if (static_cast<int>(pt.signs.size()) != m) return false;
    for (EdgeId x = 0; x < m; ++x) {
        const Projection& pr = pt.phi[x];
        Sign expect = pr.base ? pt.base_signs[pr.edge] : negate(pt.prev_signs[pr.edge]);
        if (pt.signs[x] != expect) return false;
    }
    for (auto& cyc : pt.t_r.vertices().cycles)
        for (Dart a : cyc)
            for (Dart b : cyc) {
                EdgeId x = CombinatorialMap::edge_of(a), y = CombinatorialMap::edge_of(b);
                if (!pt.phi[x].base && pt.phi[y].base && pt.signs[x] == pt.signs[y]) return false;
            }
    return true;
}

std::set<EdgeId> induced_A_r(const CombinatorialMap& t, const std::set<EdgeId>& a, const ParallelTait& pt) {
    for (EdgeId x : a)
        if (x < 0 || x >= t.num_edges()) throw Error("UnknownEdge", "no edge " + std::to_string(x + 1));
    std::set<EdgeId> out;
    for (EdgeId x = 0; x < static_cast<EdgeId>(pt.rho.size()); ++x) {
        EdgeId base = pt.rho[x];
        bool same = pt.signs[x] == t.weight(base).tait;
        if ((a.count(base) && same) || (!a.count(base) && !same)) out.insert(x);
    }
    return out;
}

int turaev_upper_bound(const LinkDiagram& d, int r) {
    if (r < 0) throw Error("BadR", "r must be non-negative");
    CheckerboardColoring col = checkerboard(d).first;
    int g = counts(state_ribbon_graph(d, canonical_states(d, col).all_a, col)).g;
    return (r + 1) * g + r * r * d.num_crossings() - r;
}

}  // namespace linkgraph

namespace linkgraph {

namespace {

int face_count_without(const CombinatorialMap& g, const std::set<EdgeId>& removed) {
    return counts(delete_edges(g, removed)).p;
}

GenusRecord genus_record(const LinkDiagram& d, const CheckerboardColoring& col, const SpliceState& s, int r,
                         int g, int e) {
    CombinatorialMap t = tait_graph(d, col);
    std::set<EdgeId> a = state_dual_set(d, s, col);
    GenusRecord rec;
    rec.r = r;

    ParallelTait next = parallel_tait(d, col, r + 1);
    SpliceState s_next = induced_state(s, next.parallel);
    CombinatorialMap g_next = state_ribbon_graph(next.parallel.diagram, s_next, next.coloring);
    rec.oracle_genus = counts(g_next).g;

    ParallelTait cur = parallel_tait(d, col, r);
    SpliceState s_cur = induced_state(s, cur.parallel);
    rec.previous_genus = counts(state_ribbon_graph(cur.parallel.diagram, s_cur, cur.coloring)).g;

    rec.step_value = rec.previous_genus + g + r * e - 1;
    rec.iterated_value = (r + 1) * g + e * r * (r + 1) / 2 - r;
    rec.closed_form_value = (r + 1) * g + r * r * e - r;

    const int et = t.num_edges();
    rec.p_complement = face_count_without(t, complement(t, a));
    rec.p_a = face_count_without(t, a);
    rec.tait_printed_twice = (2 * r * r + r + 1) * et - (r + 1) * (rec.p_complement - rec.p_a) + 2;
    rec.tait_closed_form_twice = (2 * r * r + r + 1) * et - (r + 1) * (rec.p_complement + rec.p_a) + 2;
    rec.tait_iterated_twice = (r + 1) * (r + 1) * et - (r + 1) * (rec.p_complement + rec.p_a) + 2;

    std::set<EdgeId> a_next = induced_A_r(t, a, next);
    // the same rule read off the signs of the dual of T_r
    CombinatorialMap cur_dual = dual(cur.t_r);
    std::set<EdgeId> a_cur;
    for (EdgeId x = 0; x < cur_dual.num_edges(); ++x) {
        EdgeId base = cur.rho[x];
        bool same = cur_dual.weight(x).tait == t.weight(base).tait;
        if (a.count(base) == static_cast<size_t>(same)) a_cur.insert(x);
    }
    rec.split_deleted = face_count_without(next.t_r, a_next) ==
                    face_count_without(cur_dual, a_cur) + rec.p_a;
    rec.split_kept = face_count_without(next.t_r, complement(next.t_r, a_next)) ==
                    face_count_without(cur_dual, complement(cur_dual, a_cur)) + rec.p_complement;
    rec.state_identity = ribbon_equal(g_next, partial_dual(next.t_r, a_next));
    return rec;
}

}  // namespace

std::string GenusReport::selected() const {
    bool it = true, c1 = true;
    for (auto& rec : records) {
        it = it && rec.match_iterated();
        c1 = c1 && rec.match_closed_form();
    }
    if (it && c1) return "both";
    if (it) return "iterated";
    if (c1) return "closed-form";
    return "neither";
}

bool GenusReport::tait_formula_matches_selected() const {
    std::string sel = selected();
    for (auto& rec : records) {
        int twice = 2 * rec.oracle_genus;
        if ((sel == "closed-form" || sel == "both") && twice != rec.tait_closed_form_twice) return false;
        if ((sel == "iterated" || sel == "both") && twice != rec.tait_iterated_twice) return false;
        if (sel == "neither") return false;
    }
    return true;
}

bool GenusReport::consistent() const {
    for (auto& rec : records)
        if (!rec.match_step() || !rec.split_deleted || !rec.split_kept || !rec.state_identity) return false;
    return selected() != "neither" && tait_formula_matches_selected();
}

GenusReport parallel_genus_report(const LinkDiagram& d, const CheckerboardColoring& col, const SpliceState& s,
                                  int r_max) {
    if (r_max < 1) throw Error("BadR", "r_max must be at least 1");
    if (static_cast<int>(s.size()) != d.num_crossings()) throw Error("BadState", "state length differs from crossing count");
    GenusReport rep;
    MapCounts base = counts(state_ribbon_graph(d, s, col));
    rep.g = base.g;
    rep.e = base.e;
    rep.records.resize(r_max);
#pragma omp parallel for schedule(dynamic)
    for (int r = 1; r <= r_max; ++r) rep.records[r - 1] = genus_record(d, col, s, r, rep.g, rep.e);
    return rep;
}

std::vector<GenusReport> special_state_reports(const LinkDiagram& d, int r_max) {
    CheckerboardColoring col = checkerboard(d).first;
    CanonicalStates cs = canonical_states(d, col);
    std::vector<std::pair<std::string, SpliceState>> states = {
        {"allA", cs.all_a}, {"allB", cs.all_b}, {"seifert", cs.seifert}};
    std::vector<GenusReport> out;
    for (auto& [name, s] : states) {
        out.push_back(parallel_genus_report(d, col, s, r_max));
        out.back().state = name;
    }
    return out;
}

}  // namespace linkgraph

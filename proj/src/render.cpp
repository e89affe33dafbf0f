#include "linkgraph/render.hpp"

#include <cstdio>
#include <sstream>

namespace linkgraph {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string row_text(const char* fmt, const std::string& a, int v, int e, int k, int p, int g) {
    char buf[128];
    std::snprintf(buf, sizeof buf, fmt, a.c_str(), v, e, k, p, g);
    return buf;
}

InvariantRow row_of(const std::string& name, const CombinatorialMap& m) {
    MapCounts c = counts(m);
    return {name, c.v, c.e, c.k, c.p, c.g};
}

std::string labels_string(const std::vector<CdLabel>& labels) {
    std::string s;
    for (auto l : labels) s += cd_char(l);
    return s;
}

Json diagram_json(const LinkDiagram& d) {
    Json j;
    j["pd"] = d.to_pd_text();
    j["crossings"] = d.num_crossings();
    j["components"] = d.num_components();
    j["faces"] = d.num_faces();
    return j;
}

bool tait_pair_ok(const LinkDiagram& d) {
    auto [c1, c2] = checkerboard(d);
    CombinatorialMap t1 = tait_graph(d, c1), t2 = tait_graph(d, c2);
    return counts(t1).g == 0 && counts(t2).g == 0 && ribbon_equal(t2, dual(t1));
}

Json check_json(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "dot") return Format::Dot;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw Error("Usage", "unknown format " + s);
}

std::vector<InvariantRow> invariant_rows(const LinkDiagram& d) {
    auto [c1, c2] = checkerboard(d);
    CanonicalStates cs = canonical_states(d, c1);
    SeifertData sd = seifert_data(d);
    return {
        row_of("tait_black", tait_graph(d, c1)),
        row_of("tait_white", tait_graph(d, c2)),
        row_of("all_a", state_ribbon_graph(d, cs.all_a, c1)),
        row_of("all_b", state_ribbon_graph(d, cs.all_b, c1)),
        row_of("seifert", sd.seifert_map),
        {"seifert_surface", sd.circle_count, d.num_crossings(), 1, d.num_components(), sd.surface_genus},
    };
}

Rendered render_invariants(const LinkDiagram& d, Format f) {
    Rendered out;
    out.pass = tait_pair_ok(d);
    auto rows = invariant_rows(d);
    switch (f) {
    case Format::Json: {
        Json j;
        j["diagram"] = diagram_json(d);
        Json gs = Json::array();
        for (auto& r : rows) {
            Json x;
            x["graph"] = r.graph;
            x["v"] = r.v;
            x["e"] = r.e;
            x["k"] = r.k;
            x["p"] = r.p;
            x["g"] = r.g;
            gs.push_back(x);
        }
        j["graphs"] = gs;
        j["tait_graphs_dual"] = out.pass;
        out.text = dump(j);
        break;
    }
    case Format::Csv:
        out.text = "graph,v,e,k,p,g\n";
        for (auto& r : rows) out.text += row_text("%s,%d,%d,%d,%d,%d\n", r.graph, r.v, r.e, r.k, r.p, r.g);
        break;
    case Format::Text:
        out.text = "pd " + d.to_pd_text() + "\n";
        out.text += "crossings " + std::to_string(d.num_crossings()) + "  components " +
                    std::to_string(d.num_components()) + "  faces " + std::to_string(d.num_faces()) + "\n";
        out.text += "graph               v    e    k    p    g\n";
        for (auto& r : rows) out.text += row_text("%-16s %4d %4d %4d %4d %4d\n", r.graph, r.v, r.e, r.k, r.p, r.g);
        out.text += std::string("tait graphs dual: ") + (out.pass ? "yes" : "NO") + "\n";
        break;
    case Format::Dot: {
        auto [c1, c2] = checkerboard(d);
        out.text = to_dot(underlying_graph(tait_graph(d, c1)), "tait_black") +
                   to_dot(underlying_graph(tait_graph(d, c2)), "tait_white") +
                   to_dot(seifert_data(d).graph, "seifert");
        break;
    }
    }
    return out;
}

Json seifert_check_json(const LinkDiagram& d) {
    Json j;
    j["diagram"] = diagram_json(d);
    bool all = true;
    Json cols = Json::array();
    auto [c1, c2] = checkerboard(d);
    const char* names[] = {"canonical", "swapped"};
    int i = 0;
    for (const auto& col : {c1, c2}) {
        SeifertReport rep = verify_seifert_characterization(d, col);
        Json c;
        c["coloring"] = names[i++];
        c["cd"] = labels_string(rep.labels);
        c["regions"] = rep.regions;
        Json checks = Json::array();
        for (auto& ch : rep.checks) checks.push_back(check_json(ch));
        c["checks"] = checks;
        c["phi_star"] = multigraph_to_json(rep.phi_star);
        c["pass"] = rep.all_pass();
        all = all && rep.all_pass();
        cols.push_back(c);
    }
    j["colorings"] = cols;
    int distinct = distinct_labelings(d);
    int expected = 1 << (d.num_components() - 1);
    Json oc;
    oc["distinct_labelings"] = distinct;
    oc["expected"] = expected;
    oc["pass"] = distinct == expected;
    j["orientation_classes"] = oc;
    j["pass"] = all && distinct == expected;
    return j;
}

Rendered render_seifert_check(const LinkDiagram& d, Format f) {
    Json j = seifert_check_json(d);
    Rendered out;
    out.pass = j["pass"].get<bool>();
    switch (f) {
    case Format::Json:
        out.text = dump(j);
        break;
    case Format::Csv:
        out.text = "coloring,check,pass\n";
        for (auto& c : j["colorings"])
            for (auto& ch : c["checks"])
                out.text += c["coloring"].get<std::string>() + "," + ch["name"].get<std::string>() + "," +
                            (ch["pass"].get<bool>() ? "pass" : "fail") + "\n";
        out.text += std::string("all,orientation_classes,") +
                    (j["orientation_classes"]["pass"].get<bool>() ? "pass" : "fail") + "\n";
        break;
    case Format::Text: {
        std::ostringstream os;
        os << "pd " << d.to_pd_text() << "\n";
        for (auto& c : j["colorings"]) {
            os << c["coloring"].get<std::string>() << " coloring, labels " << c["cd"].get<std::string>()
               << ", " << c["regions"].get<int>() << " regions\n";
            for (auto& ch : c["checks"]) {
                os << "  " << (ch["pass"].get<bool>() ? "pass " : "FAIL ") << ch["name"].get<std::string>();
                if (ch.contains("detail")) os << "  (" << ch["detail"].get<std::string>() << ")";
                os << "\n";
            }
        }
        os << "distinct labelings " << j["orientation_classes"]["distinct_labelings"].get<int>() << " of expected "
           << j["orientation_classes"]["expected"].get<int>() << "\n";
        out.text = os.str();
        break;
    }
    case Format::Dot: {
        SeifertReport rep = verify_seifert_characterization(d, checkerboard(d).first);
        out.text = to_dot(rep.phi_star, "phi_star");
        break;
    }
    }
    return out;
}

Rendered render_reconstruction(const LabeledGraph& g, Format f) {
    Reconstruction rec = reconstruct_link(g.map, g.labels);
    CombinatorialMap t = tait_graph(rec.diagram, rec.coloring);
    std::vector<CdLabel> labels = cd_labeling(rec.diagram, rec.coloring);
    Rendered out;
    // compare only what the input specifies
    std::vector<Weight> w(t.num_edges()), wi(t.num_edges());
    for (EdgeId e = 0; e < t.num_edges(); ++e) {
        w[e].tait = t.weight(e).tait;
        wi[e].tait = g.map.weight(e).tait;
    }
    bool tait_equal = ribbon_equal(t.with_weights(w), g.map.with_weights(wi));
    bool labels_equal = labels == g.labels;
    out.pass = tait_equal && labels_equal;
    switch (f) {
    case Format::Json: {
        Json j;
        j["diagram"] = diagram_json(rec.diagram);
        j["tait_equal"] = tait_equal;
        j["labels_equal"] = labels_equal;
        out.text = dump(j);
        break;
    }
    case Format::Csv:
        out.text = "crossings,components,tait_equal,labels_equal\n" + std::to_string(rec.diagram.num_crossings()) +
                   "," + std::to_string(rec.diagram.num_components()) + "," + (tait_equal ? "1" : "0") + "," +
                   (labels_equal ? "1" : "0") + "\n";
        break;
    case Format::Text:
        out.text = rec.diagram.to_pd_text() + "\n";
        break;
    case Format::Dot:
        out.text = to_dot(underlying_graph(t), "tait");
        break;
    }
    return out;
}

Json genus_report_json(const GenusReport& rep) {
    Json j;
    j["state"] = rep.state;
    j["g"] = rep.g;
    j["e"] = rep.e;
    Json recs = Json::array();
    for (auto& r : rep.records) {
        Json x;
        x["r"] = r.r;
        x["oracle_genus"] = r.oracle_genus;
        x["step_value"] = r.step_value;
        x["iterated_value"] = r.iterated_value;
        x["closed_form_value"] = r.closed_form_value;
        Json tf;
        tf["p_complement"] = r.p_complement;
        tf["p_a"] = r.p_a;
        tf["printed_twice"] = r.tait_printed_twice;
        tf["closed_form_twice"] = r.tait_closed_form_twice;
        tf["iterated_form_twice"] = r.tait_iterated_twice;
        x["tait_formula"] = tf;
        Json m;
        m["step"] = r.match_step();
        m["iterated"] = r.match_iterated();
        m["closed_form"] = r.match_closed_form();
        m["tait_printed"] = r.match_tait_printed();
        x["matches"] = m;
        x["split_deleted"] = r.split_deleted;
        x["split_kept"] = r.split_kept;
        x["state_identity"] = r.state_identity;
        recs.push_back(x);
    }
    j["records"] = recs;
    j["selected"] = rep.selected();
    j["tait_formula_matches_selected"] = rep.tait_formula_matches_selected();
    j["consistent"] = rep.consistent();
    return j;
}

Rendered render_parallel(const LinkDiagram& d, int r, const SpliceState& s, Format f) {
    if (r < 1) throw Error("BadR", "r must be at least 1");
    CheckerboardColoring col = checkerboard(d).first;
    ParallelDiagram pd = parallel_diagram(d, r);
    std::vector<CountCheck> cc;
    for (int k = 1; k <= r; ++k) cc.push_back(parallel_counts(d, col, k));
    bool faces_ok = verify_face_structure(d, col, r);
    bool overlay_ok = verify_overlay_base(d, col);
    bool signs_ok = r < 2 || check_sign_projection(parallel_tait(d, col, r));
    GenusReport rep = parallel_genus_report(d, col, s, r);
    rep.state = state_string(s);
    Rendered out;
    out.pass = faces_ok && overlay_ok && signs_ok && rep.consistent();
    for (auto& c : cc) out.pass = out.pass && c.pass();
    switch (f) {
    case Format::Json: {
        Json j;
        j["diagram"] = diagram_json(d);
        j["r"] = r;
        Json p;
        p["crossings"] = pd.diagram.num_crossings();
        p["components"] = pd.diagram.num_components();
        p["pd"] = pd.diagram.to_pd_text();
        j["parallel"] = p;
        Json cs = Json::array();
        for (auto& c : cc) {
            Json x;
            x["r"] = c.r;
            x["v"] = c.v;
            x["e"] = c.e;
            x["f"] = c.f;
            x["v_formula"] = c.v_formula;
            x["e_formula"] = c.e_formula;
            x["f_formula"] = c.f_formula;
            x["pass"] = c.pass();
            cs.push_back(x);
        }
        j["counts"] = cs;
        j["face_structure"] = faces_ok;
        j["overlay_base"] = overlay_ok;
        j["sign_projection"] = signs_ok;
        j["genus"] = genus_report_json(rep);
        j["turaev_upper_bound"] = turaev_upper_bound(d, r);
        j["pass"] = out.pass;
        out.text = dump(j);
        break;
    }
    case Format::Csv:
        out.text = "r,v,e,f,v_formula,e_formula,f_formula,pass\n";
        for (auto& c : cc) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%d,%d,%d,%d\n", c.r, c.v, c.e, c.f, c.v_formula, c.e_formula,
                          c.f_formula, c.pass() ? 1 : 0);
            out.text += buf;
        }
        break;
    case Format::Text: {
        std::ostringstream os;
        os << "pd " << d.to_pd_text() << "\n";
        os << "parallel r=" << r << ": " << pd.diagram.num_crossings() << " crossings, "
           << pd.diagram.num_components() << " components\n";
        for (auto& c : cc)
            os << "  T_" << c.r << " (v,e,f) = (" << c.v << "," << c.e << "," << c.f << ")  formula ("
               << c.v_formula << "," << c.e_formula << "," << c.f_formula << ")  " << (c.pass() ? "ok" : "MISMATCH")
               << "\n";
        os << "face structure " << (faces_ok ? "ok" : "FAIL") << ", overlay base " << (overlay_ok ? "ok" : "FAIL")
           << ", sign projection " << (signs_ok ? "ok" : "FAIL") << "\n";
        os << "state " << rep.state << ": g=" << rep.g << " e=" << rep.e << "\n";
        for (auto& x : rep.records)
            os << "  r=" << x.r << " oracle " << x.oracle_genus << "  step " << x.step_value << "  iterated "
               << x.iterated_value << "  closed form " << x.closed_form_value << "  split " << (x.split_deleted && x.split_kept ? "ok" : "FAIL")
               << "  identity " << (x.state_identity ? "ok" : "FAIL") << "\n";
        os << "oracle selects " << rep.selected() << "; tait formula " << (rep.tait_formula_matches_selected() ? "agrees" : "disagrees")
           << "\n";
        os << "turaev upper bound " << turaev_upper_bound(d, r) << "\n";
        out.text = os.str();
        break;
    }
    case Format::Dot:
        out.text = to_dot(underlying_graph(parallel_tait(d, col, r).t_r), "tait_r");
        break;
    }
    return out;
}

}  // namespace linkgraph

#include "linkgraph/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "linkgraph/catalog.hpp"
#include "linkgraph/render.hpp"
#include "linkgraph/sweeps.hpp"

namespace linkgraph {

namespace {

std::vector<LinkDiagram> catalog_diagrams() {
    std::vector<LinkDiagram> out;
    for (auto& e : catalog()) out.push_back(parse_pd(e.pd));
    return out;
}

std::vector<LinkDiagram> small_diagrams(int max_crossings) {
    std::vector<LinkDiagram> out;
    for (auto& d : catalog_diagrams())
        if (d.num_crossings() <= max_crossings) out.push_back(d);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("Io", "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string summary(const SweepResult& r) {
    std::string s = std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures";
    if (!r.first_failure.empty()) s += "; first " + r.first_failure;
    return s;
}

// both colorings of every catalog diagram
template <class F>
std::vector<std::string> over_colorings(F check) {
    std::vector<std::string> bad;
    for (auto& e : catalog()) {
        LinkDiagram d = parse_pd(e.pd);
        auto [c1, c2] = checkerboard(d);
        int i = 0;
        for (const auto& col : {c1, c2}) {
            std::string why;
            if (!check(d, col, &why)) bad.push_back(e.name + (i == 0 ? "/canonical" : "/swapped") + " " + why);
            ++i;
        }
    }
    return bad;
}

std::string join_failures(const std::vector<std::string>& bad, int total) {
    if (bad.empty()) return std::to_string(total) + " checks, all hold";
    return std::to_string(bad.size()) + " of " + std::to_string(total) + " fail; first " + bad.front();
}

CriterionResult c1() {
    auto cases = random_map_cases(20240611, 600, 12);
    SweepResult r = sweep(cases, check_partial_dual_axioms);
    return {1, "partial duality axioms and genus formula", r.pass() && r.cases >= 500, summary(r), 0, 60};
}

CriterionResult c2() {
    auto bad = over_colorings([](const LinkDiagram& d, const CheckerboardColoring& col, std::string* why) {
        CheckerboardColoring other = col.swapped();
        CombinatorialMap t = tait_graph(d, col), u = tait_graph(d, other);
        if (counts(t).g != 0 || counts(t).k != 1) return *why = "not plane", false;
        for (EdgeId e = 0; e < t.num_edges(); ++e)
            if (u.weight(e).tait != negate(t.weight(e).tait) || u.weight(e).oriented != t.weight(e).oriented)
                return *why = "weights of edge " + std::to_string(e + 1), false;
        if (!ribbon_equal(u, dual(t))) return *why = "not dual", false;
        return true;
    });
    return {2, "Tait graphs are plane duals with negated Tait signs", bad.empty(),
            join_failures(bad, 2 * static_cast<int>(catalog().size())), 0, 1};
}

CriterionResult c3() {
    SweepResult named = sweep(catalog_diagrams(), check_named_state_graphs);
    SweepResult states = sweep(all_state_cases(small_diagrams(4)), check_state_partial_dual);
    return {3, "state graphs are partial duals of the Tait graph", named.pass() && states.pass(),
            "named states: " + summary(named) + "; all states: " + summary(states), 0, 30};
}

CriterionResult c4() {
    std::vector<LinkDiagram> ds = catalog_diagrams();
    Rng rng(77);
    for (int i = 0; i < 120; ++i) ds.push_back(random_diagram(rng, 8));
    SweepResult r = sweep(ds, check_seifert_diagram);
    return {4, "Seifert graph characterization", r.pass(), summary(r), 0, 300};
}

CriterionResult c5() {
    SweepResult r = sweep(reconstruction_cases(5), check_reconstruction);
    return {5, "reconstruction from cd-labeled plane graphs", r.pass(), summary(r), 0, 300};
}

CriterionResult c6() {
    SweepResult r = sweep(random_plane_cases(4242, 250, 8), check_region_dual);
    return {6, "region dual equals the partial dual", r.pass() && r.cases >= 200, summary(r), 0, 60};
}

CriterionResult c7() {
    auto bad = over_colorings([](const LinkDiagram& d, const CheckerboardColoring& col, std::string* why) {
        for (int r = 2; r <= 5; ++r) {
            CountCheck c = parallel_counts(d, col, r);
            if (!c.pass()) return *why = "counts at r=" + std::to_string(r), false;
        }
        for (int r = 2; r <= 4; ++r)
            if (!verify_face_structure(d, col, r)) return *why = "faces at r=" + std::to_string(r), false;
        return true;
    });
    return {7, "vertex, edge and face counts of parallels", bad.empty(),
            join_failures(bad, 2 * static_cast<int>(catalog().size())), 0, 60};
}

CriterionResult c8() {
    auto bad = over_colorings([](const LinkDiagram& d, const CheckerboardColoring& col, std::string* why) {
        if (!verify_overlay_base(d, col)) return *why = "T(D_2) differs from the overlay", false;
        return true;
    });
    return {8, "Tait graph of D_2 is the overlay of T and T*", bad.empty(),
            join_failures(bad, 2 * static_cast<int>(catalog().size())), 0, 30};
}

CriterionResult c9() {
    auto bad = over_colorings([](const LinkDiagram& d, const CheckerboardColoring& col, std::string* why) {
        for (int r = 2; r <= 3; ++r)
            if (!check_sign_projection(parallel_tait(d, col, r))) return *why = "signs at r=" + std::to_string(r), false;
        return true;
    });
    std::vector<StateCase> cases = all_state_cases(small_diagrams(4));
    for (auto& d : catalog_diagrams()) {
        if (d.num_crossings() <= 4) continue;
        CheckerboardColoring col = checkerboard(d).first;
        CanonicalStates cs = canonical_states(d, col);
        for (auto s : {cs.all_a, cs.all_b, cs.seifert}) cases.push_back({d, col, s});
    }
    SweepResult r = sweep(cases, [](const StateCase& c, std::string* why) {
        GenusReport rep = parallel_genus_report(c.d, c.col, c.s, 2);
        for (auto& x : rep.records) {
            std::string at = c.d.to_pd_text() + " " + state_string(c.s) + " r=" + std::to_string(x.r);
            if (!x.state_identity) return *why = "state graph identity fails at " + at, false;
            if (!x.split_deleted || !x.split_kept) return *why = "boundary count identity fails at " + at, false;
        }
        return true;
    });
    return {9, "sign structure and induced partial-dual sets", bad.empty() && r.pass(),
            "sign rule: " + join_failures(bad, 2 * static_cast<int>(catalog().size())) + "; state identities: " +
                summary(r),
            0, 300};
}

CriterionResult c10() {
    struct Job {
        std::string name;
        LinkDiagram d;
        int r_max;
    };
    std::vector<Job> jobs;
    for (auto& e : catalog()) jobs.push_back({e.name, parse_pd(e.pd), e.name == "trefoil" ? 3 : 2});
    std::vector<std::vector<GenusReport>> reports(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(jobs.size()); ++i) reports[i] = special_state_reports(jobs[i].d, jobs[i].r_max);

    std::vector<std::string> bad;
    std::set<std::string> selections;
    std::string example;
    for (size_t i = 0; i < jobs.size(); ++i)
        for (auto& rep : reports[i]) {
            std::string at = jobs[i].name + " " + rep.state;
            const GenusRecord& r1 = rep.records[0];
            if (r1.oracle_genus != 2 * rep.g + rep.e - 1 || !r1.match_closed_form() || !r1.match_iterated())
                bad.push_back(at + " at r=1");
            for (auto& x : rep.records)
                if (!x.match_step()) bad.push_back(at + " recurrence at r=" + std::to_string(x.r));
            selections.insert(rep.selected());
            if (!rep.tait_formula_matches_selected()) bad.push_back(at + " tait formula");
            if (jobs[i].name == "trefoil" && rep.state == "allA")
                example = "trefoil allA r=2: oracle " + std::to_string(rep.records[1].oracle_genus) + ", iterated " +
                          std::to_string(rep.records[1].iterated_value) + ", printed closed form " +
                          std::to_string(rep.records[1].closed_form_value);
        }
    std::string sel;
    for (auto& s : selections) sel += (sel.empty() ? "" : ",") + s;
    bool one = selections.size() == 1 && (sel == "iterated" || sel == "closed-form");
    std::string detail = "oracle selects " + sel + " (" + example + ")";
    if (!bad.empty()) detail += "; " + std::to_string(bad.size()) + " failures, first " + bad.front();
    return {10, "genus of parallels", bad.empty() && one, detail, 0, 60};
}

CriterionResult c11(const AcceptanceConfig& cfg) {
    int total = 0;
    std::vector<std::string> bad;
    for (auto& e : catalog())
        for (std::string cmd : {"invariants", "seifert-check"})
            for (std::string fmt : {"text", "json"}) {
                ++total;
                std::string pd = cfg.catalog_dir + "/" + e.name + ".pd";
                std::string golden = cfg.golden_dir + "/" + cmd + "/" + e.name + "." + fmt;
                try {
                    std::string got = cfg.run ? cfg.run({cmd, pd, "--format", fmt}) : golden_output(cmd, pd, fmt);
                    if (got != read_file(golden)) bad.push_back(cmd + " " + e.name + " " + fmt + " differs");
                } catch (const std::exception& ex) {
                    bad.push_back(cmd + " " + e.name + " " + fmt + ": " + ex.what());
                }
            }
    return {11, "CLI output matches golden files", bad.empty(), join_failures(bad, total), 0, 10};
}

}  // namespace

std::string golden_output(const std::string& command, const std::string& pd_file, const std::string& format) {
    LinkDiagram d = parse_pd(read_file(pd_file));
    Format f = parse_format(format);
    if (command == "invariants") return render_invariants(d, f).text;
    if (command == "seifert-check") return render_seifert_check(d, f).text;
    throw Error("Usage", "no golden output for " + command);
}

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        switch (id) {
        case 1: r = c1(); break;
        case 2: r = c2(); break;
        case 3: r = c3(); break;
        case 4: r = c4(); break;
        case 5: r = c5(); break;
        case 6: r = c6(); break;
        case 7: r = c7(); break;
        case 8: r = c8(); break;
        case 9: r = c9(); break;
        case 10: r = c10(); break;
        case 11: r = c11(cfg); break;
        default: throw Error("Usage", "no criterion " + std::to_string(id));
        }
    } catch (const std::exception& e) {
        r.id = id;
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit > 0 && r.seconds > r.limit) {
        r.pass = false;
        r.detail += "; over the time limit";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kNumCriteria; ++id) out.push_back(run_criterion(id, cfg));
    return out;
}

std::string format_result(const CriterionResult& r) {
    char t[64];
    std::snprintf(t, sizeof t, "%.2fs of %.0fs", r.seconds, r.limit);
    return std::string(r.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " " + r.title + " [" + t +
           "]: " + r.detail;
}

}  // namespace linkgraph

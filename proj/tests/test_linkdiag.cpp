#include "doctest.h"

#include <sstream>

#include "linkgraph/catalog.hpp"
#include "linkgraph/generators.hpp"
#include "linkgraph/link_diagram.hpp"
#include "linkgraph/multigraph.hpp"
#include "linkgraph/states.hpp"
#include "linkgraph/sweeps.hpp"
#include "oracles.hpp"

using namespace linkgraph;

namespace {

std::string error_kind(const std::string& pd) {
    try {
        parse_pd(pd);
    } catch (const Error& e) {
        return e.kind();
    }
    return "none";
}

oracle::Pd pd_of(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) {
            oracle::Pd out;
            auto d = parse_pd(e.pd);
            // crossing ids follow the order of the input tuples
            std::string s = e.pd;
            for (auto& ch : s)
                if (!isdigit(static_cast<unsigned char>(ch))) ch = ' ';
            std::istringstream in(s);
            std::array<int, 4> x;
            while (in >> x[0] >> x[1] >> x[2] >> x[3]) out.push_back(x);
            REQUIRE(static_cast<int>(out.size()) == d.num_crossings());
            return out;
        }
    FAIL("no catalog entry " << name);
    return {};
}

std::string letters(const SpliceState& s) { return state_string(s); }

}  // namespace

TEST_CASE("parsing PD codes") {
    auto t = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    CHECK(t.num_crossings() == 3);
    CHECK(t.num_arcs() == 6);
    CHECK(t.num_components() == 1);
    CHECK(t.num_faces() == 5);

    auto k = parse_pd("X(1,2,2,1)");
    CHECK(k.num_crossings() == 1);
    CHECK(k.num_faces() == 3);

    CHECK(error_kind("X(1,2,2,1) X(3,4,4,3)") == "Disconnected");
    CHECK(error_kind("X(1,2,3") == "ParseError");
    CHECK(error_kind("X(1,4,2,5) X(3,6,4,1)") != "none");

    CHECK(parse_pd(t.to_pd_text()) == t);
}

TEST_CASE("link components agree with a strand count") {
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        CHECK(d.num_components() == oracle::link_components(pd_of(e.name)));
    }
    CHECK(catalog_diagram("hopf").num_components() == 2);
}

TEST_CASE("checkerboard colorings") {
    auto k = catalog_diagram("kink");
    auto [a, b] = checkerboard(k);
    CHECK(k.num_faces() == 3);
    CHECK(a.swapped() == b);
    CHECK(a.num_black() + b.num_black() == 3);

    auto t = catalog_diagram("trefoil");
    auto [c1, c2] = checkerboard(t);
    std::set<int> blacks{c1.num_black(), c2.num_black()};
    CHECK(blacks == std::set<int>{2, 3});

    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        auto [x, y] = checkerboard(d);
        CHECK(x.swapped() == y);
        // adjacent regions differ
        for (int c = 0; c < d.num_crossings(); ++c)
            for (int k2 = 0; k2 < 4; ++k2)
                CHECK(x.black[d.corner_face(c, k2)] != x.black[d.corner_face(c, (k2 + 1) % 4)]);
    }
}

TEST_CASE("crossing signs") {
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        auto [c1, c2] = checkerboard(d);
        auto s1 = crossing_signs(d, c1);
        auto s2 = crossing_signs(d, c2);
        for (int c = 0; c < d.num_crossings(); ++c) {
            CHECK(s1[c].tait == negate(s2[c].tait));
            CHECK(s1[c].oriented == s2[c].oriented);
        }
        std::vector<bool> all(d.num_components(), true);
        auto r = reverse_components(d, all);
        auto sr = crossing_signs(r, checkerboard(r).first);
        for (int c = 0; c < d.num_crossings(); ++c) CHECK(sr[c].oriented == s1[c].oriented);
    }

    auto t = catalog_diagram("trefoil");
    auto s = crossing_signs(t, checkerboard(t).first);
    CHECK(s[0].tait == s[1].tait);
    CHECK(s[1].tait == s[2].tait);
    // every over-strand of this trefoil runs from position 1 to position 3
    for (auto x : s) CHECK(x.oriented == Sign::Minus);

    // one component of the Hopf link reversed flips both oriented signs
    auto h = catalog_diagram("hopf");
    auto hr = reverse_components(h, {true, false});
    auto sh = crossing_signs(h, checkerboard(h).first);
    auto shr = crossing_signs(hr, checkerboard(hr).first);
    for (int c = 0; c < 2; ++c) CHECK(sh[c].oriented == negate(shr[c].oriented));
}

TEST_CASE("Tait graphs") {
    auto t = catalog_diagram("trefoil");
    auto [c1, c2] = checkerboard(t);
    if (c1.num_black() != 3) std::swap(c1, c2);
    auto tri = counts(tait_graph(t, c1));
    CHECK(tri.v == 3);
    CHECK(tri.e == 3);
    CHECK(tri.p == 2);
    CHECK(tri.g == 0);
    auto th = counts(tait_graph(t, c2));
    CHECK(th.v == 2);
    CHECK(th.p == 3);

    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        auto [x, y] = checkerboard(d);
        auto tx = tait_graph(d, x);
        auto ty = tait_graph(d, y);
        CHECK(counts(tx).g == 0);
        // same edge labels; the face walk reads the dual with the opposite orientation
        CHECK(ribbon_equal_oriented(tx, mirror(dual(ty))));
        auto dy = dual(ty);
        for (EdgeId c = 0; c < ty.num_edges(); ++c) {
            CHECK(dy.weight(c).tait == negate(ty.weight(c).tait));
            CHECK(tx.weight(c).tait == negate(ty.weight(c).tait));
        }
    }
}

TEST_CASE("state graphs against splice tracing") {
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        auto pd = pd_of(e.name);
        auto col = checkerboard(d).first;
        const int n = d.num_crossings();
        for (int mask = 0; mask < (1 << n); ++mask) {
            SpliceState s;
            for (int c = 0; c < n; ++c) s.push_back(mask >> c & 1 ? Splice::B : Splice::A);
            auto g = counts(state_ribbon_graph(d, s, col));
            CHECK(g.v == oracle::state_circles(pd, letters(s)));
            CHECK(g.p == oracle::state_circles(pd, letters(opposite_state(s))));
            CHECK(g.g == oracle::state_genus(pd, letters(s)));
            CHECK(state_circle_count(d, s) == g.v);
        }
    }

    auto t = catalog_diagram("trefoil");
    auto all_a = counts(state_ribbon_graph(t, parse_state("AAA", 3), checkerboard(t).first));
    CHECK(all_a.g == 0);
    CHECK(all_a.e == 3);
    CHECK(all_a.v + all_a.p == 5);
}

TEST_CASE("kink states give the two Tait graphs") {
    auto k = catalog_diagram("kink");
    auto [x, y] = checkerboard(k);
    for (auto s : {"A", "B"}) {
        auto g = state_ribbon_graph(k, parse_state(s, 1), x);
        bool matches = map_isomorphic(g, tait_graph(k, x), false) || map_isomorphic(g, tait_graph(k, y), false);
        CHECK(matches);
    }
}

TEST_CASE("canonical states") {
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        auto [x, y] = checkerboard(d);
        auto cx = canonical_states(d, x);
        auto cy = canonical_states(d, y);
        CHECK(cx.seifert == cy.seifert);
        CHECK(cx.seifert == seifert_state(d));
        CHECK(cx.all_a == SpliceState(d.num_crossings(), Splice::A));
        CHECK(cx.tait_black == opposite_state(cx.tait_white));
        auto signs = crossing_signs(d, x);
        for (int c = 0; c < d.num_crossings(); ++c)
            CHECK((cx.tait_black[c] == Splice::A) == (signs[c].tait == Sign::Minus));
        CHECK(map_isomorphic(state_ribbon_graph(d, cx.tait_black, x), tait_graph(d, x), false));
    }
}

TEST_CASE("state dual sets") {
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        auto col = checkerboard(d).first;
        auto signs = crossing_signs(d, col);
        auto cs = canonical_states(d, col);
        std::set<EdgeId> plus, minus, agree;
        for (int c = 0; c < d.num_crossings(); ++c) {
            (signs[c].tait == Sign::Plus ? plus : minus).insert(c);
            if (signs[c].tait == signs[c].oriented) agree.insert(c);
        }
        CHECK(state_dual_set(d, cs.all_a, col) == plus);
        CHECK(state_dual_set(d, cs.all_b, col) == minus);
        CHECK(state_dual_set(d, cs.seifert, col) == agree);
        std::string why;
        CHECK_MESSAGE(check_named_state_graphs(d, &why), why);
    }
}

TEST_CASE("state graphs are partial duals of the Tait graph") {
    std::vector<LinkDiagram> ds;
    for (const auto& e : catalog())
        if (parse_pd(e.pd).num_crossings() <= 4) ds.push_back(parse_pd(e.pd));
    auto res = sweep(all_state_cases(ds), check_state_partial_dual);
    CHECK_MESSAGE(res.pass(), res.first_failure);
}

TEST_CASE("Seifert data") {
    auto t = seifert_data(catalog_diagram("trefoil"));
    CHECK(t.circle_count == 2);
    CHECK(t.surface_genus == 1);
    CHECK(t.graph.num_vertices == 2);
    CHECK(t.graph.edges.size() == 3);

    auto f = seifert_data(catalog_diagram("figure-eight"));
    CHECK(f.circle_count == 3);
    CHECK(f.surface_genus == 1);

    auto k = seifert_data(catalog_diagram("kink"));
    CHECK(k.circle_count == 2);
    CHECK(k.graph.edges.size() == 1);
    CHECK(k.surface_genus == 0);

    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        auto pd = pd_of(e.name);
        auto sd = seifert_data(d);
        CHECK(sd.circle_count == oracle::state_circles(pd, letters(seifert_state(d))));
        // surface from Seifert's algorithm: discs plus bands
        int chi = sd.circle_count - d.num_crossings();
        CHECK(2 - 2 * sd.surface_genus - d.num_components() == chi);
        CHECK(is_bipartite(sd.graph));
    }
}

TEST_CASE("random diagrams are valid and connected") {
    Rng rng(99);
    for (int i = 0; i < 40; ++i) {
        auto d = random_diagram(rng, 8);
        CHECK(d.num_crossings() <= 8);
        CHECK(d.num_faces() == d.num_crossings() + 2);
        CHECK(parse_pd(d.to_pd_text()).to_pd_text() == d.to_pd_text());
    }
}

TEST_CASE("catalog alternation flags match the Tait signs") {
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        std::set<Sign> seen;
        for (auto s : crossing_signs(d, checkerboard(d).first)) seen.insert(s.tait);
        CHECK_MESSAGE((seen.size() == 1) == e.alternating, e.name);
    }
}

#include "doctest.h"

#include <sstream>

#include "linkgraph/catalog.hpp"
#include "linkgraph/generators.hpp"
#include "linkgraph/multigraph.hpp"
#include "linkgraph/seifert.hpp"
#include "linkgraph/states.hpp"
#include "linkgraph/sweeps.hpp"
#include "oracles.hpp"

using namespace linkgraph;

namespace {

CombinatorialMap signed_map(std::vector<Dart> sigma) {
    std::vector<Weight> w(sigma.size() / 2);
    return CombinatorialMap(std::move(sigma), 0, w);
}

CombinatorialMap triangle() { return signed_map({5, 2, 1, 4, 3, 0}); }
CombinatorialMap loop() { return signed_map({1, 0}); }

std::vector<CdLabel> labels_of(const std::string& s) {
    std::vector<CdLabel> out;
    for (char ch : s) out.push_back(ch == 'c' ? CdLabel::C : CdLabel::D);
    return out;
}

oracle::Pd read_pd(const std::string& text) {
    std::string s = text;
    for (auto& ch : s)
        if (!isdigit(static_cast<unsigned char>(ch))) ch = ' ';
    std::istringstream in(s);
    oracle::Pd out;
    std::array<int, 4> x;
    while (in >> x[0] >> x[1] >> x[2] >> x[3]) out.push_back(x);
    return out;
}

// vertex index of every dart, from the sigma cycles
std::vector<int> vertex_of_dart(const CombinatorialMap& g) {
    std::vector<int> v(g.num_darts(), -1);
    int n = 0;
    for (Dart d = 0; d < g.num_darts(); ++d) {
        if (v[d] >= 0) continue;
        for (Dart x = d; v[x] < 0; x = g.sigma(x)) v[x] = n;
        ++n;
    }
    return v;
}

bool c_degrees_even(const CombinatorialMap& g, const std::vector<CdLabel>& labels) {
    auto v = vertex_of_dart(g);
    std::vector<int> deg(g.num_darts(), 0);
    for (Dart d = 0; d < g.num_darts(); ++d)
        if (labels[d / 2] == CdLabel::C) ++deg[v[d]];
    for (int x : deg)
        if (x % 2) return false;
    return true;
}

// every element of the cycle space (edge sets with all degrees even) meets
// the d-edges an even number of times
bool brute_even_d_cycles(const CombinatorialMap& g, const std::vector<CdLabel>& labels) {
    auto v = vertex_of_dart(g);
    const int e = g.num_edges();
    for (int mask = 1; mask < (1 << e); ++mask) {
        std::vector<int> deg(g.num_darts(), 0);
        int dcount = 0;
        for (int x = 0; x < e; ++x) {
            if (!(mask >> x & 1)) continue;
            ++deg[v[2 * x]];
            ++deg[v[2 * x + 1]];
            dcount += labels[x] == CdLabel::D;
        }
        bool cycle = true;
        for (int dgr : deg) cycle = cycle && dgr % 2 == 0;
        if (cycle && dcount % 2) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cd labels from signs and from region merging agree") {
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        for (auto col : {checkerboard(d).first, checkerboard(d).second}) {
            auto labels = cd_labeling(d, col);
            CHECK(labels == cd_labeling_by_regions(d, col));
            auto signs = crossing_signs(d, col);
            for (int c = 0; c < d.num_crossings(); ++c)
                CHECK((labels[c] == CdLabel::C) == (signs[c].tait == signs[c].oriented));
        }
    }
}

TEST_CASE("number of distinct labelings over orientations") {
    CHECK(distinct_labelings(catalog_diagram("trefoil")) == 1);
    CHECK(distinct_labelings(catalog_diagram("hopf")) == 2);
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        auto col = checkerboard(d).first;
        auto r = reverse_components(d, std::vector<bool>(d.num_components(), true));
        // the region at corner (0, 0) of d sits at corner (0, 2) of r
        auto [r1, r2] = checkerboard(r);
        auto rc = r1.black[r.corner_face(0, 2)] == col.black[d.corner_face(0, 0)] ? r1 : r2;
        CHECK(cd_labeling(r, rc) == cd_labeling(d, col));
    }
}

TEST_CASE("overlay of a map and its dual") {
    auto l = overlay_pair(loop());
    auto lc = counts(l.map);
    CHECK(lc.v == 4);
    CHECK(lc.e == 4);
    CHECK(lc.p == 2);

    auto t = overlay_pair(triangle());
    auto tc = counts(t.map);
    CHECK(tc.v == 8);
    CHECK(tc.e == 12);
    CHECK(tc.p == 6);
    int crossings = 0;
    for (auto k : t.vertex_kind) crossings += k == VertexKind::Crossing;
    CHECK(crossings == 3);

    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        auto g = random_plane_map(rng, 1 + i % 8);
        auto ov = overlay_pair(g);
        for (const auto& f : ov.map.faces().cycles) CHECK(f.size() == 4);
        CHECK(counts(ov.map).g == 0);
        // halves of dual edges carry the negated sign
        for (EdgeId x = 0; x < ov.map.num_edges(); ++x) {
            Sign s = g.weight(ov.parent[x]).tait;
            CHECK(ov.map.weight(x).tait == (ov.source[x] == Provenance::Tait ? s : negate(s)));
        }
    }

    CHECK_THROWS_WITH_AS(overlay_pair(signed_map({2, 3, 1, 0})), doctest::Contains("NotPlane"), Error);
}

TEST_CASE("building the immersed graph") {
    auto t = triangle();
    auto all_c = build_phi(t, labels_of("ccc"));
    CHECK(all_c.num_regions == counts(t).p);
    auto rd = region_dual(all_c);
    CHECK(rd.num_vertices == 2);
    CHECK(rd.edges.size() == 3);
    for (auto [u, v] : rd.edges) CHECK(u != v);

    auto all_d = build_phi(t, labels_of("ddd"));
    CHECK(all_d.num_regions == counts(t).v);
    CHECK(all_d.c_graph.edges.empty());
    CHECK(all_d.c_prime_graph.edges.size() == 3);

    // no edge and its dual are kept together
    for (const auto& phi : {all_c, all_d, build_phi(t, labels_of("cdd"))}) {
        for (EdgeId e = 0; e < t.num_edges(); ++e) {
            int tait_kept = 0, dual_kept = 0;
            for (int j = 0; j < 4; ++j) {
                if (!phi.kept[4 * e + j]) continue;
                (phi.overlay.source[4 * e + j] == Provenance::Tait ? tait_kept : dual_kept)++;
            }
            CHECK(tait_kept * dual_kept == 0);
            CHECK(tait_kept + dual_kept == 2);
        }
    }
}

TEST_CASE("trefoil immersed graph") {
    auto d = catalog_diagram("trefoil");
    auto col = checkerboard(d).first;
    auto t = tait_graph(d, col);
    auto phi = build_phi(t, cd_labeling(d, col));
    CHECK(all_degrees_even(phi.c_graph));
    CHECK(all_degrees_even(phi.c_prime_graph));
    auto rd = region_dual(phi);
    CHECK(graph_is_isomorphic(rd, seifert_data(d).graph));
    CHECK(rd.num_vertices == 2);
    CHECK(rd.edges.size() == 3);
}

TEST_CASE("Seifert characterization on the catalog") {
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        auto pd = read_pd(e.pd);
        const int circles = oracle::state_circles(pd, oracle::oriented_state(pd));
        const int k = d.num_components();
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<bool> which(k);
            for (int i = 0; i < k; ++i) which[i] = mask >> i & 1;
            auto r = reverse_components(d, which);
            auto rpd = r.to_pd();
            const int rcircles = oracle::state_circles(rpd, oracle::oriented_state(rpd));
            if (mask == 0) CHECK(rcircles == circles);
            for (auto col : {checkerboard(r).first, checkerboard(r).second}) {
                auto rep = verify_seifert_characterization(r, col);
                CHECK(rep.checks.size() == 6);
                for (const auto& ch : rep.checks) CHECK_MESSAGE(ch.pass, e.name << " " << ch.name);
                CHECK(rep.phi_star.num_vertices == rcircles);
                CHECK(static_cast<int>(rep.phi_star.edges.size()) == r.num_crossings());
            }
        }
    }
    auto f = verify_seifert_characterization(catalog_diagram("figure-eight"),
                                             checkerboard(catalog_diagram("figure-eight")).first);
    CHECK(f.phi_star.num_vertices == 3);
    CHECK(f.phi_star.edges.size() == 4);
}

TEST_CASE("Seifert characterization on random diagrams") {
    Rng rng(2024);
    std::vector<LinkDiagram> ds;
    for (int i = 0; i < 40; ++i) ds.push_back(random_diagram(rng, 8));
    auto res = sweep(ds, check_seifert_diagram);
    CHECK_MESSAGE(res.pass(), res.first_failure);
}

TEST_CASE("admissibility conditions on small plane graphs") {
    for (int e = 1; e <= 5; ++e) {
        for (const auto& g : plane_maps_with_edges(e)) {
            for (int mask = 0; mask < (1 << e); ++mask) {
                std::vector<CdLabel> labels(e);
                for (int x = 0; x < e; ++x) labels[x] = mask >> x & 1 ? CdLabel::D : CdLabel::C;
                auto phi = build_phi(g, labels);
                auto adm = admissibility(g, labels);
                const bool tait_even = c_degrees_even(g, labels);
                CHECK(tait_even == adm.odd_tait.empty());
                CHECK(tait_even == all_degrees_even(phi.c_graph));
                CHECK(adm.odd_dual.empty() == all_degrees_even(phi.c_prime_graph));
                const bool cycles = brute_even_d_cycles(g, labels);
                CHECK(cycles == even_d_cycles(g, labels));
                CHECK(cycles == adm.odd_dual.empty());
                if (adm.admissible()) CHECK(is_bipartite(region_dual(phi)));
            }
        }
    }
}

TEST_CASE("reconstruction") {
    auto rec = reconstruct_link(triangle(), labels_of("ccc"));
    CHECK(rec.diagram.num_crossings() == 3);
    CHECK(cd_labeling(rec.diagram, rec.coloring) == labels_of("ccc"));
    auto t2 = tait_graph(rec.diagram, rec.coloring);
    CHECK(map_isomorphic(t2, triangle(), false));
    for (EdgeId e = 0; e < 3; ++e) CHECK(t2.weight(e).tait == Sign::Plus);
    CHECK(parse_pd(rec.diagram.to_pd_text()).to_pd_text() == rec.diagram.to_pd_text());

    try {
        reconstruct_link(signed_map({0, 1}), labels_of("c"));
        FAIL("expected NotEulerian");
    } catch (const NotEulerian& e) {
        CHECK(e.tait_vertices.size() == 2);
        CHECK(e.dual_vertices.empty());
    }
    CHECK_THROWS_AS(reconstruct_link(triangle(), labels_of("cdd")), NotEulerian);

    auto res = sweep(reconstruction_cases(4), check_reconstruction);
    CHECK(res.cases > 100);
    CHECK_MESSAGE(res.pass(), res.first_failure);
}

TEST_CASE("diagram to Tait graph and back") {
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        auto col = checkerboard(d).first;
        auto t = tait_graph(d, col);
        std::vector<Weight> w(t.num_edges());
        for (EdgeId x = 0; x < t.num_edges(); ++x) w[x].tait = t.weight(x).tait;
        auto labels = cd_labeling(d, col);
        auto rec = reconstruct_link(t.with_weights(w), labels);
        CHECK(cd_labeling(rec.diagram, rec.coloring) == labels);
        CHECK(map_isomorphic(tait_graph(rec.diagram, rec.coloring).with_weights(w), t.with_weights(w), true));
        CHECK(distinct_labelings(rec.diagram) == 1 << (rec.diagram.num_components() - 1));
    }
}

TEST_CASE("region dual of the kept set against the partial dual") {
    auto t = triangle();
    CHECK(region_dual_identity(t, {}));
    CHECK(region_dual_identity(t, all_edges(t)));
    auto cases = random_plane_cases(17, 80, 8);
    auto res = sweep(cases, check_region_dual);
    CHECK_MESSAGE(res.pass(), res.first_failure);

    // the regions are the boundary components of the spanning ribbon subgraph on A
    for (const auto& c : cases) {
        std::vector<CdLabel> labels(c.g.num_edges(), CdLabel::D);
        for (EdgeId x : c.a) labels[x] = CdLabel::C;
        auto sub = delete_edges(c.g, complement(c.g, c.a));
        auto want = oracle::map_counts(sub.sigma_perm(), sub.isolated_vertices());
        CHECK(region_dual(build_phi(c.g, labels)).num_vertices == want.p);
    }
}

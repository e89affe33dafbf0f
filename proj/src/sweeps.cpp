#include "linkgraph/sweeps.hpp"

#include <algorithm>

#include "linkgraph/seifert.hpp"

namespace linkgraph {

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

std::set<EdgeId> sym_diff(const std::set<EdgeId>& a, const std::set<EdgeId>& b) {
    std::set<EdgeId> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

// the part of g on the given edges, without isolated vertices, and the
// subset of a carried to the compacted edge ids
std::pair<CombinatorialMap, std::set<EdgeId>> restrict_to(const CombinatorialMap& g, const std::set<EdgeId>& keep,
                                                          const std::set<EdgeId>& a) {
    std::set<EdgeId> drop;
    std::set<EdgeId> a_new;
    int next = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!keep.count(e)) {
            drop.insert(e);
            continue;
        }
        if (a.count(e)) a_new.insert(next);
        ++next;
    }
    CombinatorialMap h = delete_edges(g, drop);
    return {CombinatorialMap(h.sigma_perm(), 0, h.weights()), a_new};
}

}  // namespace

std::vector<MapCase> random_map_cases(std::uint64_t seed, int count, int max_edges) {
    Rng rng(seed);
    std::vector<MapCase> out;
    for (int i = 0; i < count; ++i) {
        int e = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges));
        MapCase c{random_map(rng, e), {}, {}};
        c.a = random_subset(rng, e);
        c.b = random_subset(rng, e);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<MapCase> random_plane_cases(std::uint64_t seed, int count, int max_edges) {
    Rng rng(seed);
    std::vector<MapCase> out;
    for (int i = 0; i < count; ++i) {
        int e = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges));
        MapCase c{random_plane_map(rng, e), {}, {}};
        c.a = random_subset(rng, e);
        out.push_back(std::move(c));
    }
    return out;
}

bool check_partial_dual_axioms(const MapCase& c, std::string* why) {
    const CombinatorialMap& g = c.g;
    if (!(partial_dual(g, {}) == g)) return fail(why, "G^{} differs from G");
    if (!ribbon_equal(partial_dual(g, all_edges(g)), dual(g))) return fail(why, "G^E differs from G*");
    CombinatorialMap ga = partial_dual(g, c.a);
    if (!ribbon_equal(partial_dual(ga, c.b), partial_dual(g, sym_diff(c.a, c.b))))
        return fail(why, "(G^A)^B differs from G^(A delta B)");
    MapCounts m = counts(ga);
    if (2 * m.k - m.v + m.e - m.p != 2 * m.g || m.g < 0) return fail(why, "G^A has a non-orientable Euler count");
    for (auto& comp : g.components().cycles) {
        std::set<EdgeId> keep;
        for (Dart d : comp) keep.insert(CombinatorialMap::edge_of(d));
        auto [part, a_part] = restrict_to(g, keep, c.a);
        auto [dual_part, unused] = restrict_to(ga, keep, {});
        if (!ribbon_equal(dual_part, partial_dual(part, a_part)))
            return fail(why, "partial dual does not act componentwise");
    }
    MapCounts base = counts(g);
    int p_ac = counts(delete_edges(g, complement(g, c.a))).p;
    int p_a = counts(delete_edges(g, c.a)).p;
    if (2 * m.g != 2 * base.k + base.e - p_ac - p_a) return fail(why, "genus formula fails");
    if (m.g != counts(partial_dual(g, complement(g, c.a))).g) return fail(why, "g(G^A) differs from g(G^(A^c))");
    return true;
}

std::vector<StateCase> all_state_cases(const std::vector<LinkDiagram>& ds) {
    std::vector<StateCase> out;
    for (auto& d : ds) {
        const int n = d.num_crossings();
        auto [c1, c2] = checkerboard(d);
        for (const auto& col : {c1, c2})
            for (int mask = 0; mask < (1 << n); ++mask) {
                SpliceState s(n);
                for (int i = 0; i < n; ++i) s[i] = (mask >> i & 1) ? Splice::B : Splice::A;
                out.push_back({d, col, s});
            }
    }
    return out;
}

bool check_state_partial_dual(const StateCase& c, std::string* why) {
    CombinatorialMap t = tait_graph(c.d, c.col);
    CombinatorialMap lhs = partial_dual(t, state_dual_set(c.d, c.s, c.col));
    if (!ribbon_equal(lhs, state_ribbon_graph(c.d, c.s, c.col)))
        return fail(why, c.d.to_pd_text() + " state " + state_string(c.s));
    return true;
}

bool check_named_state_graphs(const LinkDiagram& d, std::string* why) {
    auto [c1, c2] = checkerboard(d);
    for (const auto& col : {c1, c2}) {
        CombinatorialMap t = tait_graph(d, col);
        CanonicalStates cs = canonical_states(d, col);
        std::set<EdgeId> plus, minus, agree;
        for (EdgeId e = 0; e < t.num_edges(); ++e) {
            const Weight& w = t.weight(e);
            (w.tait == Sign::Plus ? plus : minus).insert(e);
            if (w.oriented && *w.oriented == w.tait) agree.insert(e);
        }
        if (!ribbon_equal(partial_dual(t, plus), state_ribbon_graph(d, cs.all_a, col)))
            return fail(why, d.to_pd_text() + ": all-A");
        if (!ribbon_equal(partial_dual(t, minus), state_ribbon_graph(d, cs.all_b, col)))
            return fail(why, d.to_pd_text() + ": all-B");
        if (!ribbon_equal(partial_dual(t, agree), state_ribbon_graph(d, cs.seifert, col)))
            return fail(why, d.to_pd_text() + ": Seifert");
    }
    return true;
}

std::vector<ReconstructionCase> reconstruction_cases(int max_edges) {
    std::vector<ReconstructionCase> out;
    for (int e = 1; e <= max_edges; ++e)
        for (auto& m : plane_maps_with_edges(e))
            for (int pattern = 0; pattern < 2; ++pattern) {
                std::vector<Weight> w(e);
                for (int i = 0; i < e; ++i) w[i].tait = (pattern == 1 && i % 2 == 1) ? Sign::Minus : Sign::Plus;
                CombinatorialMap t = m.with_weights(w);
                for (int mask = 0; mask < (1 << e); ++mask) {
                    std::vector<CdLabel> labels(e);
                    for (int i = 0; i < e; ++i) labels[i] = (mask >> i & 1) ? CdLabel::D : CdLabel::C;
                    out.push_back({t, labels});
                }
            }
    return out;
}

bool check_reconstruction(const ReconstructionCase& c, std::string* why) {
    Admissibility adm = admissibility(c.t, c.labels);
    try {
        Reconstruction rec = reconstruct_link(c.t, c.labels);
        if (!adm.admissible()) return fail(why, "inadmissible labels were accepted");
        CombinatorialMap t2 = tait_graph(rec.diagram, rec.coloring);
        std::vector<Weight> w(t2.num_edges());
        for (EdgeId e = 0; e < t2.num_edges(); ++e) w[e].tait = t2.weight(e).tait;
        if (!ribbon_equal(t2.with_weights(w), c.t)) return fail(why, "Tait graph does not round-trip");
        if (cd_labeling(rec.diagram, rec.coloring) != c.labels) return fail(why, "labels do not round-trip");
        return true;
    } catch (const NotEulerian& e) {
        if (adm.admissible()) return fail(why, std::string("admissible labels rejected: ") + e.what());
        if (e.tait_vertices != adm.odd_tait || e.dual_vertices != adm.odd_dual)
            return fail(why, "NotEulerian lists the wrong vertices");
        return true;
    } catch (const Error& e) {
        return fail(why, e.what());
    }
}

bool check_seifert_diagram(const LinkDiagram& d, std::string* why) {
    const int k = d.num_components();
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<bool> which(k);
        for (int i = 0; i < k; ++i) which[i] = mask >> i & 1;
        LinkDiagram r = reverse_components(d, which);
        auto [c1, c2] = checkerboard(r);
        for (const auto& col : {c1, c2}) {
            SeifertReport rep = verify_seifert_characterization(r, col);
            for (auto& ch : rep.checks)
                if (!ch.pass) return fail(why, r.to_pd_text() + ": " + ch.name + " " + ch.detail);
        }
    }
    int distinct = distinct_labelings(d);
    if (distinct != (1 << (k - 1)))
        return fail(why, d.to_pd_text() + ": " + std::to_string(distinct) + " distinct labelings");
    return true;
}

bool check_region_dual(const MapCase& c, std::string* why) {
    if (!region_dual_identity(c.g, c.a)) return fail(why, "region dual differs from the partial dual");
    return true;
}

}  // namespace linkgraph

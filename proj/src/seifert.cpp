#include "linkgraph/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace linkgraph {

namespace {

void require_plane(const CombinatorialMap& t) {
    MapCounts c = counts(t);
    if (c.e == 0 || c.k != 1 || c.g != 0) throw Error("NotPlane", "expected a connected plane map with edges");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

OverlayMap overlay_pair(const CombinatorialMap& t) {
    require_plane(t);
    const int e = t.num_edges();
    std::vector<Dart> sigma(8 * e, -1);
    auto far = [](int k) { return 2 * k; };
    auto near = [](int k) { return 2 * k + 1; };
    auto close_cycle = [&](const std::vector<Dart>& seq) {
        for (size_t i = 0; i < seq.size(); ++i) sigma[seq[i]] = seq[(i + 1) % seq.size()];
    };
    OverlayMap out;
    Orbits verts = t.vertices(), fcs = t.faces();
    // T vertices keep their rotation
    for (auto& cyc : verts.cycles) {
        std::vector<Dart> seq;
        for (Dart d : cyc) seq.push_back(far(4 * CombinatorialMap::edge_of(d) + (d & 1)));
        close_cycle(seq);
    }
    // dual vertices: the face walk keeps the face on its right, so reverse it
    for (auto& cyc : fcs.cycles) {
        std::vector<Dart> seq;
        for (Dart d : cyc) seq.push_back(far(4 * CombinatorialMap::edge_of(d) + ((d & 1) ? 3 : 2)));
        std::reverse(seq.begin(), seq.end());
        close_cycle(seq);
    }
    // crossing vertex x_e: towards v, left face, towards u, right face
    for (EdgeId x = 0; x < e; ++x) close_cycle({near(4 * x + 1), near(4 * x + 3), near(4 * x + 0), near(4 * x + 2)});

    std::vector<Weight> w;
    for (EdgeId x = 0; x < e; ++x)
        for (int j = 0; j < 4; ++j) {
            Provenance src = j < 2 ? Provenance::Tait : Provenance::Dual;
            out.source.push_back(src);
            out.parent.push_back(x);
            if (t.weighted()) {
                Weight wt = t.weight(x);
                if (src == Provenance::Dual) {
                    wt.tait = negate(wt.tait);
                    if (wt.cd) wt.cd = *wt.cd == CdLabel::C ? CdLabel::D : CdLabel::C;
                }
                w.push_back(wt);
            }
        }
    out.map = CombinatorialMap(std::move(sigma), 0, std::move(w));
    Orbits ov = out.map.vertices();
    out.vertex_kind.assign(ov.cycles.size(), VertexKind::Crossing);
    out.vertex_origin.assign(ov.cycles.size(), -1);
    for (size_t i = 0; i < verts.cycles.size(); ++i) {
        Dart d = verts.cycles[i][0];
        int o = ov.index[far(4 * CombinatorialMap::edge_of(d) + (d & 1))];
        out.vertex_kind[o] = VertexKind::Tait;
        out.vertex_origin[o] = static_cast<int>(i);
    }
    for (size_t i = 0; i < fcs.cycles.size(); ++i) {
        Dart d = fcs.cycles[i][0];
        int o = ov.index[far(4 * CombinatorialMap::edge_of(d) + ((d & 1) ? 3 : 2))];
        out.vertex_kind[o] = VertexKind::Dual;
        out.vertex_origin[o] = static_cast<int>(i);
    }
    for (EdgeId x = 0; x < e; ++x) out.vertex_origin[ov.index[near(4 * x)]] = x;
    return out;
}

Admissibility admissibility(const CombinatorialMap& t, const std::vector<CdLabel>& labels) {
    if (static_cast<int>(labels.size()) != t.num_edges())
        throw Error("ParseError", "labels must cover every edge");
    Orbits verts = t.vertices(), fcs = t.faces();
    std::vector<int> vdeg(verts.cycles.size(), 0), fdeg(fcs.cycles.size(), 0);
    for (EdgeId x = 0; x < t.num_edges(); ++x) {
        if (labels[x] == CdLabel::C) {
            ++vdeg[verts.index[2 * x]];
            ++vdeg[verts.index[2 * x + 1]];
        } else {
            ++fdeg[fcs.index[2 * x]];
            ++fdeg[fcs.index[2 * x + 1]];
        }
    }
    Admissibility a;
    for (size_t i = 0; i < vdeg.size(); ++i)
        if (vdeg[i] % 2) a.odd_tait.push_back(static_cast<int>(i));
    for (size_t i = 0; i < fdeg.size(); ++i)
        if (fdeg[i] % 2) a.odd_dual.push_back(static_cast<int>(i));
    return a;
}

PhiGraph build_phi(const CombinatorialMap& t, const std::vector<CdLabel>& labels) {
    if (static_cast<int>(labels.size()) != t.num_edges())
        throw Error("ParseError", "labels must cover every edge");
    PhiGraph phi;
    phi.overlay = overlay_pair(t);
    phi.labels = labels;
    const int e = t.num_edges();
    phi.kept.assign(4 * e, 0);
    for (EdgeId x = 0; x < e; ++x) {
        int base = labels[x] == CdLabel::C ? 0 : 2;
        phi.kept[4 * x + base] = phi.kept[4 * x + base + 1] = 1;
    }
    Orbits fcs = phi.overlay.map.faces();
    UnionFind uf(static_cast<int>(fcs.cycles.size()));
    for (int k = 0; k < 4 * e; ++k)
        if (!phi.kept[k]) uf.unite(fcs.index[2 * k], fcs.index[2 * k + 1]);
    phi.region_of_face.assign(fcs.cycles.size(), -1);
    std::vector<int> id(fcs.cycles.size(), -1);
    for (size_t f = 0; f < fcs.cycles.size(); ++f) {
        int r = uf.find(static_cast<int>(f));
        if (id[r] < 0) id[r] = phi.num_regions++;
        phi.region_of_face[f] = id[r];
    }
    Orbits verts = t.vertices(), tf = t.faces();
    phi.c_graph.num_vertices = static_cast<int>(verts.cycles.size());
    phi.c_prime_graph.num_vertices = static_cast<int>(tf.cycles.size());
    for (EdgeId x = 0; x < e; ++x) {
        if (labels[x] == CdLabel::C) {
            phi.c_graph.edges.push_back({verts.index[2 * x], verts.index[2 * x + 1]});
            phi.c_graph.labels.push_back(x);
        } else {
            phi.c_prime_graph.edges.push_back({tf.index[2 * x], tf.index[2 * x + 1]});
            phi.c_prime_graph.labels.push_back(x);
        }
    }
    return phi;
}

AbstractMultigraph region_dual(const PhiGraph& phi) {
    AbstractMultigraph g;
    g.num_vertices = phi.num_regions;
    Orbits fcs = phi.overlay.map.faces();
    const int e = static_cast<int>(phi.labels.size());
    for (EdgeId x = 0; x < e; ++x) {
        int k = 4 * x + (phi.labels[x] == CdLabel::C ? 0 : 2);
        g.edges.push_back({phi.region_of_face[fcs.index[2 * k]], phi.region_of_face[fcs.index[2 * k + 1]]});
        g.labels.push_back(x);
    }
    return g;
}

bool SeifertReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool even_d_cycles(const CombinatorialMap& t, const std::vector<CdLabel>& labels) {
    AbstractMultigraph g = underlying_graph(t);
    std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        adj[g.edges[i].first].push_back({g.edges[i].second, i});
        adj[g.edges[i].second].push_back({g.edges[i].first, i});
    }
    // parity of d-edges on the tree path from the root
    std::vector<int> parity(g.num_vertices, -1);
    std::vector<char> tree(g.edges.size(), 0);
    for (int s = 0; s < g.num_vertices; ++s) {
        if (parity[s] >= 0) continue;
        parity[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, i] : adj[v]) {
                if (parity[w] >= 0) continue;
                parity[w] = parity[v] ^ (labels[i] == CdLabel::D);
                tree[i] = 1;
                q.push(w);
            }
        }
    }
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        if (tree[i]) continue;
        auto [a, b] = g.edges[i];
        if ((parity[a] ^ parity[b] ^ (labels[i] == CdLabel::D)) != 0) return false;
    }
    return true;
}

SeifertReport verify_seifert_characterization(const LinkDiagram& d, const CheckerboardColoring& col) {
    SeifertReport rep;
    CombinatorialMap t = tait_graph(d, col);
    rep.labels = cd_labeling(d, col);
    PhiGraph phi = build_phi(t, rep.labels);
    Admissibility adm = admissibility(t, rep.labels);
    rep.regions = phi.num_regions;
    rep.phi_star = region_dual(phi);

    auto list = [](const std::vector<int>& v) {
        std::string s;
        for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x + 1);
        return s;
    };
    rep.checks.push_back({"even_c_degree", adm.admissible(),
                          adm.admissible() ? "" : "odd at T{" + list(adm.odd_tait) + "} T*{" + list(adm.odd_dual) + "}"});
    bool eul = all_degrees_even(phi.c_graph) && all_degrees_even(phi.c_prime_graph);
    rep.checks.push_back({"eulerian_components", eul, ""});
    rep.checks.push_back({"even_d_cycles", even_d_cycles(t, rep.labels), ""});
    SeifertData sd = seifert_data(d);
    bool iso = graph_is_isomorphic(rep.phi_star, sd.graph, std::max(40, d.num_crossings()));
    bool iso_labeled = graph_is_isomorphic(rep.phi_star, sd.graph, std::max(40, d.num_crossings()), true);
    rep.checks.push_back({"phi_star_is_seifert_graph", iso && iso_labeled,
                          iso ? (iso_labeled ? "" : "isomorphic but not edge-for-edge") : "not isomorphic"});
    rep.checks.push_back({"phi_star_bipartite", is_bipartite(rep.phi_star), ""});
    bool agree = cd_labeling_by_regions(d, col) == rep.labels;
    rep.checks.push_back({"labels_match_region_merging", agree, ""});
    return rep;
}

bool region_dual_identity(const CombinatorialMap& g, const std::set<EdgeId>& a) {
    require_plane(g);
    std::vector<CdLabel> labels(g.num_edges(), CdLabel::D);
    for (EdgeId x : a) {
        if (x < 0 || x >= g.num_edges()) throw Error("UnknownEdge", "no edge " + std::to_string(x + 1));
        labels[x] = CdLabel::C;
    }
    AbstractMultigraph lhs = underlying_graph(partial_dual(g, a));
    AbstractMultigraph rhs = region_dual(build_phi(g, labels));
    int budget = std::max(40, g.num_edges());
    return graph_is_isomorphic(lhs, rhs, budget) && graph_is_isomorphic(lhs, rhs, budget, true);
}

int distinct_labelings(const LinkDiagram& d) {
    const int k = d.num_components();
    CheckerboardColoring col = checkerboard(d).first;
    std::set<std::vector<CdLabel>> seen;
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<bool> which(k);
        for (int i = 0; i < k; ++i) which[i] = (mask >> i) & 1;
        LinkDiagram r = reverse_components(d, which);
        // carry the coloring across: corner (c,j) moves to (c,j+shift)
        CheckerboardColoring rc;
        rc.black.assign(r.num_faces(), 0);
        for (int c = 0; c < d.num_crossings(); ++c) {
            int shift = which[d.component_of_arc(d.arc_at(4 * c))] ? 2 : 0;
            for (int j = 0; j < 4; ++j) rc.black[r.corner_face(c, (j + shift) & 3)] = col.black[d.corner_face(c, j)];
        }
        seen.insert(cd_labeling(r, rc));
    }
    return static_cast<int>(seen.size());
}

}  // namespace linkgraph

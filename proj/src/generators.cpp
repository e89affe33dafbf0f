#include "linkgraph/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "linkgraph/seifert.hpp"

namespace linkgraph {

namespace {

Sign coin(Rng& rng) { return (rng() & 1) ? Sign::Plus : Sign::Minus; }

int uniform(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

// put new dart x right after d in the rotation at d's vertex
void insert_after(std::vector<Dart>& sigma, Dart d, Dart x) {
    sigma[x] = sigma[d];
    sigma[d] = x;
}

std::vector<Dart> loop_rotation() { return {1, 0}; }
std::vector<Dart> bridge_rotation() { return {0, 1}; }

// a new edge n, n+1 across one face; corners are named by the dart that
// follows them in the face walk
std::vector<Dart> add_chord(const CombinatorialMap& g, Dart x, Dart y) {
    std::vector<Dart> s = g.sigma_perm();
    const Dart n = static_cast<Dart>(s.size());
    s.push_back(n);
    s.push_back(n + 1);
    insert_after(s, g.sigma_inv(x), n);
    insert_after(s, g.sigma_inv(y), n + 1);
    return s;
}

std::vector<Dart> add_pendant(const CombinatorialMap& g, Dart d) {
    std::vector<Dart> s = g.sigma_perm();
    const Dart n = static_cast<Dart>(s.size());
    s.push_back(n);
    s.push_back(n + 1);
    insert_after(s, d, n);
    return s;
}

// all plane maps one edge larger than g
std::vector<std::vector<Dart>> grow(const CombinatorialMap& g) {
    std::vector<std::vector<Dart>> out;
    for (Dart d = 0; d < g.num_darts(); ++d) out.push_back(add_pendant(g, d));
    for (auto& face : g.faces().cycles)
        for (size_t i = 0; i < face.size(); ++i)
            for (size_t j = i; j < face.size(); ++j) out.push_back(add_chord(g, face[i], face[j]));
    return out;
}

}  // namespace

std::vector<Weight> random_weights(Rng& rng, int edges) {
    std::vector<Weight> w(edges);
    for (auto& x : w) {
        x.tait = coin(rng);
        x.oriented = coin(rng);
    }
    return w;
}

std::set<EdgeId> random_subset(Rng& rng, int edges) {
    std::set<EdgeId> a;
    for (EdgeId e = 0; e < edges; ++e)
        if (rng() & 1) a.insert(e);
    return a;
}

CombinatorialMap random_map(Rng& rng, int edges, bool weighted) {
    std::vector<Dart> sigma(2 * edges);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    int isolated = uniform(rng, 3) == 0 ? 1 : 0;
    return CombinatorialMap(std::move(sigma), isolated, weighted ? random_weights(rng, edges) : std::vector<Weight>{});
}

CombinatorialMap random_plane_map(Rng& rng, int edges, bool weighted) {
    if (edges < 1) throw Error("BadSize", "a plane map needs at least one edge");
    CombinatorialMap g((rng() & 1) ? loop_rotation() : bridge_rotation());
    for (int k = 1; k < edges; ++k) {
        if (rng() & 1) {
            g = CombinatorialMap(add_pendant(g, uniform(rng, g.num_darts())));
            continue;
        }
        Orbits f = g.faces();
        const auto& face = f.cycles[uniform(rng, static_cast<int>(f.cycles.size()))];
        int m = static_cast<int>(face.size());
        g = CombinatorialMap(add_chord(g, face[uniform(rng, m)], face[uniform(rng, m)]));
    }
    return weighted ? g.with_weights(random_weights(rng, edges)) : g;
}

std::vector<CombinatorialMap> plane_maps_with_edges(int edges) {
    if (edges < 1) return {};
    std::map<std::vector<int>, std::vector<Dart>> level;
    for (auto s : {loop_rotation(), bridge_rotation()}) level[map_code(CombinatorialMap(s), false, false)] = s;
    for (int k = 1; k < edges; ++k) {
        std::map<std::vector<int>, std::vector<Dart>> next;
        for (auto& [code, s] : level)
            for (auto& t : grow(CombinatorialMap(s))) {
                auto c = map_code(CombinatorialMap(t), false, false);
                if (!next.count(c)) next.emplace(std::move(c), std::move(t));
            }
        level = std::move(next);
    }
    std::vector<CombinatorialMap> out;
    for (auto& [code, s] : level) out.emplace_back(s);
    return out;
}

LinkDiagram random_diagram(Rng& rng, int max_crossings) {
    int n = 1 + uniform(rng, max_crossings);
    CombinatorialMap t = random_plane_map(rng, n, true);
    // the medial always has an orientation, so some labeling is admissible
    std::vector<std::vector<CdLabel>> ok;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<CdLabel> labels(n);
        for (int e = 0; e < n; ++e) labels[e] = (mask >> e & 1) ? CdLabel::C : CdLabel::D;
        if (admissibility(t, labels).admissible()) ok.push_back(std::move(labels));
    }
    LinkDiagram d = reconstruct_link(t, ok[uniform(rng, static_cast<int>(ok.size()))]).diagram;
    std::vector<bool> flip(d.num_components());
    for (size_t i = 0; i < flip.size(); ++i) flip[i] = rng() & 1;
    return reverse_components(d, flip);
}

}  // namespace linkgraph

#include "linkgraph/arrow_presentation.hpp"

#include <algorithm>
#include <queue>

namespace linkgraph {

namespace {

struct Occurrence {
    int cycle, pos;
};

// Label positions after validating that each label appears exactly twice.
std::map<int, std::vector<Occurrence>> occurrences(const ArrowPresentation& ap) {
    std::map<int, std::vector<Occurrence>> occ;
    for (int c = 0; c < static_cast<int>(ap.cycles.size()); ++c)
        for (int i = 0; i < static_cast<int>(ap.cycles[c].size()); ++i)
            occ[ap.cycles[c][i].label].push_back({c, i});
    for (auto& [label, v] : occ)
        if (v.size() != 2)
            throw Error("LabelNotTwice", "label " + std::to_string(label) + " occurs " +
                                             std::to_string(v.size()) + " times");
    return occ;
}

// Per-cycle reversal flags making both arrows of every label point the same
// way, plus the component id of each cycle.  Each component is rooted at its
// least cycle, which keeps its given reading.
void orient(const ArrowPresentation& ap, const std::map<int, std::vector<Occurrence>>& occ,
            std::vector<int>& flip, std::vector<int>& comp) {
    const int nc = static_cast<int>(ap.cycles.size());
    std::vector<std::vector<std::pair<int, int>>> adj(nc);
    for (auto& [label, v] : occ) {
        int a = ap.cycles[v[0].cycle][v[0].pos].dir == ArrowDir::Along ? 0 : 1;
        int b = ap.cycles[v[1].cycle][v[1].pos].dir == ArrowDir::Along ? 0 : 1;
        if (v[0].cycle == v[1].cycle) {
            if (a != b) throw Error("NonOrientable", "label " + std::to_string(label) + " is twisted");
            continue;
        }
        adj[v[0].cycle].push_back({v[1].cycle, a ^ b});
        adj[v[1].cycle].push_back({v[0].cycle, a ^ b});
    }
    flip.assign(nc, -1);
    comp.assign(nc, -1);
    int ncomp = 0;
    for (int r = 0; r < nc; ++r) {
        if (flip[r] >= 0) continue;
        flip[r] = 0;
        comp[r] = ncomp;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int c = q.front();
            q.pop();
            for (auto [o, par] : adj[c]) {
                int want = flip[c] ^ par;
                if (flip[o] < 0) {
                    flip[o] = want;
                    comp[o] = ncomp;
                    q.push(o);
                } else if (flip[o] != want) {
                    throw Error("NonOrientable", "arrow directions admit no consistent orientation");
                }
            }
        }
        ++ncomp;
    }
}

std::vector<int> least_rotation(const std::vector<int>& c) {
    std::vector<int> best = c;
    for (size_t s = 1; s < c.size(); ++s) {
        std::vector<int> r(c.begin() + s, c.end());
        r.insert(r.end(), c.begin(), c.begin() + s);
        if (r < best) best = std::move(r);
    }
    return best;
}

}  // namespace

ArrowPresentation to_arrow_presentation(const CombinatorialMap& g) {
    ArrowPresentation ap;
    for (auto& cyc : g.vertices().cycles) {
        std::vector<Arrow> arrows;
        for (Dart d : cyc) arrows.push_back({CombinatorialMap::edge_of(d), ArrowDir::Along});
        ap.cycles.push_back(std::move(arrows));
    }
    for (int i = 0; i < g.isolated_vertices(); ++i) ap.cycles.emplace_back();
    if (g.weighted())
        for (EdgeId e = 0; e < g.num_edges(); ++e) ap.label_weights[e] = g.weight(e);
    return ap;
}

CombinatorialMap from_arrow_presentation(const ArrowPresentation& ap) {
    auto occ = occurrences(ap);
    std::vector<int> flip, comp;
    orient(ap, occ, flip, comp);
    std::map<int, int> edge;
    for (auto& [label, v] : occ) edge.emplace(label, static_cast<int>(edge.size()));
    const int n = 2 * static_cast<int>(edge.size());
    std::vector<Dart> sigma(n, -1);
    std::vector<int> used(edge.size(), 0);
    int isolated = 0;
    for (int c = 0; c < static_cast<int>(ap.cycles.size()); ++c) {
        std::vector<Arrow> cyc = ap.cycles[c];
        if (cyc.empty()) {
            ++isolated;
            continue;
        }
        if (flip[c]) std::reverse(cyc.begin(), cyc.end());
        std::vector<Dart> darts;
        for (auto& a : cyc) {
            int e = edge[a.label];
            darts.push_back(2 * e + used[e]++);
        }
        for (size_t i = 0; i < darts.size(); ++i) sigma[darts[i]] = darts[(i + 1) % darts.size()];
    }
    std::vector<Weight> w;
    if (!ap.label_weights.empty()) {
        for (auto& [label, e] : edge) {
            auto it = ap.label_weights.find(label);
            if (it == ap.label_weights.end())
                throw Error("WeightCoverage", "label " + std::to_string(label) + " has no weight");
            w.push_back(it->second);
        }
        if (ap.label_weights.size() != edge.size())
            throw Error("WeightCoverage", "weights given for labels that do not occur");
    }
    return CombinatorialMap(std::move(sigma), isolated, std::move(w));
}

CanonicalPresentation canonical(const ArrowPresentation& ap, bool allow_mirror) {
    auto occ = occurrences(ap);
    std::vector<int> flip, comp;
    orient(ap, occ, flip, comp);
    const int nc = static_cast<int>(ap.cycles.size());
    int ncomp = nc == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<int>> members(ncomp);
    for (int c = 0; c < nc; ++c) members[comp[c]].push_back(c);

    CanonicalPresentation out;
    for (auto& mem : members) {
        std::vector<std::vector<int>> best;
        for (int extra = 0; extra < (allow_mirror ? 2 : 1); ++extra) {
            std::vector<std::vector<int>> cycles;
            for (int c : mem) {
                std::vector<int> labels;
                for (auto& a : ap.cycles[c]) labels.push_back(a.label);
                if (flip[c] ^ extra) std::reverse(labels.begin(), labels.end());
                cycles.push_back(least_rotation(labels));
            }
            std::sort(cycles.begin(), cycles.end());
            if (extra == 0 || cycles < best) best = std::move(cycles);
        }
        out.cycles.insert(out.cycles.end(), best.begin(), best.end());
    }
    std::sort(out.cycles.begin(), out.cycles.end());
    out.label_weights = ap.label_weights;
    return out;
}

}  // namespace linkgraph

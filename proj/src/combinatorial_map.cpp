#include "linkgraph/combinatorial_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace linkgraph {

namespace {

bool is_permutation_vec(const std::vector<Dart>& p) {
    std::vector<char> seen(p.size(), 0);
    for (Dart x : p) {
        if (x < 0 || x >= static_cast<Dart>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

template <typename Next>
Orbits orbits_of(int n, Next next) {
    Orbits o;
    o.index.assign(n, -1);
    for (Dart d = 0; d < n; ++d) {
        if (o.index[d] >= 0) continue;
        std::vector<Dart> cyc;
        Dart x = d;
        do {
            o.index[x] = static_cast<int>(o.cycles.size());
            cyc.push_back(x);
            x = next(x);
        } while (x != d);
        o.cycles.push_back(std::move(cyc));
    }
    return o;
}

}  // namespace

std::string NotEulerian::describe(const std::vector<int>& a, const std::vector<int>& b) {
    std::ostringstream os;
    os << "odd c-degree at";
    if (!a.empty()) {
        os << " T vertices";
        for (int v : a) os << ' ' << v + 1;
    }
    if (!b.empty()) {
        os << (a.empty() ? "" : ";") << " T* vertices";
        for (int v : b) os << ' ' << v + 1;
    }
    return os.str();
}

CombinatorialMap::CombinatorialMap(std::vector<Dart> sigma, int isolated_vertices,
                                   std::vector<Weight> weights)
    : sigma_(std::move(sigma)), isolated_(isolated_vertices), weights_(std::move(weights)) {
    if (sigma_.size() % 2 != 0) throw Error("FixedPointAlpha", "odd number of darts");
    if (!is_permutation_vec(sigma_)) throw Error("NotPermutation", "sigma is not a permutation");
    if (isolated_ < 0) throw Error("NotPermutation", "negative isolated vertex count");
    if (!weights_.empty() && static_cast<int>(weights_.size()) != num_edges())
        throw Error("WeightCoverage", "weights must cover every edge exactly once");
    sigma_inv_.resize(sigma_.size());
    for (Dart d = 0; d < num_darts(); ++d) sigma_inv_[sigma_[d]] = d;
}

CombinatorialMap CombinatorialMap::from_permutations(const std::vector<Dart>& sigma,
                                                     const std::vector<Dart>& alpha,
                                                     int isolated_vertices,
                                                     std::vector<Weight> weights) {
    if (sigma.size() != alpha.size())
        throw Error("NotPermutation", "sigma and alpha act on different dart sets");
    if (!is_permutation_vec(sigma)) throw Error("NotPermutation", "sigma is not a permutation");
    if (!is_permutation_vec(alpha)) throw Error("NotPermutation", "alpha is not a permutation");
    const int n = static_cast<int>(sigma.size());
    for (Dart d = 0; d < n; ++d) {
        if (alpha[d] == d) throw Error("FixedPointAlpha", "alpha fixes dart " + std::to_string(d + 1));
        if (alpha[alpha[d]] != d) throw Error("NotPermutation", "alpha is not an involution");
    }
    std::vector<Dart> relabel(n, -1);
    int next = 0;
    for (Dart d = 0; d < n; ++d) {
        if (relabel[d] >= 0) continue;
        relabel[d] = next++;
        relabel[alpha[d]] = next++;
    }
    std::vector<Dart> s(n);
    for (Dart d = 0; d < n; ++d) s[relabel[d]] = relabel[sigma[d]];
    return CombinatorialMap(std::move(s), isolated_vertices, std::move(weights));
}

CombinatorialMap CombinatorialMap::with_weights(std::vector<Weight> w) const {
    return CombinatorialMap(sigma_, isolated_, std::move(w));
}

Orbits CombinatorialMap::vertices() const {
    return orbits_of(num_darts(), [this](Dart d) { return sigma_[d]; });
}

Orbits CombinatorialMap::faces() const {
    return orbits_of(num_darts(), [this](Dart d) { return phi(d); });
}

Orbits CombinatorialMap::components() const {
    const int n = num_darts();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Dart d = 0; d < n; ++d) {
        parent[find(d)] = find(sigma_[d]);
        parent[find(d)] = find(alpha(d));
    }
    Orbits o;
    o.index.assign(n, -1);
    std::vector<int> root_to(n, -1);
    for (Dart d = 0; d < n; ++d) {
        int r = find(d);
        if (root_to[r] < 0) {
            root_to[r] = static_cast<int>(o.cycles.size());
            o.cycles.emplace_back();
        }
        o.index[d] = root_to[r];
        o.cycles[root_to[r]].push_back(d);
    }
    return o;
}

MapCounts counts(const CombinatorialMap& g) {
    MapCounts c;
    Orbits verts = g.vertices(), fcs = g.faces(), comps = g.components();
    const int nc = static_cast<int>(comps.cycles.size());
    std::vector<int> vi(nc, 0), ei(nc, 0), pi(nc, 0);
    for (auto& cyc : verts.cycles) ++vi[comps.index[cyc[0]]];
    for (auto& cyc : fcs.cycles) ++pi[comps.index[cyc[0]]];
    for (auto& cyc : comps.cycles) ei[comps.index[cyc[0]]] = static_cast<int>(cyc.size()) / 2;
    for (int i = 0; i < nc; ++i) {
        int twice = 2 - vi[i] + ei[i] - pi[i];
        c.genus.push_back(twice / 2);
    }
    for (int i = 0; i < g.isolated_vertices(); ++i) c.genus.push_back(0);
    c.v = static_cast<int>(verts.cycles.size()) + g.isolated_vertices();
    c.e = g.num_edges();
    c.k = nc + g.isolated_vertices();
    c.p = static_cast<int>(fcs.cycles.size()) + g.isolated_vertices();
    c.g = std::accumulate(c.genus.begin(), c.genus.end(), 0);
    return c;
}

CombinatorialMap dual(const CombinatorialMap& g) {
    std::vector<Dart> s(g.num_darts());
    for (Dart d = 0; d < g.num_darts(); ++d) s[d] = g.phi(d);
    std::vector<Weight> w = g.weights();
    for (auto& x : w) {
        x.tait = negate(x.tait);
        if (x.cd) x.cd = *x.cd == CdLabel::C ? CdLabel::D : CdLabel::C;
    }
    return CombinatorialMap(std::move(s), g.isolated_vertices(), std::move(w));
}

std::set<EdgeId> all_edges(const CombinatorialMap& g) {
    std::set<EdgeId> s;
    for (EdgeId e = 0; e < g.num_edges(); ++e) s.insert(e);
    return s;
}

std::set<EdgeId> complement(const CombinatorialMap& g, const std::set<EdgeId>& a) {
    std::set<EdgeId> s;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (!a.count(e)) s.insert(e);
    return s;
}

static void check_edges(const CombinatorialMap& g, const std::set<EdgeId>& s) {
    for (EdgeId e : s)
        if (e < 0 || e >= g.num_edges()) throw Error("UnknownEdge", "no edge " + std::to_string(e + 1));
}

CombinatorialMap delete_edges(const CombinatorialMap& g, const std::set<EdgeId>& s) {
    check_edges(g, s);
    std::vector<EdgeId> new_id(g.num_edges(), -1);
    int ne = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (!s.count(e)) new_id[e] = ne++;
    auto nd = [&](Dart d) { return 2 * new_id[CombinatorialMap::edge_of(d)] + (d & 1); };
    std::vector<Dart> sig(2 * ne);
    std::vector<Weight> w;
    int isolated = g.isolated_vertices();
    for (auto& cyc : g.vertices().cycles) {
        std::vector<Dart> kept;
        for (Dart d : cyc)
            if (new_id[CombinatorialMap::edge_of(d)] >= 0) kept.push_back(d);
        if (kept.empty()) {
            ++isolated;
            continue;
        }
        for (size_t i = 0; i < kept.size(); ++i) sig[nd(kept[i])] = nd(kept[(i + 1) % kept.size()]);
    }
    if (g.weighted())
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (new_id[e] >= 0) w.push_back(g.weight(e));
    return CombinatorialMap(std::move(sig), isolated, std::move(w));
}

// Vertices of G^A are the boundary components of the spanning subgraph on A.
// Each boundary walk passes along the A-edges; the darts of the remaining
// edges sit in the corners the walk turns through and keep their place there,
// which is exactly where the marking arrows of the construction are attached.
CombinatorialMap partial_dual(const CombinatorialMap& g, const std::set<EdgeId>& a) {
    check_edges(g, a);
    const int n = g.num_darts();
    auto in_a = [&](Dart d) { return a.count(CombinatorialMap::edge_of(d)) > 0; };
    std::vector<Dart> sig(n, -1);
    std::vector<char> visited(n, 0);
    auto close_cycle = [&](const std::vector<Dart>& seq) {
        for (size_t i = 0; i < seq.size(); ++i) sig[seq[i]] = seq[(i + 1) % seq.size()];
    };
    for (Dart d0 = 0; d0 < n; ++d0) {
        if (!in_a(d0) || visited[d0]) continue;
        std::vector<Dart> seq;
        Dart d = d0;
        do {
            visited[d] = 1;
            seq.push_back(d);
            Dart x = g.sigma(CombinatorialMap::alpha(d));
            while (!in_a(x)) {
                seq.push_back(x);
                x = g.sigma(x);
            }
            d = x;
        } while (d != d0);
        close_cycle(seq);
    }
    for (auto& cyc : g.vertices().cycles) {
        if (std::any_of(cyc.begin(), cyc.end(), in_a)) continue;
        close_cycle(cyc);
    }
    std::vector<Weight> w = g.weights();
    for (EdgeId e : a) {
        if (w.empty()) break;
        w[e].tait = negate(w[e].tait);
        if (w[e].cd) w[e].cd = *w[e].cd == CdLabel::C ? CdLabel::D : CdLabel::C;
    }
    return CombinatorialMap(std::move(sig), g.isolated_vertices(), std::move(w));
}

CombinatorialMap mirror(const CombinatorialMap& g) {
    std::vector<Dart> s(g.num_darts());
    for (Dart d = 0; d < g.num_darts(); ++d) s[d] = g.sigma_inv(d);
    return CombinatorialMap(std::move(s), g.isolated_vertices(), g.weights());
}

namespace {

// Try to extend f(start)=target across start's component, using sigma of h
// read forwards or backwards.
bool propagate(const CombinatorialMap& g, const CombinatorialMap& h, Dart start, Dart target,
               bool reversed, std::vector<Dart>& f) {
    std::vector<Dart> stack{start};
    std::vector<Dart> touched;
    f[start] = target;
    touched.push_back(start);
    bool ok = true;
    while (ok && !stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        Dart x = f[d];
        std::pair<Dart, Dart> steps[2] = {
            {CombinatorialMap::alpha(d), CombinatorialMap::alpha(x)},
            {g.sigma(d), reversed ? h.sigma_inv(x) : h.sigma(x)}};
        for (auto [dn, xn] : steps) {
            if (CombinatorialMap::edge_of(dn) != CombinatorialMap::edge_of(xn)) {
                ok = false;
                break;
            }
            if (f[dn] < 0) {
                f[dn] = xn;
                touched.push_back(dn);
                stack.push_back(dn);
            } else if (f[dn] != xn) {
                ok = false;
                break;
            }
        }
    }
    if (!ok)
        for (Dart d : touched) f[d] = -1;
    return ok;
}

bool labeled_equal(const CombinatorialMap& g, const CombinatorialMap& h, bool allow_mirror) {
    if (g.num_darts() != h.num_darts() || g.isolated_vertices() != h.isolated_vertices()) return false;
    if (g.weights() != h.weights()) return false;
    std::vector<Dart> f(g.num_darts(), -1);
    for (Dart d = 0; d < g.num_darts(); d += 2) {
        if (f[d] >= 0) continue;
        bool ok = false;
        for (int rev = 0; rev < (allow_mirror ? 2 : 1) && !ok; ++rev)
            for (Dart t : {d, d + 1})
                if (propagate(g, h, d, t, rev == 1, f)) {
                    ok = true;
                    break;
                }
        if (!ok) return false;
    }
    return true;
}

int weight_code(const Weight& w) {
    int o = w.oriented ? (*w.oriented == Sign::Plus ? 1 : 2) : 0;
    int c = w.cd ? (*w.cd == CdLabel::C ? 1 : 2) : 0;
    return (w.tait == Sign::Plus ? 1 : 2) + 3 * o + 9 * c;
}

std::vector<int> code_from(const CombinatorialMap& g, Dart s, bool reversed, bool with_weights,
                           std::vector<int>& num, std::vector<Dart>& order) {
    order.clear();
    order.push_back(s);
    num[s] = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        Dart d = order[i];
        for (Dart nb : {reversed ? g.sigma_inv(d) : g.sigma(d), CombinatorialMap::alpha(d)}) {
            if (num[nb] < 0) {
                num[nb] = static_cast<int>(order.size());
                order.push_back(nb);
            }
        }
    }
    std::vector<int> code;
    code.reserve(order.size() * 3);
    for (Dart d : order) {
        code.push_back(num[reversed ? g.sigma_inv(d) : g.sigma(d)]);
        code.push_back(num[CombinatorialMap::alpha(d)]);
        if (with_weights && g.weighted()) code.push_back(weight_code(g.weight(CombinatorialMap::edge_of(d))));
    }
    for (Dart d : order) num[d] = -1;
    return code;
}

}  // namespace

bool ribbon_equal(const CombinatorialMap& g, const CombinatorialMap& h) {
    return labeled_equal(g, h, true);
}

bool ribbon_equal_oriented(const CombinatorialMap& g, const CombinatorialMap& h) {
    return labeled_equal(g, h, false);
}

std::vector<int> map_code(const CombinatorialMap& g, bool with_weights, bool allow_mirror) {
    Orbits comps = g.components();
    std::vector<int> num(g.num_darts(), -1);
    std::vector<Dart> order;
    std::vector<std::vector<int>> parts;
    for (auto& comp : comps.cycles) {
        std::vector<int> best;
        for (Dart s : comp)
            for (int rev = 0; rev < (allow_mirror ? 2 : 1); ++rev) {
                auto c = code_from(g, s, rev == 1, with_weights, num, order);
                if (best.empty() || c < best) best = std::move(c);
            }
        parts.push_back(std::move(best));
    }
    std::sort(parts.begin(), parts.end());
    std::vector<int> out{g.num_darts(), g.isolated_vertices(), with_weights && g.weighted() ? 1 : 0};
    for (auto& p : parts) {
        out.push_back(-1);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

bool map_isomorphic(const CombinatorialMap& g, const CombinatorialMap& h, bool with_weights,
                    bool allow_mirror) {
    if (g.num_darts() != h.num_darts() || g.isolated_vertices() != h.isolated_vertices()) return false;
    return map_code(g, with_weights, allow_mirror) == map_code(h, with_weights, allow_mirror);
}

}  // namespace linkgraph

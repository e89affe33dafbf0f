#include "linkgraph/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>

namespace linkgraph {

int AbstractMultigraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

AbstractMultigraph underlying_graph(const CombinatorialMap& g) {
    AbstractMultigraph m;
    Orbits verts = g.vertices();
    m.num_vertices = static_cast<int>(verts.cycles.size()) + g.isolated_vertices();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        m.edges.push_back({verts.index[2 * e], verts.index[2 * e + 1]});
        m.labels.push_back(e);
    }
    return m;
}

BudgetExceeded::BudgetExceeded(int edges, int budget)
    : Error("BudgetExceeded",
            std::to_string(edges) + " edges exceeds isomorphism budget " + std::to_string(budget)) {}

namespace {

using PairKey = std::pair<int, int>;

struct Indexed {
    int n = 0;
    std::map<PairKey, std::vector<int>> between;  // sorted labels (zeros when unlabeled)
    std::vector<std::vector<int>> nbrs;            // distinct neighbours
};

Indexed index_graph(const AbstractMultigraph& g, bool labels) {
    Indexed ix;
    ix.n = g.num_vertices;
    ix.nbrs.resize(g.num_vertices);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto [a, b] = g.edges[i];
        if (a > b) std::swap(a, b);
        ix.between[{a, b}].push_back(labels ? g.labels[i] : 0);
    }
    for (auto& [k, v] : ix.between) {
        std::sort(v.begin(), v.end());
        ix.nbrs[k.first].push_back(k.second);
        if (k.first != k.second) ix.nbrs[k.second].push_back(k.first);
    }
    return ix;
}

const std::vector<int>& between(const Indexed& ix, int a, int b) {
    static const std::vector<int> none;
    if (a > b) std::swap(a, b);
    auto it = ix.between.find({a, b});
    return it == ix.between.end() ? none : it->second;
}

// Colour refinement over the disjoint union so that colours are comparable.
std::vector<int> refine(const Indexed& g, const Indexed& h) {
    const int n = g.n + h.n;
    auto graph_of = [&](int v) -> std::pair<const Indexed*, int> {
        return v < g.n ? std::pair{&g, v} : std::pair{&h, v - g.n};
    };
    std::vector<int> color(n, 0);
    for (int v = 0; v < n; ++v) {
        auto [ix, u] = graph_of(v);
        int deg = 0;
        for (int w : ix->nbrs[u]) deg += static_cast<int>(between(*ix, u, w).size()) * (w == u ? 2 : 1);
        color[v] = deg * 1000 + static_cast<int>(between(*ix, u, u).size());
    }
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            auto [ix, u] = graph_of(v);
            int off = ix == &g ? 0 : g.n;
            std::vector<std::pair<int, int>> nb;
            for (int w : ix->nbrs[u]) nb.push_back({color[w + off], static_cast<int>(between(*ix, u, w).size())});
            std::sort(nb.begin(), nb.end());
            sig[v].push_back(color[v]);
            for (auto [c, m] : nb) {
                sig[v].push_back(c);
                sig[v].push_back(m);
            }
        }
        std::map<std::vector<int>, int> ids;
        for (auto& s : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [k, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
        if (next == classes) break;
        classes = next;
    }
    return color;
}

}  // namespace

bool graph_is_isomorphic(const AbstractMultigraph& g, const AbstractMultigraph& h, int budget,
                         bool respect_labels) {
    int m = static_cast<int>(std::max(g.edges.size(), h.edges.size()));
    if (m > budget) throw BudgetExceeded(m, budget);
    if (g.num_vertices != h.num_vertices || g.edges.size() != h.edges.size()) return false;
    if (respect_labels) {
        if (g.labels.size() != g.edges.size() || h.labels.size() != h.edges.size()) return false;
        auto a = g.labels, b = h.labels;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    Indexed gi = index_graph(g, respect_labels), hi = index_graph(h, respect_labels);
    std::vector<int> color = refine(gi, hi);
    std::vector<int> cg(color.begin(), color.begin() + g.num_vertices);
    std::vector<int> ch(color.begin() + g.num_vertices, color.end());
    {
        auto a = cg, b = ch;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    const int n = g.num_vertices;
    // order: each next vertex has as many already ordered neighbours as possible
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    std::vector<int> links(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!placed[v] && (best < 0 || links[v] > links[best])) best = v;
        placed[best] = 1;
        order.push_back(best);
        for (int w : gi.nbrs[best]) ++links[w];
    }
    std::vector<int> f(n, -1), used(n, 0);
    std::function<bool(int)> extend = [&](int k) -> bool {
        if (k == n) return true;
        int v = order[k];
        for (int x = 0; x < n; ++x) {
            if (used[x] || ch[x] != cg[v]) continue;
            if (between(gi, v, v) != between(hi, x, x)) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int u = order[j];
                ok = between(gi, v, u) == between(hi, x, f[u]);
            }
            if (!ok) continue;
            f[v] = x;
            used[x] = 1;
            if (extend(k + 1)) return true;
            used[x] = 0;
            f[v] = -1;
        }
        return false;
    };
    return extend(0);
}

bool is_bipartite(const AbstractMultigraph& g) {
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (auto [a, b] : g.edges) {
        if (a == b) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> side(g.num_vertices, -1);
    for (int s = 0; s < g.num_vertices; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (side[w] < 0) {
                    side[w] = side[v] ^ 1;
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool all_degrees_even(const AbstractMultigraph& g) {
    std::vector<int> deg(g.num_vertices, 0);
    for (auto [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

int num_components(const AbstractMultigraph& g) {
    std::vector<int> parent(g.num_vertices);
    for (int i = 0; i < g.num_vertices; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int c = g.num_vertices;
    for (auto [a, b] : g.edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --c;
        }
    }
    return c;
}

GraphPredicates graph_predicates(const AbstractMultigraph& g) {
    GraphPredicates out;
    out.is_bipartite = is_bipartite(g);
    out.components_eulerian = all_degrees_even(g);

    const int n = g.num_vertices;
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge)
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        auto [a, b] = g.edges[i];
        if (a == b) {
            out.blocks.push_back({i});
            continue;
        }
        adj[a].push_back({b, i});
        adj[b].push_back({a, i});
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> stack;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int via) {
        disc[v] = low[v] = timer++;
        for (auto [w, e] : adj[v]) {
            if (e == via) continue;
            if (disc[w] < 0) {
                stack.push_back(e);
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<int> block;
                    int top;
                    do {
                        top = stack.back();
                        stack.pop_back();
                        block.push_back(top);
                    } while (top != e);
                    std::sort(block.begin(), block.end());
                    out.blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                stack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v, -1);
    std::sort(out.blocks.begin(), out.blocks.end());

    std::vector<int> seen_in(n, 0);
    for (auto& b : out.blocks) {
        std::vector<int> vs;
        for (int e : b) {
            vs.push_back(g.edges[e].first);
            vs.push_back(g.edges[e].second);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (int v : vs) ++seen_in[v];
    }
    for (int v = 0; v < n; ++v)
        if (seen_in[v] >= 2) out.cut_vertices.push_back(v);
    return out;
}

std::string to_dot(const AbstractMultigraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.num_vertices; ++v) os << "  " << v + 1 << ";\n";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        os << "  " << g.edges[i].first + 1 << " -- " << g.edges[i].second + 1;
        if (!g.labels.empty()) os << " [label=\"" << g.labels[i] + 1 << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace linkgraph

#pragma once

// Small brute-force computations used as test oracles.  They work straight
// from raw permutations or PD tuples and share no code with the library.

#include <array>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void join(int a, int b) { up[find(a)] = find(b); }
    int classes() {
        int n = 0;
        for (int i = 0; i < static_cast<int>(up.size()); ++i) n += find(i) == i;
        return n;
    }
};

inline int cycles_of(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int n = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++n;
        for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return n;
}

// v, e, k, p and total genus of a map given by 0-based sigma with alpha = d^1
struct Counts {
    int v = 0, e = 0, k = 0, p = 0, g = 0;
};

inline Counts map_counts(const std::vector<int>& sigma, int isolated = 0) {
    const int n = static_cast<int>(sigma.size());
    std::vector<int> face(n);
    for (int d = 0; d < n; ++d) face[d] = sigma[d ^ 1];
    UnionFind uf(n);
    for (int d = 0; d < n; ++d) {
        uf.join(d, sigma[d]);
        uf.join(d, d ^ 1);
    }
    Counts c;
    c.v = cycles_of(sigma) + isolated;
    c.e = n / 2;
    c.p = cycles_of(face) + isolated;
    c.k = (n ? uf.classes() : 0) + isolated;
    c.g = (2 * c.k - c.v + c.e - c.p) / 2;
    return c;
}

using Pd = std::vector<std::array<int, 4>>;

inline int max_label(const Pd& pd) {
    int m = 0;
    for (const auto& x : pd)
        for (int l : x) m = std::max(m, l);
    return m;
}

// State circles: an A-splice at X(a,b,c,d) joins a-b and c-d, a B-splice
// joins b-c and d-a.
inline int state_circles(const Pd& pd, const std::string& state) {
    UnionFind uf(max_label(pd) + 1);
    for (size_t i = 0; i < pd.size(); ++i) {
        const auto& x = pd[i];
        if (state[i] == 'A') {
            uf.join(x[0], x[1]);
            uf.join(x[2], x[3]);
        } else {
            uf.join(x[1], x[2]);
            uf.join(x[3], x[0]);
        }
    }
    return uf.classes() - 1;  // label 0 is unused
}

inline int link_components(const Pd& pd) {
    UnionFind uf(max_label(pd) + 1);
    for (const auto& x : pd) {
        uf.join(x[0], x[2]);
        uf.join(x[1], x[3]);
    }
    return uf.classes() - 1;
}

// Genus of the state ribbon graph of a connected diagram: its vertices are the
// circles of s and its boundary components the circles of the opposite state.
inline int state_genus(const Pd& pd, const std::string& state) {
    std::string other = state;
    for (char& ch : other) ch = ch == 'A' ? 'B' : 'A';
    const int v = state_circles(pd, state);
    const int p = state_circles(pd, other);
    return (2 - v + static_cast<int>(pd.size()) - p) / 2;
}

// Seifert state read off the PD labels: A where the over-strand runs from
// position 3 to position 1.  Labels along a component are consecutive.
inline std::string oriented_state(const Pd& pd) {
    const int m = max_label(pd);
    UnionFind uf(m + 1);
    for (const auto& x : pd) {
        uf.join(x[0], x[2]);
        uf.join(x[1], x[3]);
    }
    std::vector<int> lo(m + 1, m + 1), hi(m + 1, 0);
    for (int l = 1; l <= m; ++l) {
        lo[uf.find(l)] = std::min(lo[uf.find(l)], l);
        hi[uf.find(l)] = std::max(hi[uf.find(l)], l);
    }
    auto succ = [&](int l) { return l == hi[uf.find(l)] ? lo[uf.find(l)] : l + 1; };
    // +1: label ends at this position, -1: starts here, 0: unknown
    auto end_at = [&](size_t c, int pos) {
        const int l = pd[c][pos];
        for (size_t o = 0; o < pd.size(); ++o)
            for (int q = 0; q < 4; ++q) {
                if ((o == c && q == pos) || pd[o][q] != l) continue;
                if (q == 0) return -1;
                if (q == 2) return 1;
            }
        return 0;
    };
    std::string out;
    for (size_t c = 0; c < pd.size(); ++c) {
        int e3 = end_at(c, 3), e1 = end_at(c, 1);
        bool from3;
        if (e3 != 0) from3 = e3 > 0;
        else if (e1 != 0) from3 = e1 < 0;
        else from3 = pd[c][1] == succ(pd[c][3]);
        out.push_back(from3 ? 'A' : 'B');
    }
    return out;
}

}  // namespace oracle

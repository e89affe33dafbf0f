#include "linkgraph/link_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace linkgraph {

LinkDiagram::LinkDiagram(int num_crossings, std::vector<int> arc_of_dart,
                         std::vector<std::array<Dart, 2>> arc_ends)
    : n_(num_crossings), arc_of_(std::move(arc_of_dart)), ends_(std::move(arc_ends)) {
    if (n_ < 1) throw Error("ArcCount", "a diagram needs at least one crossing");
    if (static_cast<int>(arc_of_.size()) != 4 * n_ || static_cast<int>(ends_.size()) != 2 * n_)
        throw Error("ArcCount", "expected " + std::to_string(2 * n_) + " arcs");
    std::vector<int> uses(ends_.size(), 0);
    for (Dart d = 0; d < 4 * n_; ++d) {
        int a = arc_of_[d];
        if (a < 0 || a >= num_arcs()) throw Error("ArcCount", "arc id out of range");
        ++uses[a];
        if (ends_[a][0] != d && ends_[a][1] != d) throw Error("ArcCount", "arc ends disagree with darts");
    }
    for (int u : uses)
        if (u != 2) throw Error("ArcCount", "every arc must meet exactly two crossing positions");
    for (int c = 0; c < n_; ++c) {
        bool ok = incoming(4 * c) && !incoming(4 * c + 2) && incoming(4 * c + 1) != incoming(4 * c + 3);
        if (!ok) throw Error("BadOrientation", "crossing " + std::to_string(c + 1) + " is not oriented consistently");
    }

    // connectivity of the underlying 4-valent map
    std::vector<int> parent(4 * n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int groups = 4 * n_;
    auto unite = [&](int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[a] = b, --groups;
    };
    for (Dart d = 0; d < 4 * n_; ++d) {
        unite(d, rotate(d));
        unite(d, opposite(d));
    }
    if (groups != 1) throw Error("Disconnected", "the diagram is not connected");

    faces_.index.assign(4 * n_, -1);
    for (Dart d = 0; d < 4 * n_; ++d) {
        if (faces_.index[d] >= 0) continue;
        std::vector<Dart> cyc;
        Dart x = d;
        do {
            faces_.index[x] = static_cast<int>(faces_.cycles.size());
            cyc.push_back(x);
            x = rotate(opposite(x));
        } while (x != d);
        faces_.cycles.push_back(std::move(cyc));
    }
    if (n_ - 2 * n_ + num_faces() != 2)
        throw Error("NonPlanar", "Euler characteristic " + std::to_string(num_faces() - n_) + " instead of 2");

    component_of_.assign(num_arcs(), -1);
    for (int a = 0; a < num_arcs(); ++a) {
        if (component_of_[a] >= 0) continue;
        std::vector<int> comp;
        int x = a;
        do {
            component_of_[x] = static_cast<int>(components_.size());
            comp.push_back(x);
            Dart h = head(x);
            x = arc_of_[(h & ~3) | ((h + 2) & 3)];
        } while (x != a);
        components_.push_back(std::move(comp));
    }
}

std::vector<std::array<int, 4>> LinkDiagram::to_pd() const {
    std::vector<int> label(num_arcs(), 0);
    int next = 1;
    for (auto& comp : components_)
        for (int a : comp) label[a] = next++;
    std::vector<std::array<int, 4>> pd(n_);
    for (int c = 0; c < n_; ++c)
        for (int p = 0; p < 4; ++p) pd[c][p] = label[arc_of_[4 * c + p]];
    return pd;
}

std::string LinkDiagram::to_pd_text() const {
    std::ostringstream os;
    auto pd = to_pd();
    for (size_t c = 0; c < pd.size(); ++c) {
        os << (c ? " " : "") << "X(" << pd[c][0] << ',' << pd[c][1] << ',' << pd[c][2] << ',' << pd[c][3] << ')';
    }
    return os.str();
}

LinkDiagram parse_pd(const std::string& text) {
    std::vector<std::array<int, 4>> pd;
    size_t i = 0;
    const size_t n = text.size();
    auto fail = [&](const std::string& why) -> Error {
        return Error("ParseError", why + " at offset " + std::to_string(i));
    };
    while (i < n) {
        char ch = text[i];
        if (ch == '#') {
            while (i < n && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']') {
            ++i;
        } else if (text.compare(i, 2, "PD") == 0) {
            i += 2;
        } else if (ch == 'X') {
            ++i;
            while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= n || (text[i] != '(' && text[i] != '[')) throw fail("expected '(' after X");
            char close = text[i] == '(' ? ')' : ']';
            ++i;
            std::vector<int> vals;
            while (true) {
                while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
                if (i >= n) throw fail("unterminated crossing");
                if (text[i] == close) {
                    ++i;
                    break;
                }
                if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("expected an arc label");
                long v = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    v = v * 10 + (text[i] - '0');
                    if (v > 1000000) throw fail("arc label too large");
                    ++i;
                }
                vals.push_back(static_cast<int>(v));
            }
            if (vals.size() != 4) throw fail("a crossing needs four arc labels");
            pd.push_back({vals[0], vals[1], vals[2], vals[3]});
        } else {
            throw fail(std::string("unexpected character '") + ch + "'");
        }
    }
    if (pd.empty()) throw Error("ParseError", "no crossings found");
    return diagram_from_pd(pd);
}

LinkDiagram diagram_from_pd(const std::vector<std::array<int, 4>>& pd) {
    const int n = static_cast<int>(pd.size());
    if (n == 0) throw Error("ArcCount", "no crossings");
    std::vector<int> count(2 * n + 1, 0);
    std::vector<int> arc_of(4 * n);
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) {
            int l = pd[c][p];
            if (l < 1 || l > 2 * n)
                throw Error("ArcCount", "label " + std::to_string(l) + " outside 1.." + std::to_string(2 * n));
            ++count[l];
            arc_of[4 * c + p] = l - 1;
        }
    std::vector<std::array<Dart, 2>> darts(2 * n, {-1, -1});
    for (int l = 1; l <= 2 * n; ++l)
        if (count[l] != 2)
            throw Error("ArcCount", "label " + std::to_string(l) + " occurs " + std::to_string(count[l]) + " times");
    for (Dart d = 0; d < 4 * n; ++d) {
        auto& e = darts[arc_of[d]];
        (e[0] < 0 ? e[0] : e[1]) = d;
    }
    auto other = [&](Dart d) { return darts[arc_of[d]][0] == d ? darts[arc_of[d]][1] : darts[arc_of[d]][0]; };
    auto straight = [](Dart d) { return (d & ~3) | ((d + 2) & 3); };

    // connectivity and planarity first so that orientation errors are meaningful
    {
        std::vector<std::array<Dart, 2>> ends(2 * n);
        for (int a = 0; a < 2 * n; ++a) ends[a] = darts[a];
        std::vector<int> seen(4 * n, 0);
        std::queue<Dart> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            Dart d = q.front();
            q.pop();
            for (Dart x : {LinkDiagram::rotate(d), other(d)})
                if (!seen[x]) seen[x] = 1, ++reached, q.push(x);
        }
        if (reached != 4 * n) throw Error("Disconnected", "the diagram is not connected");
        std::vector<int> fidx(4 * n, -1);
        int f = 0;
        for (Dart d = 0; d < 4 * n; ++d) {
            if (fidx[d] >= 0) continue;
            Dart x = d;
            do {
                fidx[x] = f;
                x = LinkDiagram::rotate(other(x));
            } while (x != d);
            ++f;
        }
        if (f - n != 2) throw Error("NonPlanar", "Euler characteristic " + std::to_string(f - n) + " instead of 2");
    }

    // trace strands; each step walks an arc from one dart to the other, then
    // passes straight through the crossing
    std::vector<std::array<Dart, 2>> ends(2 * n, {-1, -1});
    std::vector<char> done(2 * n, 0);
    for (int start = 0; start < 2 * n; ++start) {
        if (done[start]) continue;
        std::vector<std::pair<Dart, Dart>> walk;  // (from, to) per arc
        Dart from = darts[start][0];
        do {
            Dart to = other(from);
            walk.push_back({from, to});
            done[arc_of[from]] = 1;
            from = straight(to);
        } while (arc_of[from] != start || from != darts[start][0]);
        int forward = 0, backward = 0;
        for (auto [f, t] : walk) {
            int pos = t & 3;
            if (pos == 0) ++forward;
            if (pos == 2) ++backward;
        }
        if (forward && backward)
            throw Error("BadOrientation", "arc " + std::to_string(start + 1) + " passes under in both directions");
        bool reverse;
        if (forward || backward) {
            reverse = backward > 0;
        } else {
            // never passes under: orientation follows the numbering; ties go
            // to the reading that enters the first crossing at position 1
            auto increasing = [&](bool rev) {
                const int k = static_cast<int>(walk.size());
                int breaks = 0;
                for (int i = 0; i < k; ++i) {
                    int a = arc_of[walk[i].first], b = arc_of[walk[(i + 1) % k].first];
                    if (rev) std::swap(a, b);
                    if (b != a + 1) ++breaks;
                }
                return breaks <= 1;
            };
            bool fwd = increasing(false), bwd = increasing(true);
            if (fwd && bwd) {
                Dart first = walk[0].second;
                for (auto [f, t] : walk) first = std::min({first, f, t});
                bool enters_here = false;
                for (auto [f, t] : walk)
                    if (t == first) enters_here = true;
                reverse = (first & 3) == 1 ? !enters_here : enters_here;
            } else {
                reverse = !fwd;
            }
        }
        for (auto [f, t] : walk) ends[arc_of[f]] = reverse ? std::array<Dart, 2>{t, f} : std::array<Dart, 2>{f, t};
        // numbering must increase along the orientation with one wraparound
        const int k = static_cast<int>(walk.size());
        int breaks = 0;
        for (int i = 0; i < k; ++i) {
            int a = arc_of[walk[i].first], b = arc_of[walk[(i + 1) % k].first];
            if (reverse) std::swap(a, b);
            if (b != a + 1) ++breaks;
        }
        if (breaks > 1)
            throw Error("BadOrientation", "arc labels do not increase along the component through arc " +
                                              std::to_string(start + 1));
    }
    return LinkDiagram(n, std::move(arc_of), std::move(ends));
}

LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<bool>& which) {
    const int n = d.num_crossings();
    auto flipped = [&](int arc) { return which.at(d.component_of_arc(arc)); };
    // crossings whose under-strand reverses get their positions rotated by two
    std::vector<int> shift(n, 0);
    for (int c = 0; c < n; ++c) shift[c] = flipped(d.arc_at(4 * c)) ? 2 : 0;
    auto moved = [&](Dart x) { return (x & ~3) | ((x + shift[x >> 2]) & 3); };
    std::vector<int> arc_of(4 * n);
    for (Dart x = 0; x < 4 * n; ++x) arc_of[moved(x)] = d.arc_at(x);
    std::vector<std::array<Dart, 2>> ends(d.num_arcs());
    for (int a = 0; a < d.num_arcs(); ++a) {
        Dart t = moved(d.tail(a)), h = moved(d.head(a));
        ends[a] = flipped(a) ? std::array<Dart, 2>{h, t} : std::array<Dart, 2>{t, h};
    }
    return LinkDiagram(n, std::move(arc_of), std::move(ends));
}

CheckerboardColoring CheckerboardColoring::swapped() const {
    CheckerboardColoring o = *this;
    for (auto& b : o.black) b = !b;
    return o;
}

int CheckerboardColoring::num_black() const {
    return static_cast<int>(std::count(black.begin(), black.end(), 1));
}

std::pair<CheckerboardColoring, CheckerboardColoring> checkerboard(const LinkDiagram& d) {
    const int f = d.num_faces();
    std::vector<std::vector<int>> adj(f);
    for (int a = 0; a < d.num_arcs(); ++a) {
        adj[d.left_face(a)].push_back(d.right_face(a));
        adj[d.right_face(a)].push_back(d.left_face(a));
    }
    std::vector<int> col(f, -1);
    int root = d.left_face(0);
    col[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x]) {
            if (col[y] < 0) {
                col[y] = col[x] ^ 1;
                q.push(y);
            } else if (col[y] == col[x]) {
                throw Error("NonPlanar", "regions admit no checkerboard coloring");
            }
        }
    }
    CheckerboardColoring c;
    c.black.assign(col.begin(), col.end());
    return {c, c.swapped()};
}

std::vector<CrossingSign> crossing_signs(const LinkDiagram& d, const CheckerboardColoring& col) {
    std::vector<CrossingSign> out;
    for (int c = 0; c < d.num_crossings(); ++c) {
        Sign m = col.black[d.corner_face(c, 1)] ? Sign::Plus : Sign::Minus;
        Sign s = d.over_from_3(c) ? Sign::Plus : Sign::Minus;
        out.push_back({m, s});
    }
    return out;
}

}  // namespace linkgraph

#include "linkgraph/seifert.hpp"

#include <numeric>

namespace linkgraph {

namespace {

// Slots at the crossing placed on T-edge e, counterclockwise, in the frame
// where the tail u is west, the head v east, the left face north.
enum Slot { NE = 0, NW = 1, SW = 2, SE = 3 };

// corner after dart d (counterclockwise) and corner before it
int slot_after(Dart d) { return (d & 1) ? SE : NW; }
int slot_before(Dart d) { return (d & 1) ? NE : SW; }

// Strand directions with bit 0: c-edges flow u -> v, d-edges flow from the
// right face to the left face.  Bit 1 reverses both strands.
bool incoming0(CdLabel l, int slot) {
    if (l == CdLabel::C) return slot == NW || slot == SW;
    return slot == SW || slot == SE;
}

struct ParityUnion {
    std::vector<int> parent, parity;
    explicit ParityUnion(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    std::pair<int, int> find(int x) {
        int p = 0;
        while (parent[x] != x) {
            p ^= parity[x];
            x = parent[x];
        }
        return {x, p};
    }
    bool relate(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        // the smaller id stays root so that it keeps bit 0
        if (ra < rb) std::swap(ra, rb), std::swap(pa, pb);
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ rel;
        return true;
    }
};

}  // namespace

Reconstruction reconstruct_link(const CombinatorialMap& t, const std::vector<CdLabel>& labels) {
    MapCounts mc = counts(t);
    if (mc.e == 0 || mc.k != 1 || mc.g != 0 || t.isolated_vertices() != 0)
        throw Error("NotPlane", "expected a connected plane map with edges");
    if (!t.weighted()) throw Error("NotPlane", "Tait signs are required");
    Admissibility adm = admissibility(t, labels);
    if (!adm.admissible()) throw NotEulerian(adm.odd_tait, adm.odd_dual);

    const int n = t.num_edges();
    // medial arc i runs around the corner after dart i
    struct End {
        int crossing, slot;
    };
    std::vector<std::array<End, 2>> arcs(2 * n);
    for (Dart d = 0; d < 2 * n; ++d) {
        Dart s = t.sigma(d);
        arcs[d] = {End{CombinatorialMap::edge_of(d), slot_after(d)}, End{CombinatorialMap::edge_of(s), slot_before(s)}};
    }

    // one bit per crossing: flip the canonical flow or not; every arc needs one
    // outgoing and one incoming end
    ParityUnion pu(n);
    for (auto& a : arcs) {
        int rel = 1 ^ incoming0(labels[a[0].crossing], a[0].slot) ^ incoming0(labels[a[1].crossing], a[1].slot);
        if (!pu.relate(a[0].crossing, a[1].crossing, rel))
            throw Error("Internal", "strand orientations are inconsistent on an admissible labeling");
    }
    std::vector<int> bit(n);
    for (int c = 0; c < n; ++c) bit[c] = pu.find(c).second;
    auto incoming = [&](const End& x) { return incoming0(labels[x.crossing], x.slot) != (bit[x.crossing] == 1); };

    // over-strand NW-SE realizes m=+, NE-SW realizes m=-; the under-strand's
    // incoming slot becomes position 0
    std::vector<int> first_slot(n);
    for (int c = 0; c < n; ++c) {
        bool plus = t.weight(c).tait == Sign::Plus;
        int a = plus ? NE : NW, b = plus ? SW : SE;
        first_slot[c] = incoming(End{c, a}) ? a : b;
    }
    auto dart_of = [&](const End& x) { return 4 * x.crossing + ((x.slot - first_slot[x.crossing] + 4) & 3); };
    std::vector<int> arc_of(4 * n, -1);
    std::vector<std::array<Dart, 2>> ends(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        Dart p = dart_of(arcs[i][0]), q = dart_of(arcs[i][1]);
        arc_of[p] = arc_of[q] = i;
        ends[i] = incoming(arcs[i][0]) ? std::array<Dart, 2>{q, p} : std::array<Dart, 2>{p, q};
    }
    LinkDiagram d(n, std::move(arc_of), std::move(ends));

    CheckerboardColoring col;
    col.black.assign(d.num_faces(), 0);
    for (int c = 0; c < n; ++c) {
        // west corner (NW..SW) holds the tail, east corner (SE..NE) the head
        col.black[d.corner_face(c, (NW - first_slot[c] + 4) & 3)] = 1;
        col.black[d.corner_face(c, (SE - first_slot[c] + 4) & 3)] = 1;
    }
    for (int a = 0; a < d.num_arcs(); ++a)
        if (col.black[d.left_face(a)] == col.black[d.right_face(a)])
            throw Error("Internal", "reconstructed coloring is not proper");
    return {std::move(d), std::move(col)};
}

}  // namespace linkgraph

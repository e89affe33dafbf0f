#pragma once

#include <set>
#include <vector>

#include "linkgraph/types.hpp"

namespace linkgraph {

struct Orbits {
    std::vector<std::vector<Dart>> cycles;  // each starts at its least dart; sorted by that dart
    std::vector<int> index;                 // dart -> cycle
};

struct MapCounts {
    int v = 0, e = 0, k = 0, p = 0;
    std::vector<int> genus;  // per component, components ordered by least dart, isolated vertices last
    int g = 0;
};

// Orientable ribbon graph as a pair of dart permutations.  Darts are 0-based
// internally and alpha is always the fixed pairing d <-> d^1, so edge i owns
// darts 2i and 2i+1.  Isolated vertices cannot be expressed by darts and are
// kept as a count.
class CombinatorialMap {
public:
    CombinatorialMap() = default;
    explicit CombinatorialMap(std::vector<Dart> sigma, int isolated_vertices = 0,
                              std::vector<Weight> weights = {});

    // General entry point with an arbitrary fixed-point-free alpha.  Edges are
    // renumbered by least dart and the darts of each edge become (2i, 2i+1).
    static CombinatorialMap from_permutations(const std::vector<Dart>& sigma,
                                              const std::vector<Dart>& alpha,
                                              int isolated_vertices = 0,
                                              std::vector<Weight> weights = {});

    int num_darts() const { return static_cast<int>(sigma_.size()); }
    int num_edges() const { return num_darts() / 2; }
    int isolated_vertices() const { return isolated_; }

    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
    static Dart alpha(Dart d) { return d ^ 1; }
    static EdgeId edge_of(Dart d) { return d >> 1; }
    Dart phi(Dart d) const { return sigma_[alpha(d)]; }  // face permutation sigma.alpha

    const std::vector<Dart>& sigma_perm() const { return sigma_; }

    bool weighted() const { return !weights_.empty(); }
    const std::vector<Weight>& weights() const { return weights_; }
    const Weight& weight(EdgeId e) const { return weights_.at(e); }
    CombinatorialMap with_weights(std::vector<Weight> w) const;

    Orbits vertices() const;
    Orbits faces() const;
    // connected components over darts (isolated vertices not included)
    Orbits components() const;

    bool operator==(const CombinatorialMap&) const = default;

private:
    std::vector<Dart> sigma_;
    std::vector<Dart> sigma_inv_;
    int isolated_ = 0;
    std::vector<Weight> weights_;
};

MapCounts counts(const CombinatorialMap& g);

CombinatorialMap dual(const CombinatorialMap& g);
CombinatorialMap delete_edges(const CombinatorialMap& g, const std::set<EdgeId>& s);
CombinatorialMap partial_dual(const CombinatorialMap& g, const std::set<EdgeId>& a);
// orientation reversal of every component
CombinatorialMap mirror(const CombinatorialMap& g);

std::set<EdgeId> all_edges(const CombinatorialMap& g);
std::set<EdgeId> complement(const CombinatorialMap& g, const std::set<EdgeId>& a);

// Same ribbon graph with the same edge labels, each component read in either
// orientation.  Weights must agree as well.
bool ribbon_equal(const CombinatorialMap& g, const CombinatorialMap& h);
// Same, but orientation must be preserved.
bool ribbon_equal_oriented(const CombinatorialMap& g, const CombinatorialMap& h);

// Canonical code of the map up to relabeling of darts and edges.
// with_weights folds the edge weights into the code; allow_mirror also
// accepts orientation reversal per component.
std::vector<int> map_code(const CombinatorialMap& g, bool with_weights, bool allow_mirror);
bool map_isomorphic(const CombinatorialMap& g, const CombinatorialMap& h, bool with_weights,
                    bool allow_mirror = false);

}  // namespace linkgraph

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "linkgraph/generators.hpp"
#include "linkgraph/parallels.hpp"

namespace linkgraph {

struct SweepResult {
    int cases = 0;
    int failures = 0;
    std::string first_failure;  // of the lowest-numbered failing case
    bool pass() const { return cases > 0 && failures == 0; }
};

// Each check returns true on success and may explain a failure in *why.
template <class T, class Check>
SweepResult sweep_serial(const std::vector<T>& items, Check check) {
    SweepResult res;
    res.cases = static_cast<int>(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
        std::string why;
        if (check(items[i], &why)) continue;
        if (res.failures++ == 0) res.first_failure = "case " + std::to_string(i) + ": " + why;
    }
    return res;
}

template <class T, class Check>
SweepResult sweep(const std::vector<T>& items, Check check) {
    const long n = static_cast<long>(items.size());
    std::vector<char> ok(n, 1);
    std::vector<std::string> why(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) ok[i] = check(items[i], &why[i]) ? 1 : 0;
    SweepResult res;
    res.cases = static_cast<int>(n);
    for (long i = 0; i < n; ++i) {
        if (ok[i]) continue;
        if (res.failures++ == 0) res.first_failure = "case " + std::to_string(i) + ": " + why[i];
    }
    return res;
}

struct MapCase {
    CombinatorialMap g;
    std::set<EdgeId> a, b;
};
std::vector<MapCase> random_map_cases(std::uint64_t seed, int count, int max_edges);
// partial duality items 1-5 and the genus formula (item 6)
bool check_partial_dual_axioms(const MapCase& c, std::string* why);

struct StateCase {
    LinkDiagram d;
    CheckerboardColoring col;
    SpliceState s;
};
// every state of every diagram, both colorings
std::vector<StateCase> all_state_cases(const std::vector<LinkDiagram>& ds);
bool check_state_partial_dual(const StateCase& c, std::string* why);
// all-A, all-B and Seifert graphs against T^{+}, T^{-}, T^{(+,+),(-,-)}
bool check_named_state_graphs(const LinkDiagram& d, std::string* why);

struct ReconstructionCase {
    CombinatorialMap t;
    std::vector<CdLabel> labels;
};
// every connected plane map with up to max_edges edges, two sign patterns,
// every labeling
std::vector<ReconstructionCase> reconstruction_cases(int max_edges);
// admissible labels must round-trip; the rest must raise NotEulerian
bool check_reconstruction(const ReconstructionCase& c, std::string* why);

// every orientation class: all Seifert checks on both colorings, and the
// number of distinct labelings
bool check_seifert_diagram(const LinkDiagram& d, std::string* why);

bool check_region_dual(const MapCase& c, std::string* why);
std::vector<MapCase> random_plane_cases(std::uint64_t seed, int count, int max_edges);

}  // namespace linkgraph

#pragma once

#include <map>
#include <vector>

#include "linkgraph/combinatorial_map.hpp"

namespace linkgraph {

enum class ArrowDir : std::uint8_t { Along, Against };

struct Arrow {
    int label = 0;
    ArrowDir dir = ArrowDir::Along;
    bool operator==(const Arrow&) const = default;
};

struct ArrowPresentation {
    std::vector<std::vector<Arrow>> cycles;  // an empty cycle is a bare vertex
    std::map<int, Weight> label_weights;
};

ArrowPresentation to_arrow_presentation(const CombinatorialMap& g);
// Edge i of the result is the i-th smallest label.
CombinatorialMap from_arrow_presentation(const ArrowPresentation& ap);

struct CanonicalPresentation {
    std::vector<std::vector<int>> cycles;  // all arrows normalized to Along
    std::map<int, Weight> label_weights;
    bool operator==(const CanonicalPresentation&) const = default;
    auto operator<=>(const CanonicalPresentation& o) const { return cycles <=> o.cycles; }
};

// allow_mirror: each connected component may be read with all cycles reversed.
CanonicalPresentation canonical(const ArrowPresentation& ap, bool allow_mirror = true);

}  // namespace linkgraph

#pragma once

#include <string>
#include <vector>

#include "linkgraph/link_diagram.hpp"

namespace linkgraph {

struct CatalogEntry {
    std::string name;
    std::string pd;
    bool alternating;
};

// kink, hopf, trefoil, figure-eight and a 7-crossing non-alternating knot
const std::vector<CatalogEntry>& catalog();
LinkDiagram catalog_diagram(const std::string& name);

}  // namespace linkgraph

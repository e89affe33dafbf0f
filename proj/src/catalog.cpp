#include "linkgraph/catalog.hpp"

namespace linkgraph {

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"kink", "X(1,2,2,1)", true},
        {"hopf", "X(1,4,2,3) X(3,2,4,1)", true},
        {"trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", true},
        {"figure-eight", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)", true},
        {"nonalt7", "X(1,10,2,11) X(8,4,9,3) X(4,12,5,11) X(14,8,1,7) X(5,12,6,13) X(6,14,7,13) X(9,2,10,3)", false},
    };
    return entries;
}

LinkDiagram catalog_diagram(const std::string& name) {
    for (auto& e : catalog())
        if (e.name == name) return parse_pd(e.pd);
    throw Error("UnknownName", "no catalog diagram named " + name);
}

}  // namespace linkgraph

#pragma once

#include <string>
#include <vector>

#include "linkgraph/json_io.hpp"
#include "linkgraph/parallels.hpp"

namespace linkgraph {

enum class Format { Json, Dot, Csv, Text };

Format parse_format(const std::string& s);

// A command result: the rendered text and whether every check inside passed.
struct Rendered {
    std::string text;
    bool pass = true;
};

struct InvariantRow {
    std::string graph;
    int v = 0, e = 0, k = 0, p = 0, g = 0;
};

// Tait graphs of both colorings, all-A, all-B and Seifert state graphs, and
// the surface produced by Seifert's algorithm
std::vector<InvariantRow> invariant_rows(const LinkDiagram& d);

Rendered render_invariants(const LinkDiagram& d, Format f);
Rendered render_seifert_check(const LinkDiagram& d, Format f);
Rendered render_reconstruction(const LabeledGraph& g, Format f);
Rendered render_parallel(const LinkDiagram& d, int r, const SpliceState& s, Format f);

Json seifert_check_json(const LinkDiagram& d);
Json genus_report_json(const GenusReport& rep);

}  // namespace linkgraph

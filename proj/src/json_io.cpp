#include "linkgraph/json_io.hpp"

namespace linkgraph {

namespace {

Sign parse_sign(const Json& j, const char* field) {
    if (!j.is_string()) throw Error("ParseError", std::string(field) + " must be \"+\" or \"-\"");
    auto s = j.get<std::string>();
    if (s == "+") return Sign::Plus;
    if (s == "-") return Sign::Minus;
    throw Error("ParseError", std::string(field) + " must be \"+\" or \"-\", got \"" + s + "\"");
}

CdLabel parse_cd(const Json& j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "c") return CdLabel::C;
        if (s == "d") return CdLabel::D;
    }
    throw Error("ParseError", "cd label must be \"c\" or \"d\"");
}

std::vector<Dart> parse_perm(const Json& j, const char* field) {
    if (!j.is_array()) throw Error("ParseError", std::string(field) + " must be an array");
    std::vector<Dart> out;
    for (auto& x : j) {
        if (!x.is_number_integer()) throw Error("ParseError", std::string(field) + " entries must be integers");
        int v = x.get<int>();
        if (v < 1 || v > static_cast<int>(j.size()))
            throw Error("NotPermutation", std::string(field) + " image " + std::to_string(v) + " out of range");
        out.push_back(v - 1);
    }
    return out;
}

}  // namespace

Json map_to_json(const CombinatorialMap& g) {
    Json j;
    Json sigma = Json::array(), alpha = Json::array();
    for (Dart d = 0; d < g.num_darts(); ++d) {
        sigma.push_back(g.sigma(d) + 1);
        alpha.push_back(CombinatorialMap::alpha(d) + 1);
    }
    j["sigma"] = sigma;
    j["alpha"] = alpha;
    j["isolated_vertices"] = g.isolated_vertices();
    if (g.weighted()) {
        Json ws = Json::array();
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const Weight& w = g.weight(e);
            Json x;
            x["edge"] = e + 1;
            x["tait"] = std::string(1, sign_char(w.tait));
            if (w.oriented) x["oriented"] = std::string(1, sign_char(*w.oriented));
            if (w.cd) x["cd"] = std::string(1, cd_char(*w.cd));
            ws.push_back(x);
        }
        j["weights"] = ws;
    }
    return j;
}

CombinatorialMap map_from_json(const Json& j) {
    if (!j.is_object()) throw Error("ParseError", "map JSON must be an object");
    if (!j.contains("sigma") || !j.contains("alpha")) throw Error("ParseError", "map JSON needs sigma and alpha");
    std::vector<Dart> sigma = parse_perm(j["sigma"], "sigma");
    std::vector<Dart> alpha = parse_perm(j["alpha"], "alpha");
    int isolated = 0;
    if (j.contains("isolated_vertices")) {
        if (!j["isolated_vertices"].is_number_integer() || j["isolated_vertices"].get<int>() < 0)
            throw Error("ParseError", "isolated_vertices must be a non-negative integer");
        isolated = j["isolated_vertices"].get<int>();
    }
    std::vector<Weight> weights;
    if (j.contains("weights")) {
        const Json& ws = j["weights"];
        if (!ws.is_array()) throw Error("ParseError", "weights must be an array");
        int e = static_cast<int>(sigma.size()) / 2;
        std::vector<char> seen(e, 0);
        weights.resize(e);
        for (auto& x : ws) {
            if (!x.is_object() || !x.contains("edge") || !x["edge"].is_number_integer() || !x.contains("tait"))
                throw Error("ParseError", "each weight needs an integer edge and a tait sign");
            int k = x["edge"].get<int>();
            if (k < 1 || k > e || seen[k - 1]) throw Error("WeightCoverage", "weight for edge " + std::to_string(k));
            seen[k - 1] = 1;
            Weight& w = weights[k - 1];
            w.tait = parse_sign(x["tait"], "tait");
            if (x.contains("oriented")) w.oriented = parse_sign(x["oriented"], "oriented");
            if (x.contains("cd")) w.cd = parse_cd(x["cd"]);
        }
        for (int k = 0; k < e; ++k)
            if (!seen[k]) throw Error("WeightCoverage", "no weight for edge " + std::to_string(k + 1));
    }
    return CombinatorialMap::from_permutations(sigma, alpha, isolated, std::move(weights));
}

LabeledGraph labeled_graph_from_json(const Json& j) {
    LabeledGraph out;
    out.map = map_from_json(j);
    const int e = out.map.num_edges();
    if (j.contains("cd")) {
        const Json& cd = j["cd"];
        if (!cd.is_array() || static_cast<int>(cd.size()) != e)
            throw Error("ParseError", "cd must list one label per edge");
        for (auto& x : cd) out.labels.push_back(parse_cd(x));
        return out;
    }
    for (EdgeId k = 0; k < e; ++k) {
        if (!out.map.weighted() || !out.map.weight(k).cd)
            throw Error("ParseError", "no cd label for edge " + std::to_string(k + 1));
        out.labels.push_back(*out.map.weight(k).cd);
    }
    return out;
}

Json labeled_graph_to_json(const CombinatorialMap& g, const std::vector<CdLabel>& labels) {
    Json j = map_to_json(g);
    Json cd = Json::array();
    for (auto l : labels) cd.push_back(std::string(1, cd_char(l)));
    j["cd"] = cd;
    return j;
}

Json multigraph_to_json(const AbstractMultigraph& g) {
    Json j;
    j["vertices"] = g.num_vertices;
    Json es = Json::array();
    for (size_t i = 0; i < g.edges.size(); ++i) {
        Json e = Json::array({g.edges[i].first + 1, g.edges[i].second + 1});
        if (!g.labels.empty()) e.push_back(g.labels[i] + 1);
        es.push_back(e);
    }
    j["edges"] = es;
    return j;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("ParseError", e.what());
    }
}

}  // namespace linkgraph

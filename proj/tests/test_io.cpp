#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "linkgraph/catalog.hpp"
#include "linkgraph/generators.hpp"
#include "linkgraph/json_io.hpp"
#include "linkgraph/render.hpp"
#include "linkgraph/seifert.hpp"
#include "linkgraph/states.hpp"

using namespace linkgraph;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LINKGRAPH_CLI) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string source(const std::string& rel) { return std::string(LINKGRAPH_SOURCE_DIR) + "/" + rel; }

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string(LINKGRAPH_BINARY_DIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("map JSON round-trips") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        auto g = random_map(rng, 1 + i % 12, i % 2 == 0);
        auto j = map_to_json(g);
        CHECK(map_from_json(parse_json_text(j.dump())) == g);
    }
}

TEST_CASE("map JSON is 1-indexed and validated") {
    auto j = parse_json_text(R"({"sigma":[2,1],"alpha":[2,1],"isolated_vertices":0})");
    auto g = map_from_json(j);
    CHECK(g.num_edges() == 1);
    CHECK(counts(g).p == 2);

    auto kind = [](const std::string& text) {
        try {
            map_from_json(parse_json_text(text));
        } catch (const Error& e) {
            return e.kind();
        }
        return std::string("none");
    };
    CHECK(kind(R"({"sigma":[1,1],"alpha":[2,1]})") == "NotPermutation");
    CHECK(kind(R"({"sigma":[1,3],"alpha":[2,1]})") == "NotPermutation");
    CHECK(kind(R"({"sigma":[2,1],"alpha":[2,1],"weights":[]})") == "WeightCoverage");
    CHECK(kind("{not json") == "ParseError");
}

TEST_CASE("labeled graph JSON") {
    std::ifstream in(source("data/examples/triangle_c.json"));
    std::stringstream ss;
    ss << in.rdbuf();
    auto lg = labeled_graph_from_json(parse_json_text(ss.str()));
    CHECK(lg.map.num_edges() == 3);
    CHECK(lg.labels == std::vector<CdLabel>(3, CdLabel::C));
    auto back = labeled_graph_from_json(labeled_graph_to_json(lg.map, lg.labels));
    CHECK(back.map == lg.map);
    CHECK(back.labels == lg.labels);
}

TEST_CASE("rendered output is deterministic") {
    for (const auto& e : catalog()) {
        auto d = parse_pd(e.pd);
        for (auto f : {Format::Text, Format::Json, Format::Csv, Format::Dot}) {
            CHECK(render_invariants(d, f).text == render_invariants(d, f).text);
            CHECK(render_seifert_check(d, f).text == render_seifert_check(d, f).text);
        }
        CHECK(render_seifert_check(d, Format::Json).pass);
    }
    CHECK_THROWS_WITH_AS(parse_format("xml"), doctest::Contains("Usage"), Error);
}

TEST_CASE("invariant rows") {
    auto rows = invariant_rows(catalog_diagram("trefoil"));
    bool found = false;
    for (const auto& r : rows)
        if (r.graph == "seifert_surface") {
            found = true;
            CHECK(r.g == 1);
            CHECK(r.p == 1);
        }
    CHECK(found);

    auto kink = invariant_rows(catalog_diagram("kink"));
    std::multiset<std::pair<int, int>> tait;  // (v, p)
    for (const auto& r : kink)
        if (r.graph == "tait_black" || r.graph == "tait_white") tait.insert({r.v, r.p});
    CHECK(tait == std::multiset<std::pair<int, int>>{{1, 2}, {2, 1}});
}

TEST_CASE("seifert-check JSON") {
    auto j = seifert_check_json(catalog_diagram("hopf"));
    CHECK(j["pass"] == true);
    CHECK(j["orientation_classes"]["distinct_labelings"] == 2);
    CHECK(j["orientation_classes"]["expected"] == 2);
}

TEST_CASE("command line exit codes") {
    auto trefoil = source("data/catalog/trefoil.pd");
    auto ok = run_cli("invariants " + trefoil);
    CHECK(ok.code == 0);
    CHECK(ok.out.find("seifert") != std::string::npos);

    auto js = run_cli("seifert-check " + trefoil + " --format json");
    CHECK(js.code == 0);
    auto j = parse_json_text(js.out);
    CHECK(j["pass"] == true);

    auto bad = write_temp("malformed.pd", "X(1,2,3\n");
    CHECK(run_cli("invariants " + bad).code == 2);
    CHECK(run_cli("invariants " + source("data/catalog/no-such-file.pd")).code == 2);
    CHECK(run_cli("parallel " + trefoil + " -r 0").code == 2);
    CHECK(run_cli("invariants " + trefoil + " --format xml").code == 2);

    auto rec = run_cli("reconstruct " + source("data/examples/triangle_c.json") + " --format json");
    CHECK(rec.code == 0);
    auto rj = parse_json_text(rec.out);
    CHECK(rj["tait_equal"] == true);
    CHECK(rj["labels_equal"] == true);
    auto pd = write_temp("reconstructed.pd", rj["diagram"]["pd"].get<std::string>() + "\n");
    CHECK(run_cli("invariants " + pd).code == 0);
    CHECK(run_cli("reconstruct " + source("data/examples/triangle_odd.json")).code == 3);

    auto par = run_cli("parallel " + trefoil + " -r 2 --state AAA --format json");
    CHECK(par.code == 0);
    auto pj = parse_json_text(par.out);
    CHECK(pj["genus"]["selected"] == "iterated");

    auto batch = run_cli("invariants " + trefoil + " " + source("data/catalog/kink.pd"));
    CHECK(batch.code == 0);
    CHECK(batch.out.find("X(1,4,2,5)") < batch.out.find("X(1,2,2,1)"));
}

// Command-line front end.  Exit codes: 0 ok, 1 a verification failed,
// 2 parse or usage error, 3 inadmissible input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "linkgraph/acceptance.hpp"
#include "linkgraph/render.hpp"

using namespace linkgraph;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("Io", "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int exit_code_for(const Error& e) {
    const std::string& k = e.kind();
    if (k == "NotEulerian" || k == "NotPlane") return 3;
    if (k == "Internal") return 1;
    return 2;
}

SpliceState state_by_name(const LinkDiagram& d, const std::string& s) {
    CanonicalStates cs = canonical_states(d, checkerboard(d).first);
    if (s == "allA") return cs.all_a;
    if (s == "allB") return cs.all_b;
    if (s == "seifert") return cs.seifert;
    return parse_state(s, d.num_crossings());
}

// render every file, several at once, and print in the order given
template <class F>
int batch(const std::vector<std::string>& files, F render) {
    const long n = static_cast<long>(files.size());
    std::vector<std::string> out(n), err(n);
    std::vector<int> code(n, 0);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            Rendered r = render(parse_pd(read_file(files[i])));
            out[i] = r.text;
            code[i] = r.pass ? 0 : 1;
        } catch (const Error& e) {
            err[i] = files[i] + ": " + e.what() + "\n";
            code[i] = exit_code_for(e);
        }
    }
    int worst = 0;
    for (long i = 0; i < n; ++i) {
        std::cout << out[i];
        std::cerr << err[i];
        worst = std::max(worst, code[i]);
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ribbon graphs of link diagrams and their parallels"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json, dot, csv or text")
            ->check(CLI::IsMember({"json", "dot", "csv", "text"}));
    };

    std::vector<std::string> files;
    auto* inv = app.add_subcommand("invariants", "v, e, k, p, g of the Tait and state graphs");
    inv->add_option("pd_files", files, "PD files")->required();
    add_format(inv);

    auto* sc = app.add_subcommand("seifert-check", "verify the Seifert graph characterization");
    sc->add_option("pd_files", files, "PD files")->required();
    add_format(sc);

    std::string graph_file;
    auto* rc = app.add_subcommand("reconstruct", "build a link diagram from a cd-labeled plane graph");
    rc->add_option("graph_file", graph_file, "labeled map JSON")->required();
    add_format(rc);

    std::string pd_file, state = "allA";
    int r = 2;
    auto* par = app.add_subcommand("parallel", "counts and genus formulas for r-fold parallels");
    par->add_option("pd_file", pd_file, "PD file")->required();
    par->add_option("-r", r, "number of parallel copies")->check(CLI::PositiveNumber);
    par->add_option("--state", state, "allA, allB, seifert or a string over A/B");
    add_format(par);

    AcceptanceConfig cfg{LINKGRAPH_SOURCE_DIR "/data/catalog", LINKGRAPH_SOURCE_DIR "/tests/golden", {}};
    int only = 0;
    auto* st = app.add_subcommand("selftest", "run every acceptance criterion");
    st->add_option("--catalog", cfg.catalog_dir, "directory of catalog PD files");
    st->add_option("--golden", cfg.golden_dir, "directory of golden outputs");
    st->add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, kNumCriteria));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Format f = parse_format(format);
        if (*inv) return batch(files, [&](const LinkDiagram& d) { return render_invariants(d, f); });
        if (*sc) return batch(files, [&](const LinkDiagram& d) { return render_seifert_check(d, f); });
        if (*rc) {
            Rendered out = render_reconstruction(labeled_graph_from_json(parse_json_text(read_file(graph_file))), f);
            std::cout << out.text;
            return out.pass ? 0 : 1;
        }
        if (*par) {
            LinkDiagram d = parse_pd(read_file(pd_file));
            Rendered out = render_parallel(d, r, state_by_name(d, state), f);
            std::cout << out.text;
            return out.pass ? 0 : 1;
        }
        if (*st) {
            bool all = true;
            for (int id = 1; id <= kNumCriteria; ++id) {
                if (only && id != only) continue;
                CriterionResult res = run_criterion(id, cfg);
                std::cout << format_result(res) << std::endl;
                all = all && res.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const NotEulerian& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}

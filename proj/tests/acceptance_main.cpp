// Runs every acceptance criterion and prints one line per criterion.  The
// golden-file criterion drives the command-line binary as a subprocess.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "linkgraph/acceptance.hpp"

namespace {

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char ch : s) {
        if (ch == '\'') out += "'\\''";
        else out += ch;
    }
    return out + "'";
}

std::string run_cli(const std::vector<std::string>& args) {
    std::string cmd = quote(LINKGRAPH_CLI);
    for (const auto& a : args) cmd += " " + quote(a);
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    linkgraph::AcceptanceConfig cfg;
    cfg.catalog_dir = LINKGRAPH_CATALOG_DIR;
    cfg.golden_dir = LINKGRAPH_GOLDEN_DIR;
    cfg.run = run_cli;

    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
    if (ids.empty())
        for (int i = 1; i <= linkgraph::kNumCriteria; ++i) ids.push_back(i);

    int failed = 0;
    for (int id : ids) {
        auto r = linkgraph::run_criterion(id, cfg);
        std::cout << linkgraph::format_result(r) << std::endl;
        failed += !r.pass;
    }
    std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}

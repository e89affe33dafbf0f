#pragma once

#include <functional>
#include <string>
#include <vector>

namespace linkgraph {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit = 0;  // seconds
};

// Runs a CLI command (arguments after the program name) and returns stdout.
using CommandRunner = std::function<std::string(const std::vector<std::string>&)>;

struct AcceptanceConfig {
    std::string catalog_dir;  // holds <name>.pd for every catalog entry
    std::string golden_dir;   // holds <command>/<name>.<format>
    CommandRunner run;        // empty: render in process
};

constexpr int kNumCriteria = 11;

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg);
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);
std::string format_result(const CriterionResult& r);

// the in-process output of "<command> <file> --format <fmt>" for golden files
std::string golden_output(const std::string& command, const std::string& pd_file, const std::string& format);

}  // namespace linkgraph

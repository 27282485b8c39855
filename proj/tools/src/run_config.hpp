#pragma once

#include <string>
#include <vector>

namespace convdom::cli {

/// Shared configuration for all subcommands. Serializes to JSON; flags given
/// on the command line win over values read from --config.
struct RunConfig {
    std::string command;

    int n = 2;            // dimension
    int degree = 100;     // K, degree cutoff for estimators
    double window = 0.05; // direction window radius eps
    double band = 0.01;   // membership margin delta
    std::string out = "out";
    unsigned seed = 0;

    std::string coeffs_path; // JSONL coefficient table
    std::string family;      // builtin family tag
    std::string domain;      // builtin domain tag or domain JSON path

    int grid = 33;        // per-axis resolution for grids/profiles
    int directions = 32;  // n_max for synthesis / direction samples for analyze
    int precision = 40;   // j_max for synthesis
    int stages = 15;      // k_max for blow-up
    std::vector<double> point;  // blow-up boundary point (moduli)
    std::string polydiscs;      // hull input "r1,r2;r1,r2;..."
    std::string function;      // recover evaluator tag
    std::vector<int> index;     // recover coefficient index K
    int nodes = 256;            // recover nodes per axis M
    std::vector<double> radius; // recover polyradius r
    int rays = 64;              // stardom ray count

    std::string to_json() const;
    static RunConfig from_json(const std::string& text);
};

/// Exit codes: 0 success, 2 input error, 3 numerical failure.
int run(const RunConfig& config);

} // namespace convdom::cli

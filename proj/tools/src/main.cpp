#include "run_config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using convdom::cli::RunConfig;

struct Flags {
    std::string config_path;
    RunConfig values;
    std::string point_csv, index_csv, radius_csv;
};

void add_shared_options(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config_path, "JSON config file; explicit flags win");
    sub->add_option("--n", f.values.n, "dimension N");
    sub->add_option("--degree", f.values.degree, "degree cutoff K");
    sub->add_option("--window", f.values.window, "direction window radius EPS");
    sub->add_option("--band", f.values.band, "membership margin DELTA");
    sub->add_option("--out", f.values.out, "output directory");
    sub->add_option("--seed", f.values.seed, "seed for direction generators");
    sub->add_option("--coeffs", f.values.coeffs_path, "JSONL coefficient file");
    sub->add_option("--family", f.values.family,
                    "coefficient family: geometric|ball|ehalf|entropy:S:W|scaled:RHO|strand:J:RATE");
    sub->add_option("--domain", f.values.domain,
                    "domain: polydisc[:r]|ball|ehalf|halfspace:g:d|FILE.json");
    sub->add_option("--grid", f.values.grid, "per-axis grid resolution");
    sub->add_option("--directions", f.values.directions, "direction count / n_max");
    sub->add_option("--precision", f.values.precision, "rational precision / j_max");
    sub->add_option("--stages", f.values.stages, "blow-up stage count k_max");
    sub->add_option("--point", f.point_csv, "point moduli, comma separated");
    sub->add_option("--polydiscs", f.values.polydiscs, "hull inputs \"r1,r2;r1,r2\"");
    sub->add_option("--function", f.values.function,
                    "recover evaluator: geometric_product|monomial|table");
    sub->add_option("--index", f.index_csv, "coefficient index K, comma separated");
    sub->add_option("--nodes", f.values.nodes, "torus nodes per axis M");
    sub->add_option("--radius", f.radius_csv, "torus polyradius, comma separated");
    sub->add_option("--rays", f.values.rays, "star-domain ray count");
}

template <typename T>
void override_if_set(const CLI::App* sub, const std::string& name, T& target, const T& flag_value) {
    if (sub->count(name) > 0) target = flag_value;
}

std::vector<double> parse_double_csv(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stod(tok));
    return out;
}

std::vector<int> parse_int_csv(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"convergence-domain geometry of multivariate power series"};
    app.require_subcommand(1);

    const std::vector<std::string> commands = {"analyze", "synthesize", "blowup",
                                               "hull",    "recover",    "stardom"};
    std::map<std::string, Flags> flags;
    std::map<std::string, CLI::App*> subs;
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        add_shared_options(sub, flags[name]);
        subs[name] = sub;
    }

    CLI11_PARSE(app, argc, argv);

    for (const auto& name : commands) {
        CLI::App* sub = subs[name];
        if (!sub->parsed()) continue;
        Flags& f = flags[name];

        RunConfig cfg;
        if (!f.config_path.empty()) {
            std::ifstream in(f.config_path);
            if (!in) {
                std::cerr << "input error: cannot open config file " << f.config_path << "\n";
                return 2;
            }
            std::ostringstream ss;
            ss << in.rdbuf();
            try {
                cfg = RunConfig::from_json(ss.str());
            } catch (const std::exception& e) {
                std::cerr << "input error: " << e.what() << "\n";
                return 2;
            }
        }
        cfg.command = name;

        override_if_set(sub, "--n", cfg.n, f.values.n);
        override_if_set(sub, "--degree", cfg.degree, f.values.degree);
        override_if_set(sub, "--window", cfg.window, f.values.window);
        override_if_set(sub, "--band", cfg.band, f.values.band);
        override_if_set(sub, "--out", cfg.out, f.values.out);
        override_if_set(sub, "--seed", cfg.seed, f.values.seed);
        override_if_set(sub, "--coeffs", cfg.coeffs_path, f.values.coeffs_path);
        override_if_set(sub, "--family", cfg.family, f.values.family);
        override_if_set(sub, "--domain", cfg.domain, f.values.domain);
        override_if_set(sub, "--grid", cfg.grid, f.values.grid);
        override_if_set(sub, "--directions", cfg.directions, f.values.directions);
        override_if_set(sub, "--precision", cfg.precision, f.values.precision);
        override_if_set(sub, "--stages", cfg.stages, f.values.stages);
        override_if_set(sub, "--polydiscs", cfg.polydiscs, f.values.polydiscs);
        override_if_set(sub, "--function", cfg.function, f.values.function);
        override_if_set(sub, "--nodes", cfg.nodes, f.values.nodes);
        override_if_set(sub, "--rays", cfg.rays, f.values.rays);
        try {
            if (sub->count("--point") > 0) cfg.point = parse_double_csv(f.point_csv);
            if (sub->count("--index") > 0) cfg.index = parse_int_csv(f.index_csv);
            if (sub->count("--radius") > 0) cfg.radius = parse_double_csv(f.radius_csv);
        } catch (const std::exception&) {
            std::cerr << "input error: malformed numeric list flag\n";
            return 2;
        }

        return convdom::cli::run(cfg);
    }
    return 2;
}

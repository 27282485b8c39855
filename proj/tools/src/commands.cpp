#include "run_config.hpp"
#include "svg.hpp"

#include "convdom/analyze.hpp"
#include "convdom/coefficients.hpp"
#include "convdom/errors.hpp"
#include "convdom/lattice.hpp"
#include "convdom/logconvex.hpp"
#include "convdom/recover.hpp"
#include "convdom/stardom.hpp"
#include "convdom/synthesize.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

namespace convdom::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& t : split(s, ','))
        out.push_back(std::stod(t));
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ','))
        out.push_back(std::stoi(t));
    return out;
}

std::ofstream open_out(const std::filesystem::path& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out)
        throw input_error("cannot write output file: " + (dir / name).string());
    return out;
}

double xlogx(double t) { return t > 0.0 ? t * std::log(t) : 0.0; }

CoefficientOracle oracle_from_config(const RunConfig& cfg) {
    if (!cfg.coeffs_path.empty()) return load_table(cfg.coeffs_path);
    const std::string& tag = cfg.family.empty() ? "geometric" : cfg.family;
    const auto parts = split(tag, ':');
    if (parts[0] == "geometric") return geometric(cfg.n);
    if (parts[0] == "ball") return entropy_ball(cfg.n);
    if (parts[0] == "ehalf") return entropy_e_half(cfg.n);
    if (parts[0] == "entropy") {
        if (parts.size() != 3)
            throw input_error("entropy family tag is entropy:SIGN:WEIGHT");
        return entropy_family(cfg.n, std::stoi(parts[1]), std::stod(parts[2]));
    }
    if (parts[0] == "scaled") {
        if (parts.size() != 2)
            throw input_error("scaled family tag is scaled:RHO");
        return scaled_monomial(cfg.n, std::stod(parts[1]));
    }
    if (parts[0] == "strand") {
        if (parts.size() != 3)
            throw input_error("strand family tag is strand:j1,j2,...:RATE");
        MultiIndex base(parse_ints(parts[1]));
        const double rate = std::stod(parts[2]);
        return strand(base, [rate](int k) { return rate * k; });
    }
    throw input_error("unknown coefficient family: " + tag);
}

ConvexLogDomain builtin_polydisc(const std::vector<double>& r) {
    std::vector<double> lr(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0))
            throw input_error("polyradius entries must be positive");
        lr[i] = std::log(r[i]);
    }
    const int n = static_cast<int>(r.size());
    auto support = [lr](const SimplexDirection& alpha) {
        double acc = 0.0;
        for (int i = 0; i < alpha.dimension(); ++i) acc += alpha[i] * lr[static_cast<std::size_t>(i)];
        return acc;
    };
    auto defining = [lr](const std::vector<double>& s) {
        double worst = -kInf;
        for (std::size_t i = 0; i < s.size(); ++i) worst = std::max(worst, s[i] - lr[i]);
        return worst;
    };
    ConvexLogDomain G(n, support, defining, "finite on all of PS_N");
    std::vector<HalfSpace> hs;
    for (int i = 0; i < n; ++i) {
        std::vector<double> g(static_cast<std::size_t>(n), 0.0);
        g[static_cast<std::size_t>(i)] = 1.0;
        hs.push_back({SimplexDirection(std::move(g)), -lr[static_cast<std::size_t>(i)]});
    }
    G.set_halfspaces(std::move(hs));
    return G;
}

ConvexLogDomain builtin_entropy_domain(int n, double w, const std::string& hint) {
    // log-image of { sum |z_i|^{1/w} < 1 }: support w * sum alpha_i log alpha_i
    auto support = [w](const SimplexDirection& alpha) {
        double acc = 0.0;
        for (int i = 0; i < alpha.dimension(); ++i) acc += xlogx(alpha[i]);
        return w * acc;
    };
    auto defining = [w](const std::vector<double>& s) {
        double acc = 0.0;
        for (double v : s) acc += std::isinf(v) && v < 0 ? 0.0 : std::exp(v / w);
        return w * std::log(acc);
    };
    return ConvexLogDomain(n, support, defining, hint);
}

ConvexLogDomain domain_from_config(const RunConfig& cfg, std::vector<SimplexDirection>* dirs) {
    const std::string& tag = cfg.domain.empty() ? "polydisc" : cfg.domain;
    if (std::filesystem::exists(tag) && tag.size() > 5 &&
        tag.substr(tag.size() - 5) == ".json")
        return load_domain(tag);
    const auto parts = split(tag, ':');
    if (parts[0] == "polydisc") {
        std::vector<double> r(static_cast<std::size_t>(cfg.n), 1.0);
        if (parts.size() > 1) r = parse_doubles(parts[1]);
        return builtin_polydisc(r);
    }
    if (parts[0] == "ball")
        return builtin_entropy_domain(cfg.n, 0.5, "finite on all of PS_N");
    if (parts[0] == "ehalf")
        return builtin_entropy_domain(cfg.n, 2.0, "finite on all of PS_N");
    if (parts[0] == "halfspace") {
        if (parts.size() != 3)
            throw input_error("halfspace domain tag is halfspace:g1,g2,...:OFFSET");
        const auto g = parse_doubles(parts[1]);
        double l1 = 0.0;
        for (double v : g) {
            if (v < 0.0)
                throw input_error("halfspace gradient must be non-negative");
            l1 += v;
        }
        if (!(l1 > 0.0))
            throw input_error("halfspace gradient must be nonzero");
        const double d = std::stod(parts[2]) / l1;
        SimplexDirection alpha0 = SimplexDirection::from_weights(g);
        auto support = [alpha0, d](const SimplexDirection& alpha) {
            return l1_distance(alpha, alpha0) <= 1e-9 ? d : kInf;
        };
        auto defining = [alpha0, d](const std::vector<double>& s) {
            double acc = 0.0;
            for (int i = 0; i < alpha0.dimension(); ++i) {
                if (alpha0[i] == 0.0) continue;
                acc += alpha0[i] * s[static_cast<std::size_t>(i)];
            }
            return acc - d;
        };
        ConvexLogDomain G(static_cast<int>(g.size()), support, defining,
                          "finite at a single direction of PS_N");
        G.set_halfspaces({HalfSpace{alpha0, -d}});
        if (dirs) dirs->push_back(alpha0);
        return G;
    }
    throw input_error("unknown domain: " + tag);
}

std::vector<double> sphere_direction(const SimplexDirection& alpha) {
    double n2 = 0.0;
    for (int i = 0; i < alpha.dimension(); ++i) n2 += alpha[i] * alpha[i];
    const double inv = 1.0 / std::sqrt(n2);
    std::vector<double> v(static_cast<std::size_t>(alpha.dimension()));
    for (int i = 0; i < alpha.dimension(); ++i) v[static_cast<std::size_t>(i)] = alpha[i] * inv;
    return v;
}

int cmd_analyze(const RunConfig& cfg) {
    const auto oracle = oracle_from_config(cfg);
    const int n = oracle.dimension();
    const std::filesystem::path dir(cfg.out);

    // support samples over directions
    std::vector<SimplexDirection> dirs;
    if (n == 2) {
        const int m = std::max(2, cfg.directions);
        for (int i = 0; i < m; ++i) {
            const double t = static_cast<double>(i) / (m - 1);
            dirs.push_back(SimplexDirection({t, 1.0 - t}));
        }
    } else {
        for (int i = 0; i < cfg.directions; ++i)
            dirs.push_back(low_discrepancy_direction(n, cfg.seed, i));
    }
    {
        auto out = open_out(dir, "h_samples.csv");
        for (int i = 0; i < n; ++i) out << "alpha_" << i + 1 << ",";
        out << "h_hat,achieving_J,K,epsilon\n";
        for (const auto& alpha : dirs) {
            const auto est = support_estimate(oracle, alpha, cfg.degree, cfg.window);
            for (int i = 0; i < n; ++i) out << num(alpha[i]) << ",";
            out << num(est.value) << "," << est.achieving_index.to_string() << ","
                << est.degree_cutoff << "," << num(est.window) << "\n";
        }
    }

    // psi on a log-space grid
    {
        auto out = open_out(dir, "psi_grid.csv");
        for (int i = 0; i < n; ++i) out << "s_" << i + 1 << ",";
        out << "psi_hat\n";
        const int m = std::max(2, cfg.grid);
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<double> s(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                s[static_cast<std::size_t>(i)] =
                    -2.0 + 2.5 * static_cast<double>(idx[static_cast<std::size_t>(i)]) / (m - 1);
            const auto est = psi_estimate(oracle, s, cfg.degree);
            for (int i = 0; i < n; ++i) out << num(s[static_cast<std::size_t>(i)]) << ",";
            out << num(est.value) << "\n";
            int d = n - 1;
            while (d >= 0) {
                if (++idx[static_cast<std::size_t>(d)] < m) break;
                idx[static_cast<std::size_t>(d)] = 0;
                --d;
            }
            if (d < 0) break;
        }
    }

    // radial slices and 2D profiles
    std::vector<std::pair<double, double>> abs_profile, log_profile;
    {
        auto out = open_out(dir, "radial_slices.csv");
        for (int i = 0; i < n; ++i) out << "v_" << i + 1 << ",";
        out << "R_hat\n";
        if (n == 2) {
            const int m = std::max(3, 4 * cfg.grid);
            for (int i = 0; i <= m; ++i) {
                const double theta = 0.5 * std::numbers::pi * i / m;
                const std::vector<double> v{std::cos(theta), std::sin(theta)};
                const double R = radial_estimate(oracle, v, cfg.degree);
                out << num(v[0]) << "," << num(v[1]) << "," << num(R) << "\n";
                if (std::isfinite(R)) {
                    const double x = std::min(R, 20.0) * v[0], y = std::min(R, 20.0) * v[1];
                    abs_profile.emplace_back(x, y);
                    if (x > 1e-12 && y > 1e-12)
                        log_profile.emplace_back(std::log(x), std::log(y));
                }
            }
        } else {
            for (const auto& alpha : dirs) {
                const auto v = sphere_direction(alpha);
                const double R = radial_estimate(oracle, v, cfg.degree);
                for (int i = 0; i < n; ++i) out << num(v[static_cast<std::size_t>(i)]) << ",";
                out << num(R) << "\n";
            }
        }
    }
    if (n == 2) {
        SvgPlot abs_plot("absolute profile: " + oracle.name(), "|z_1|", "|z_2|");
        abs_plot.add_curve(abs_profile, "steelblue");
        abs_plot.write((dir / "profile_abs.svg").string());
        SvgPlot log_plot("log profile: " + oracle.name(), "s_1", "s_2");
        log_plot.add_curve(log_profile, "firebrick");
        log_plot.write((dir / "profile_log.svg").string());
    }
    std::cout << "analyze: wrote " << (dir / "h_samples.csv").string() << " and grids\n";
    return 0;
}

int cmd_synthesize(const RunConfig& cfg) {
    std::vector<SimplexDirection> halfspace_dirs;
    ConvexLogDomain G = domain_from_config(cfg, &halfspace_dirs);
    DomainSpec spec = halfspace_dirs.empty()
                          ? DomainSpec::with_generator(G, cfg.seed)
                          : DomainSpec::with_directions(G, halfspace_dirs);
    const auto stream = synthesize_series(spec, cfg.directions, cfg.precision);

    const std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    stream.save_jsonl((dir / "series.jsonl").string());

    auto out = open_out(dir, "roundtrip.csv");
    const int n = G.dimension();
    out << "n,";
    for (int i = 0; i < n; ++i) out << "alpha_" << i + 1 << ",";
    out << "h_spec,h_hat,abs_err\n";
    double max_err = 0.0;
    for (const auto& row : roundtrip_report(spec, stream, cfg.directions, cfg.window)) {
        max_err = std::max(max_err, row.abs_err);
        out << row.n << ",";
        for (int i = 0; i < n; ++i) out << num(row.alpha[i]) << ",";
        out << num(row.h_spec) << "," << num(row.h_hat) << "," << num(row.abs_err) << "\n";
    }
    std::cout << "synthesize: " << stream.terms().size() << " terms, max |h_hat - h| = "
              << num(max_err) << "\n";
    return 0;
}

int cmd_blowup(const RunConfig& cfg) {
    ConvexLogDomain G = domain_from_config(cfg, nullptr);
    if (cfg.point.empty())
        throw input_error("blowup needs --point (boundary moduli)");
    DomainSpec spec = DomainSpec::with_generator(G, cfg.seed);
    const auto result = blowup_series(spec, cfg.point, cfg.stages);

    const std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    result.stream.save_jsonl((dir / "series.jsonl").string());

    auto out = open_out(dir, "stages.csv");
    out << "k,skipped,log_c_k,n_k,J,sup_bound,sampled_sup,log_partial_sum\n";
    for (const auto& st : result.stages) {
        double sampled = 0.0;
        if (!st.skipped) {
            const auto samples = sample_inner_domain(G, st.k, 200, cfg.seed);
            for (const auto& s : samples) {
                double dot = 0.0, dotp = 0.0;
                for (int i = 0; i < st.monomial.dimension(); ++i) {
                    if (st.monomial[i] == 0) continue;
                    dot += static_cast<double>(st.monomial[i]) * s[static_cast<std::size_t>(i)];
                    dotp += static_cast<double>(st.monomial[i]) * st.log_p_k[static_cast<std::size_t>(i)];
                }
                sampled = std::max(
                    sampled, std::exp(st.log_c_k + static_cast<double>(st.power) * (dot - dotp)));
            }
        }
        out << st.k << "," << (st.skipped ? 1 : 0) << "," << num(st.log_c_k) << "," << st.power
            << "," << (st.skipped ? "-" : st.monomial.to_string()) << "," << num(st.sup_bound)
            << "," << num(sampled) << "," << num(st.log_partial_sum) << "\n";
    }
    std::cout << "blowup: " << result.stream.terms().size() << " terms over "
              << result.stages.size() << " stages\n";
    return 0;
}

int cmd_hull(const RunConfig& cfg) {
    if (cfg.polydiscs.empty())
        throw input_error("hull needs --polydiscs \"r1,r2;r1,r2;...\"");
    std::vector<std::vector<double>> radii;
    for (const auto& part : split(cfg.polydiscs, ';'))
        radii.push_back(parse_doubles(part));
    ConvexLogDomain G = log_convex_hull(radii);

    const std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    save_domain(G, (dir / "domain.json").string());

    if (G.dimension() == 2) {
        SvgPlot plot("absolute profiles: inputs and hull", "|z_1|", "|z_2|");
        for (const auto& r : radii) {
            std::vector<std::pair<double, double>> rect{
                {0.0, r[1]}, {r[0], r[1]}, {r[0], 0.0}};
            plot.add_curve(rect, "gray");
        }
        // hull boundary column by column: the largest |z_2| below the boundary
        std::vector<std::pair<double, double>> boundary;
        double rmax = 0.0;
        for (const auto& r : radii) rmax = std::max(rmax, std::max(r[0], r[1]));
        const int m = 200;
        for (int i = 1; i <= m; ++i) {
            const double x = rmax * 1.2 * i / m;
            double lo = 1e-6, hi = rmax * 1.2;
            auto inside = [&](double y) {
                return G.defining({std::log(x), std::log(y)}) < 0.0;
            };
            if (!inside(lo)) continue;
            while (inside(hi)) hi *= 1.5;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                (inside(mid) ? lo : hi) = mid;
            }
            boundary.emplace_back(x, 0.5 * (lo + hi));
        }
        plot.add_curve(boundary, "steelblue");
        plot.write((dir / "hull.svg").string());
    }
    std::cout << "hull: " << G.halfspaces().size() << " half-spaces -> "
              << (dir / "domain.json").string() << "\n";
    return 0;
}

int cmd_recover(const RunConfig& cfg) {
    std::vector<double> r = cfg.radius;
    if (r.empty()) r.assign(static_cast<std::size_t>(cfg.n), 0.5);
    const int n = static_cast<int>(r.size());

    TorusSampler::Evaluator f;
    const auto parts = split(cfg.function.empty() ? "geometric_product" : cfg.function, ':');
    if (parts[0] == "geometric_product") {
        f = [](const std::vector<std::complex<double>>& z) {
            std::complex<double> acc(1.0, 0.0);
            for (const auto& zi : z) acc *= 1.0 / (1.0 - zi);
            return acc;
        };
    } else if (parts[0] == "monomial") {
        if (cfg.index.empty())
            throw input_error("monomial evaluator needs --index");
        const MultiIndex K(cfg.index);
        f = [K](const std::vector<std::complex<double>>& z) {
            std::complex<double> acc(1.0, 0.0);
            for (int i = 0; i < K.dimension(); ++i)
                for (int p = 0; p < K[i]; ++p) acc *= z[static_cast<std::size_t>(i)];
            return acc;
        };
    } else if (parts[0] == "table") {
        if (cfg.coeffs_path.empty())
            throw input_error("table evaluator needs --coeffs");
        const auto oracle = load_table(cfg.coeffs_path);
        const int deg = cfg.degree;
        f = [oracle, deg](const std::vector<std::complex<double>>& z) {
            std::complex<double> acc(0.0, 0.0);
            for (int k = 0; k <= deg; ++k) {
                for (const auto& J : enumerate_by_degree(oracle.dimension(), k)) {
                    const double lc = oracle.log_modulus(J);
                    if (std::isinf(lc)) continue;
                    std::complex<double> mono(1.0, 0.0);
                    for (int i = 0; i < J.dimension(); ++i)
                        for (int p = 0; p < J[i]; ++p) mono *= z[static_cast<std::size_t>(i)];
                    acc += std::exp(lc) * mono;
                }
            }
            return acc;
        };
    } else {
        throw input_error("unknown evaluator: " + parts[0]);
    }

    TorusSampler sampler(f, r, cfg.nodes);
    const std::filesystem::path dir(cfg.out);
    auto out = open_out(dir, "coefficients.csv");
    for (int i = 0; i < n; ++i) out << "k_" << i + 1 << ",";
    out << "re,im,abs,cauchy_rhs,cauchy_ok\n";

    std::vector<MultiIndex> targets;
    if (!cfg.index.empty()) {
        targets.emplace_back(cfg.index);
    } else {
        const int cap = std::min(cfg.degree, 10);
        for (int k = 0; k <= cap; ++k)
            for (auto& J : enumerate_by_degree(n, k)) targets.push_back(std::move(J));
    }
    for (const auto& K : targets) {
        const auto c = recover_coefficient(sampler, K);
        const auto check = cauchy_estimate_check(sampler, K);
        for (int i = 0; i < n; ++i) out << K[i] << ",";
        out << num(c.real()) << "," << num(c.imag()) << "," << num(std::abs(c)) << ","
            << num(check.rhs) << "," << (check.ok ? 1 : 0) << "\n";
    }
    std::cout << "recover: " << targets.size() << " coefficients -> "
              << (dir / "coefficients.csv").string() << "\n";
    return 0;
}

int cmd_stardom(const RunConfig& cfg) {
    const auto parts = split(cfg.domain.empty() ? "ball" : cfg.domain, ':');
    StarDomain d = [&]() -> StarDomain {
        if (parts[0] == "ball") return star_ball(cfg.n);
        if (parts[0] == "polydisc") {
            std::vector<double> r(static_cast<std::size_t>(cfg.n), 1.0);
            if (parts.size() > 1) r = parse_doubles(parts[1]);
            return star_polydisc(r);
        }
        if (parts[0] == "hyperbolic") return star_hyperbolic(cfg.n);
        if (parts[0] == "series") return star_from_series(oracle_from_config(cfg), cfg.degree);
        throw input_error("unknown star domain: " + parts[0]);
    }();

    std::vector<std::vector<double>> rays;
    if (cfg.n == 2) {
        for (int i = 0; i < cfg.rays; ++i) {
            const double theta = 2.0 * std::numbers::pi * (i + 0.5) / cfg.rays;
            rays.push_back({std::cos(theta), std::sin(theta)});
        }
    } else {
        for (int i = 0; i < cfg.rays; ++i)
            rays.push_back(sphere_direction(low_discrepancy_direction(cfg.n, cfg.seed, i)));
    }

    const std::filesystem::path dir(cfg.out);
    auto out = open_out(dir, "rays.csv");
    for (int i = 0; i < cfg.n; ++i) out << "v_" << i + 1 << ",";
    out << "radial,gauge\n";
    for (const auto& v : rays) {
        const double rho = radial(d, v);
        for (int i = 0; i < cfg.n; ++i) out << num(v[static_cast<std::size_t>(i)]) << ",";
        out << num(rho) << "," << num(std::isinf(rho) ? 0.0 : 1.0 / rho) << "\n";
    }
    const auto report = proper_star_check(d, rays);
    std::cout << "stardom: proper=" << (report.proper ? "true" : "false") << " offending="
              << report.offending_rays.size() << "\n";
    return 0;
}

} // namespace

std::string RunConfig::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["n"] = n;
    j["degree"] = degree;
    j["window"] = window;
    j["band"] = band;
    j["out"] = out;
    j["seed"] = seed;
    j["coeffs"] = coeffs_path;
    j["family"] = family;
    j["domain"] = domain;
    j["grid"] = grid;
    j["directions"] = directions;
    j["precision"] = precision;
    j["stages"] = stages;
    j["point"] = point;
    j["polydiscs"] = polydiscs;
    j["function"] = function;
    j["index"] = index;
    j["nodes"] = nodes;
    j["radius"] = radius;
    j["rays"] = rays;
    return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed config JSON: ") + e.what());
    }
    RunConfig c;
    c.command = j.value("command", c.command);
    c.n = j.value("n", c.n);
    c.degree = j.value("degree", c.degree);
    c.window = j.value("window", c.window);
    c.band = j.value("band", c.band);
    c.out = j.value("out", c.out);
    c.seed = j.value("seed", c.seed);
    c.coeffs_path = j.value("coeffs", c.coeffs_path);
    c.family = j.value("family", c.family);
    c.domain = j.value("domain", c.domain);
    c.grid = j.value("grid", c.grid);
    c.directions = j.value("directions", c.directions);
    c.precision = j.value("precision", c.precision);
    c.stages = j.value("stages", c.stages);
    c.point = j.value("point", c.point);
    c.polydiscs = j.value("polydiscs", c.polydiscs);
    c.function = j.value("function", c.function);
    c.index = j.value("index", c.index);
    c.nodes = j.value("nodes", c.nodes);
    c.radius = j.value("radius", c.radius);
    c.rays = j.value("rays", c.rays);
    return c;
}

int run(const RunConfig& config) {
    try {
        if (config.command == "analyze") return cmd_analyze(config);
        if (config.command == "synthesize") return cmd_synthesize(config);
        if (config.command == "blowup") return cmd_blowup(config);
        if (config.command == "hull") return cmd_hull(config);
        if (config.command == "recover") return cmd_recover(config);
        if (config.command == "stardom") return cmd_stardom(config);
        std::cerr << "error: unknown command '" << config.command << "'\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const numeric_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

} // namespace convdom::cli

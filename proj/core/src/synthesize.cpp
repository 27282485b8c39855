#include "convdom/synthesize.hpp"
#include "convdom/analyze.hpp"
#include "convdom/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <random>

namespace convdom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dot_index(const MultiIndex& J, const std::vector<double>& s) {
    double acc = 0.0;
    for (int i = 0; i < J.dimension(); ++i) {
        if (J[i] == 0) continue; // 0 * (-inf) = 0
        acc += static_cast<double>(J[i]) * s[static_cast<std::size_t>(i)];
    }
    return acc;
}

/// Generalized-golden-ratio constants of the R_d additive recurrence.
double harmonious_root(int d) {
    double g = 1.5;
    for (int it = 0; it < 64; ++it) g = std::pow(1.0 + g, 1.0 / (d + 1));
    return g;
}

} // namespace

SimplexDirection low_discrepancy_direction(int dimension, unsigned seed, int index) {
    if (dimension < 1)
        throw input_error("direction generator needs dimension >= 1");
    if (dimension == 1) return SimplexDirection({1.0});
    // R_d sequence: irrational coordinates, so rationalized strands never
    // collapse to small common denominators
    const double g = harmonious_root(dimension - 1);
    const double i =
        static_cast<double>(index) + 1.0 + 101.0 * static_cast<double>(seed);
    std::vector<double> u(static_cast<std::size_t>(dimension - 1));
    double base = 1.0;
    for (int d = 0; d + 1 < dimension; ++d) {
        base /= g;
        u[static_cast<std::size_t>(d)] = std::fmod(0.5 + i * base, 1.0);
    }
    std::sort(u.begin(), u.end());
    std::vector<double> gaps(static_cast<std::size_t>(dimension));
    double prev = 0.0;
    for (int d = 0; d + 1 < dimension; ++d) {
        gaps[static_cast<std::size_t>(d)] = u[static_cast<std::size_t>(d)] - prev;
        prev = u[static_cast<std::size_t>(d)];
    }
    gaps[static_cast<std::size_t>(dimension - 1)] = 1.0 - prev;
    return SimplexDirection::from_weights(gaps);
}

void SeriesTermStream::add_term(SeriesTerm term) {
    if (!std::isfinite(term.log_c))
        throw input_error("series terms need finite log-coefficients");
    for (auto& t : terms_) {
        if (t.J == term.J) {
            if (term.log_c > t.log_c) t = std::move(term);
            return;
        }
    }
    terms_.push_back(std::move(term));
}

bool SeriesTermStream::has_exponent(const MultiIndex& J) const {
    for (const auto& t : terms_)
        if (t.J == J) return true;
    return false;
}

void SeriesTermStream::finalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const SeriesTerm& a, const SeriesTerm& b) { return a.J < b.J; });
}

int SeriesTermStream::dimension() const {
    return terms_.empty() ? 0 : terms_.front().J.dimension();
}

long long SeriesTermStream::max_degree() const {
    long long m = 0;
    for (const auto& t : terms_) m = std::max(m, t.J.degree());
    return m;
}

CoefficientOracle SeriesTermStream::to_oracle(const std::string& name) const {
    if (terms_.empty())
        throw input_error("cannot build an oracle from an empty stream");
    std::map<MultiIndex, double> logs;
    for (const auto& t : terms_) logs.emplace(t.J, t.log_c);
    return tabulated(dimension(), std::move(logs), {}, name);
}

void SeriesTermStream::save_jsonl(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("cannot write series file: " + path);
    for (const auto& t : terms_) {
        nlohmann::json j;
        j["J"] = t.J.entries();
        j["log_c"] = t.log_c;
        out << j.dump() << '\n';
    }
}

DomainSpec DomainSpec::with_directions(ConvexLogDomain domain,
                                       std::vector<SimplexDirection> directions) {
    if (directions.empty())
        throw input_error("domain spec needs at least one direction");
    for (const auto& d : directions)
        if (d.dimension() != domain.dimension())
            throw input_error("direction dimension does not match the domain");
    DomainSpec spec(std::move(domain));
    spec.explicit_dirs_ = std::move(directions);
    return spec;
}

DomainSpec DomainSpec::with_generator(ConvexLogDomain domain, unsigned seed) {
    DomainSpec spec(std::move(domain));
    spec.use_generator_ = true;
    spec.seed_ = seed;
    return spec;
}

SimplexDirection DomainSpec::direction(int n) const {
    if (use_generator_) return low_discrepancy_direction(domain_.dimension(), seed_, n);
    if (n < 0 || n >= static_cast<int>(explicit_dirs_.size()))
        throw input_error("direction index out of range");
    return explicit_dirs_[static_cast<std::size_t>(n)];
}

int DomainSpec::direction_count(int requested) const {
    if (use_generator_) return requested;
    return std::min<int>(requested, static_cast<int>(explicit_dirs_.size()));
}

SeriesTermStream synthesize_series(const DomainSpec& spec, int n_max, int j_max) {
    if (n_max < 1 || j_max < 1)
        throw input_error("synthesize_series needs n_max, j_max >= 1");
    SeriesTermStream stream;
    const int dirs = spec.direction_count(n_max);
    for (int n = 0; n < dirs; ++n) {
        const SimplexDirection alpha = spec.direction(n);
        const double h = spec.domain().support(alpha);
        if (!std::isfinite(h))
            throw numeric_error("direction outside PS_h: support is infinite at direction " +
                                std::to_string(n));
        for (int j = 1; j <= j_max; ++j) {
            MultiIndex J = rational_simplex_approx(alpha, j);
            const double log_c = -static_cast<double>(J.degree()) * h;
            stream.add_term({std::move(J), log_c, n, j, -1});
        }
    }
    stream.finalize();
    return stream;
}

std::vector<RoundTripRow> roundtrip_report(const DomainSpec& spec, const SeriesTermStream& stream,
                                           int n_max, double eps) {
    const auto oracle = stream.to_oracle();
    std::vector<long long> deepest(static_cast<std::size_t>(std::max(1, n_max)), 0);
    for (const auto& t : stream.terms())
        if (t.direction_index >= 0 && t.direction_index < n_max)
            deepest[static_cast<std::size_t>(t.direction_index)] =
                std::max(deepest[static_cast<std::size_t>(t.direction_index)], t.J.degree());
    std::vector<RoundTripRow> rows;
    const int dirs = spec.direction_count(n_max);
    for (int n = 0; n < dirs; ++n) {
        const SimplexDirection alpha = spec.direction(n);
        const double h = spec.domain().support(alpha);
        const int K = static_cast<int>(std::max<long long>(4, deepest[static_cast<std::size_t>(n)]));
        const auto est = support_estimate(oracle, alpha, K, eps);
        rows.push_back({n, alpha, h, est.value, std::abs(est.value - h)});
    }
    return rows;
}

double evaluate_stream(const SeriesTermStream& stream, const std::vector<double>& moduli) {
    std::vector<double> s(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i)
        s[i] = moduli[i] > 0.0 ? std::log(moduli[i]) : -kInf;
    double acc = 0.0;
    for (const auto& t : stream.terms()) {
        const double lg = t.log_c + dot_index(t.J, s);
        if (std::isinf(lg) && lg < 0) continue;
        acc += std::exp(lg);
    }
    return acc;
}

std::vector<std::vector<double>> sample_inner_domain(const ConvexLogDomain& G, int k, int count,
                                                     unsigned seed, double box_floor) {
    if (k < 1 || count < 1)
        throw input_error("sample_inner_domain needs k >= 1 and count >= 1");
    const int n = G.dimension();
    const double cap = std::log(static_cast<double>(k));
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(box_floor, cap);
    std::vector<std::vector<double>> out;
    const long max_attempts = 1000L * count;
    for (long attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count;
         ++attempt) {
        std::vector<double> s(static_cast<std::size_t>(n));
        for (auto& v : s) v = uni(rng);
        if (distance_to_boundary(G, s) > 1.0 / k) out.push_back(std::move(s));
    }
    return out;
}

namespace {

/// Inner parallel body of G at Euclidean depth 1/k. The support closed form
/// h(alpha) - |alpha|_2 / k over-estimates the erosion's support (s in G_k
/// puts s + u/k in G for the l2-unit u = alpha/|alpha|_2), which is the safe
/// direction for stage-sup control.
ConvexLogDomain inner_domain(const ConvexLogDomain& G, int k) {
    auto support = [&G, k](const SimplexDirection& alpha) {
        const double h = G.support(alpha);
        if (!std::isfinite(h)) return h;
        double n2 = 0.0;
        for (int i = 0; i < alpha.dimension(); ++i) n2 += alpha[i] * alpha[i];
        return h - std::sqrt(n2) / static_cast<double>(k);
    };
    auto defining = [&G, k](const std::vector<double>& s) {
        return 1.0 / static_cast<double>(k) - distance_to_boundary(G, s);
    };
    return ConvexLogDomain(G.dimension(), support, defining, G.finiteness_hint());
}

bool below_cap(const std::vector<double>& s, double cap) {
    for (double v : s)
        if (v > cap) return false;
    return true;
}

double log_sum_exp(double a, double b) {
    if (std::isinf(a) && a < 0) return b;
    if (std::isinf(b) && b < 0) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(std::min(a, b) - m));
}

} // namespace

BlowupResult blowup_series(const DomainSpec& spec, const std::vector<double>& boundary_moduli,
                           int k_max, const BlowupOptions& options) {
    const ConvexLogDomain& G = spec.domain();
    const int n = G.dimension();
    if (static_cast<int>(boundary_moduli.size()) != n)
        throw input_error("boundary point of wrong dimension");
    if (k_max < 1)
        throw input_error("blowup_series needs k_max >= 1");
    if (!G.has_defining())
        throw input_error("blowup_series needs a defining oracle");

    std::vector<double> lp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double m = boundary_moduli[static_cast<std::size_t>(i)];
        if (m < 0.0)
            throw input_error("boundary point moduli must be non-negative");
        lp[static_cast<std::size_t>(i)] = m > 0.0 ? std::log(m) : -kInf;
    }
    if (std::abs(G.defining(lp)) > options.boundary_tol)
        throw input_error("point is not on the domain boundary");

    const double log2 = std::log(2.0);
    BlowupResult result;

    for (int k = 1; k <= k_max; ++k) {
        BlowupStage stage;
        stage.k = k;

        const double q = 1.0 - 1.0 / static_cast<double>(k + 1);
        stage.p_k.resize(static_cast<std::size_t>(n));
        stage.log_p_k.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            stage.p_k[static_cast<std::size_t>(i)] = q * boundary_moduli[static_cast<std::size_t>(i)];
            stage.log_p_k[static_cast<std::size_t>(i)] =
                std::isinf(lp[static_cast<std::size_t>(i)]) ? -kInf
                                                            : lp[static_cast<std::size_t>(i)] + std::log(q);
        }
        const std::vector<double>& x = stage.log_p_k;

        // sandwich p^k in D_{k+1} \ D_k
        const double dist = distance_to_boundary(G, x);
        const bool in_next =
            dist > 1.0 / (k + 1) && below_cap(x, std::log(static_cast<double>(k + 1)));
        const bool in_cur = dist > 1.0 / k && below_cap(x, std::log(static_cast<double>(k)));
        if (!(in_next && !in_cur)) {
            stage.skipped = true;
            result.stages.push_back(std::move(stage));
            continue;
        }

        const ConvexLogDomain Gk = inner_domain(G, k);
        const SeparationResult sep = [&]() {
            try {
                return separate_with_witness(Gk, x, options.separation_tol);
            } catch (const std::exception& e) {
                throw numeric_error("separation failure at stage " + std::to_string(k) + ": " +
                                    e.what());
            }
        }();
        const MultiIndex& J = sep.witness;
        const SimplexDirection alphaJ = normalize(J);
        const double degJ = static_cast<double>(J.degree());

        // sup of <J, s> over D_k: inner-parallel support bound, capped by the box
        const double sup_bound_log =
            std::min(degJ * Gk.support(alphaJ), degJ * std::log(std::max(1.0, static_cast<double>(k))));
        const double delta = sup_bound_log - dot_index(J, x); // log sup of the normalized monomial
        if (!(delta < 0.0))
            throw numeric_error("separation failure at stage " + std::to_string(k) +
                                ": no margin against the inner domain");

        // the induction c_k = k + |sum of earlier stages at p^k|, done in logs
        // (every stage value is a positive real at positive moduli)
        double log_prev = -kInf;
        for (const auto& st : result.stages) {
            if (st.skipped) continue;
            const double lg = st.log_c_k +
                              static_cast<double>(st.power) *
                                  (dot_index(st.monomial, x) - dot_index(st.monomial, st.log_p_k));
            log_prev = log_sum_exp(log_prev, lg);
        }
        stage.log_c_k = log_sum_exp(std::log(static_cast<double>(k)), log_prev);

        // smallest power with c_k * sup^{n_k} < 2^{-k}
        const double need = (static_cast<double>(k) * log2 + stage.log_c_k) / (-delta);
        long long power = static_cast<long long>(std::floor(need)) + 1;
        if (power < 1) power = 1;

        MultiIndex exponent = J.scaled(power);
        while (result.stream.has_exponent(exponent)) {
            ++power; // merging would break the induction; a higher power only helps
            exponent = J.scaled(power);
        }
        stage.monomial = J;
        stage.power = power;
        stage.sup_bound = std::exp(stage.log_c_k + static_cast<double>(power) * delta);

        const double log_c_term = stage.log_c_k - static_cast<double>(power) * dot_index(J, x);
        result.stream.add_term({exponent, log_c_term, -1, -1, k});

        // the k-th stage contributes exactly c_k at p^k
        stage.log_partial_sum = log_sum_exp(log_prev, stage.log_c_k);
        result.stages.push_back(std::move(stage));
    }

    result.stream.finalize();
    return result;
}

} // namespace convdom

#pragma once

#include "convdom/coefficients.hpp"
#include "convdom/lattice.hpp"
#include "convdom/logconvex.hpp"

#include <string>
#include <vector>

namespace convdom {

/// One emitted monomial: exponent J with log-coefficient log_c. Provenance is
/// (direction_index, precision_index) for synthesized series and stage for
/// blow-up series; unused slots stay -1.
struct SeriesTerm {
    MultiIndex J;
    double log_c = 0.0;
    int direction_index = -1;
    int precision_index = -1;
    int stage = -1;
};

/// Ordered stream of series terms with distinct exponents.
class SeriesTermStream {
public:
    void add_term(SeriesTerm term); // duplicate exponents keep the larger log_c
    bool has_exponent(const MultiIndex& J) const;
    void finalize(); // canonical order: degree, then lexicographic

    const std::vector<SeriesTerm>& terms() const { return terms_; }
    int dimension() const;
    long long max_degree() const;

    CoefficientOracle to_oracle(const std::string& name = "synthesized") const;
    void save_jsonl(const std::string& path) const; // coeffs JSONL format

private:
    std::vector<SeriesTerm> terms_;
};

/// Target domain for synthesis: a convex log-image together with the source
/// of query directions -- an explicit list, or a deterministic
/// low-discrepancy generator over the simplex (Halton points mapped through
/// sorted gaps).
class DomainSpec {
public:
    static DomainSpec with_directions(ConvexLogDomain domain,
                                      std::vector<SimplexDirection> directions);
    static DomainSpec with_generator(ConvexLogDomain domain, unsigned seed);

    const ConvexLogDomain& domain() const { return domain_; }
    SimplexDirection direction(int n) const; // n >= 0
    /// Explicit lists clamp the direction count; generators honor the request.
    int direction_count(int requested) const;

private:
    explicit DomainSpec(ConvexLogDomain domain) : domain_(std::move(domain)) {}

    ConvexLogDomain domain_;
    std::vector<SimplexDirection> explicit_dirs_;
    bool use_generator_ = false;
    unsigned seed_ = 0;
};

/// Explicit series converging precisely on the prescribed domain: for every
/// direction alpha^n and precision j, the monomial exponent is the rational
/// approximant J of alpha^n at precision j and its log-coefficient is
/// -|J| h(alpha^n). Duplicate exponents keep the larger coefficient (the max
/// drives the limsup). Errors when h is infinite at a requested direction.
SeriesTermStream synthesize_series(const DomainSpec& spec, int n_max, int j_max);

struct RoundTripRow {
    int n = 0;
    SimplexDirection alpha;
    double h_spec = 0.0;
    double h_hat = 0.0;
    double abs_err = 0.0;
};

/// Re-analyzes the synthesized stream direction by direction. Each direction
/// is probed with its own degree cutoff (the largest degree that direction
/// emitted: gcd reduction leaves different strands at different depths).
std::vector<RoundTripRow> roundtrip_report(const DomainSpec& spec, const SeriesTermStream& stream,
                                           int n_max, double eps);

struct BlowupOptions {
    double boundary_tol = 1e-6; // |psi(lambda(p))| tolerance for the boundary check
    double separation_tol = 1e-9;
    double box_floor = -8.0; // lower corner of the log-space sampling box
};

/// Stage magnitudes live in log scale: the induction c_k = k + |sum of
/// earlier stages at p^k| compounds through the k^-2 separation margins and
/// overflows doubles long before k = 15 otherwise.
struct BlowupStage {
    int k = 0;
    bool skipped = false;
    MultiIndex monomial;         // separating direction J
    long long power = 0;         // n_k
    double log_c_k = 0.0;        // log of the stage constant c_k
    std::vector<double> p_k;     // moduli of the approach point
    std::vector<double> log_p_k; // lambda(p_k)
    double sup_bound = 0.0;      // certified bound on sup over D_k of the stage modulus
    double log_partial_sum = 0.0; // log of the sum of stages 1..k at p_k
};

struct BlowupResult {
    SeriesTermStream stream;
    std::vector<BlowupStage> stages;
};

/// Power series converging on the domain and blowing up along a radial
/// approach to the boundary point p: stage k separates lambda(p^k) from the
/// inner domain G_k = {dist(.,dG) > 1/k} (capped by s_i <= log k) with a
/// monomial normalized to 1 at p^k, then powers it until its sup over D_k
/// drops under 2^{-k} and scales by c_k = k + |sum of earlier stages at p^k|.
/// Partial sums at p^n then exceed n - 1. Stages whose approach point misses
/// the D_{k+1} \ D_k sandwich are recorded as skipped.
BlowupResult blowup_series(const DomainSpec& spec, const std::vector<double>& boundary_moduli,
                           int k_max, const BlowupOptions& options = {});

/// Evaluate the sum of the stream's terms at a point given by moduli
/// (phases are irrelevant for everything derived from the stream).
double evaluate_stream(const SeriesTermStream& stream, const std::vector<double>& moduli);

/// Deterministic rejection sample of G_k = {dist(.,dG) > 1/k, s_i <= log k}.
std::vector<std::vector<double>> sample_inner_domain(const ConvexLogDomain& G, int k, int count,
                                                     unsigned seed, double box_floor = -8.0);

/// Deterministic low-discrepancy simplex point (Halton, sorted-gaps map).
SimplexDirection low_discrepancy_direction(int dimension, unsigned seed, int index);

} // namespace convdom

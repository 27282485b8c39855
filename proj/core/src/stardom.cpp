#include "convdom/stardom.hpp"
#include "convdom/analyze.hpp"
#include "convdom/errors.hpp"

#include <cmath>
#include <limits>

namespace convdom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double l2(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

std::vector<double> scaled(const std::vector<double>& v, double t) {
    std::vector<double> out(v);
    for (double& x : out) x *= t;
    return out;
}

} // namespace

StarDomain::StarDomain(int dimension, MembershipFn member, double interior_radius)
    : dimension_(dimension), member_(std::move(member)), interior_radius_(interior_radius) {
    if (dimension_ < 1)
        throw input_error("star domain needs dimension >= 1");
    if (!member_)
        throw input_error("star domain needs a membership oracle");
    if (!(interior_radius_ > 0.0))
        throw input_error("star domain needs interior_radius > 0");
}

bool StarDomain::member(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != dimension_)
        throw input_error("membership query of wrong dimension");
    return member_(x);
}

double radial(const StarDomain& d, const std::vector<double>& unit_v, double horizon) {
    if (std::abs(l2(unit_v) - 1.0) > 1e-9)
        throw input_error("radial needs a unit vector");
    if (!d.member(scaled(unit_v, d.interior_radius())))
        throw input_error("origin not interior to the star domain");

    double lo = d.interior_radius();
    double hi = std::max(1.0, 2.0 * lo);
    while (d.member(scaled(unit_v, hi))) {
        lo = hi;
        hi *= 2.0;
        if (hi > horizon) return kInf;
    }
    while (hi - lo > 1e-10 * (1.0 + hi)) {
        const double mid = 0.5 * (lo + hi);
        if (d.member(scaled(unit_v, mid))) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double gauge(const StarDomain& d, const std::vector<double>& x) {
    const double norm = l2(x);
    if (norm == 0.0) return 0.0;
    const double rho = radial(d, scaled(x, 1.0 / norm));
    return std::isinf(rho) ? 0.0 : norm / rho;
}

ProperStarReport proper_star_check(const StarDomain& d,
                                   const std::vector<std::vector<double>>& rays, double tol) {
    ProperStarReport report;
    report.proper = true;
    for (const auto& ray : rays) {
        const double norm = l2(ray);
        if (!(norm > 0.0))
            throw input_error("rays must be nonzero");
        const auto v = scaled(ray, 1.0 / norm);
        double rho;
        try {
            rho = radial(d, v);
        } catch (const input_error&) {
            report.origin_interior = false;
            report.proper = false;
            report.offending_rays.push_back(v);
            continue;
        }
        if (std::isinf(rho)) continue; // the ray never leaves the domain
        bool flagged = false;
        for (double t = rho * (1.0 + tol) * 1.02; t <= std::min(1e6, rho * 1e3); t *= 1.05) {
            if (d.member(scaled(v, t))) {
                flagged = true;
                break;
            }
        }
        if (flagged) {
            report.proper = false;
            report.offending_rays.push_back(v);
        }
    }
    return report;
}

std::vector<double> phi_map(const StarDomain& d, const std::vector<double>& x) {
    const double norm = l2(x);
    if (!(norm < 1.0))
        throw input_error("phi_map needs |x| < 1");
    if (norm == 0.0) return std::vector<double>(x.size(), 0.0);
    const double rho = radial(d, scaled(x, 1.0 / norm));
    const double reciprocal = std::isinf(rho) ? 0.0 : 1.0 / rho;
    const double factor = norm / (1.0 + reciprocal - norm);
    return scaled(x, factor);
}

StarDomain star_ball(int dimension) {
    return StarDomain(dimension, [](const std::vector<double>& x) { return l2(x) < 1.0; });
}

StarDomain star_polydisc(std::vector<double> polyradius) {
    for (double r : polyradius)
        if (!(r > 0.0))
            throw input_error("polyradius entries must be positive");
    const int n = static_cast<int>(polyradius.size());
    return StarDomain(n, [r = std::move(polyradius)](const std::vector<double>& x) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (std::abs(x[i]) >= r[i]) return false;
        return true;
    });
}

StarDomain star_hyperbolic(int dimension) {
    return StarDomain(dimension, [](const std::vector<double>& x) {
        double prod = 1.0;
        for (double v : x) prod *= std::abs(v);
        return prod < 1.0;
    });
}

StarDomain star_from_series(const CoefficientOracle& c, int K) {
    return StarDomain(c.dimension(), [c, K](const std::vector<double>& x) {
        std::vector<double> moduli(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) moduli[i] = std::abs(x[i]);
        return membership(c, moduli, K, 0.0) == Membership::inside;
    });
}

} // namespace convdom

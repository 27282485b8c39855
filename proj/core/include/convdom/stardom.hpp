#pragma once

#include "convdom/coefficients.hpp"

#include <functional>
#include <vector>

namespace convdom {

/// Domain star-like with respect to the origin, described by a pure
/// membership oracle over R^N (complex domains enter through their moduli).
/// The origin must be interior: a ball of interior_radius must test inside.
class StarDomain {
public:
    using MembershipFn = std::function<bool(const std::vector<double>&)>;

    StarDomain(int dimension, MembershipFn member, double interior_radius = 1e-6);

    int dimension() const { return dimension_; }
    bool member(const std::vector<double>& x) const;
    double interior_radius() const { return interior_radius_; }

private:
    int dimension_ = 0;
    MembershipFn member_;
    double interior_radius_ = 0.0;
};

/// rho(v) = sup { t : t v in D } for a unit vector v, by exponential
/// bracketing and bisection. Returns +inf once the bracket passes `horizon`.
double radial(const StarDomain& d, const std::vector<double>& unit_v, double horizon = 1e6);

/// Minkowski gauge |x| / rho(x/|x|); gauge(0) = 0, and 0 on rays where rho
/// is infinite.
double gauge(const StarDomain& d, const std::vector<double>& x);

struct ProperStarReport {
    bool proper = false;
    bool origin_interior = true;
    std::vector<std::vector<double>> offending_rays;
};

/// Scans each sampled ray on a geometric grid past rho(v)(1+tol); an inside
/// point beyond the radial value flags the ray. Sampling-based, not a proof.
ProperStarReport proper_star_check(const StarDomain& d,
                                   const std::vector<std::vector<double>>& rays,
                                   double tol = 1e-6);

/// The ball-to-domain map
///   Phi(x) = ( |x| / (1 + 1/rho(x/|x|) - |x|) ) x,   Phi(0) = 0,
/// with 1/rho replaced by zero on rays of infinite radial value. Evaluated
/// exactly as displayed.
std::vector<double> phi_map(const StarDomain& d, const std::vector<double>& x);

StarDomain star_ball(int dimension);
StarDomain star_polydisc(std::vector<double> polyradius);
/// H = { |x_1 x_2 ... x_N| < 1 }, unbounded along the coordinate axes.
StarDomain star_hyperbolic(int dimension);
/// Power-series convergence domain as a star domain in modulus space.
StarDomain star_from_series(const CoefficientOracle& c, int K);

} // namespace convdom

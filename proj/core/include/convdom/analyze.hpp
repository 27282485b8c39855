#pragma once

#include "convdom/coefficients.hpp"
#include "convdom/lattice.hpp"

#include <complex>
#include <vector>

namespace convdom {

/// Truncated limsup over a finite index window, together with the index that
/// attains the maximum. `window` records the direction radius (support
/// estimates) or the tail fraction (psi estimates) actually used.
struct LimsupEstimate {
    double value = 0.0;
    int degree_cutoff = 0;
    double window = 0.0;
    MultiIndex achieving_index;
};

enum class Membership { inside, outside, boundary_band };

/// tau: coordinatewise modulus.
std::vector<double> modulus_map(const std::vector<std::complex<double>>& z);
/// lambda: coordinatewise log of the modulus, log 0 = -inf.
std::vector<double> log_map(const std::vector<double>& moduli);

/// Defining-function estimate: max over {J : tail_fraction*K <= |J| <= K,
/// c_J != 0} of <J/|J|, s> + log|c_J|/|J|. Coordinates of s may be -inf
/// (points approaching the coordinate frame); indices hitting such
/// coordinates are dropped by completeness, and a window with nonzero
/// coefficients but none compatible yields -inf. Errors with "empty tail"
/// when the window holds no nonzero coefficient at all.
LimsupEstimate psi_estimate(const CoefficientOracle& c, const std::vector<double>& s, int K,
                            double tail_fraction = 0.5);

/// exp(psi) - 1, evaluated at lambda(tau(z)).
double phi_estimate(const CoefficientOracle& c, const std::vector<std::complex<double>>& z, int K);
double phi_estimate(const CoefficientOracle& c, const std::vector<double>& moduli, int K);

/// Support-function estimate at a simplex direction:
/// -max over the window {|J| in [K/2, K], |J/|J| - alpha|_1 <= eps, c_J != 0}
/// of log|c_J|/|J|. The direction radius widens automatically to 2*eps and
/// 4*eps when the window is empty (lattice directions thin out near the
/// simplex boundary) before failing with "no strand near alpha".
LimsupEstimate support_estimate(const CoefficientOracle& c, const SimplexDirection& alpha, int K,
                                double eps);

/// Radius of convergence along a unit vector: exp(-psi); +inf when psi is
/// -inf (in particular for an oracle with no nonzero coefficients).
double radial_estimate(const CoefficientOracle& c, const std::vector<std::complex<double>>& z,
                       int K);
double radial_estimate(const CoefficientOracle& c, const std::vector<double>& unit_moduli, int K);

/// Minkowski gauge estimate exp(psi); positively homogeneous in z.
double gauge_estimate(const CoefficientOracle& c, const std::vector<std::complex<double>>& z,
                      int K);
double gauge_estimate(const CoefficientOracle& c, const std::vector<double>& moduli, int K);

/// Three-valued membership: inside (psi < -margin), outside (psi > margin),
/// else boundary_band. A window with no usable index classifies inside
/// ("domain = everything" for vanishing oracles, completeness toward the
/// coordinate frame otherwise).
Membership membership(const CoefficientOracle& c, const std::vector<std::complex<double>>& z,
                      int K, double margin);
Membership membership(const CoefficientOracle& c, const std::vector<double>& moduli, int K,
                      double margin);

/// Truncated max of |c_J r^J|^{1/|J|}; equals 1 at a conjugate polyradius.
double conjugate_radii_residual(const CoefficientOracle& c, const std::vector<double>& r, int K);

/// Coordinatewise weighted geometric mean p_i^t q_i^(1-t).
std::vector<double> holder_midpoint(const std::vector<double>& p, const std::vector<double>& q,
                                    double t);

} // namespace convdom

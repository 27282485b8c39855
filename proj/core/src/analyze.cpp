#include "convdom/analyze.hpp"
#include "convdom/errors.hpp"

#include <cmath>
#include <limits>

namespace convdom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

std::vector<double> modulus_map(const std::vector<std::complex<double>>& z) {
    std::vector<double> m(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) m[i] = std::abs(z[i]);
    return m;
}

std::vector<double> log_map(const std::vector<double>& moduli) {
    std::vector<double> s(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 0.0)
            throw input_error("moduli must be non-negative");
        s[i] = moduli[i] > 0.0 ? std::log(moduli[i]) : -kInf;
    }
    return s;
}

LimsupEstimate psi_estimate(const CoefficientOracle& c, const std::vector<double>& s, int K,
                            double tail_fraction) {
    if (K < 4)
        throw input_error("psi_estimate needs K >= 4");
    if (!(tail_fraction > 0.0 && tail_fraction < 1.0))
        throw input_error("tail_fraction must lie in (0,1)");
    if (static_cast<int>(s.size()) != c.dimension())
        throw input_error("point dimension does not match oracle");

    const int lo = std::max(1, static_cast<int>(std::ceil(tail_fraction * K)));
    double best = -kInf;
    MultiIndex arg = MultiIndex::zeros(c.dimension());
    bool any_nonzero = false;

    for (int k = lo; k <= K; ++k) {
        const double kd = static_cast<double>(k);
        for (const auto& J : enumerate_by_degree(c.dimension(), k)) {
            const double lm = c.log_modulus(J);
            if (std::isinf(lm) && lm < 0) continue;
            any_nonzero = true;
            double dot = 0.0;
            bool incompatible = false;
            for (int i = 0; i < c.dimension() && !incompatible; ++i) {
                if (J[i] == 0) continue; // completeness: absent variables cost nothing
                const double si = s[static_cast<std::size_t>(i)];
                if (std::isinf(si) && si < 0) {
                    incompatible = true;
                    continue;
                }
                dot += static_cast<double>(J[i]) * si;
            }
            if (incompatible) continue;
            const double val = dot / kd + lm / kd;
            if (val > best) {
                best = val;
                arg = J;
            }
        }
    }
    if (!any_nonzero)
        throw numeric_error("empty tail: no nonzero coefficient with degree in [" +
                            std::to_string(lo) + "," + std::to_string(K) + "]");
    return {best, K, tail_fraction, arg};
}

double phi_estimate(const CoefficientOracle& c, const std::vector<double>& moduli, int K) {
    return std::exp(psi_estimate(c, log_map(moduli), K).value) - 1.0;
}

double phi_estimate(const CoefficientOracle& c, const std::vector<std::complex<double>>& z,
                    int K) {
    return phi_estimate(c, modulus_map(z), K);
}

LimsupEstimate support_estimate(const CoefficientOracle& c, const SimplexDirection& alpha, int K,
                                double eps) {
    if (K < 4)
        throw input_error("support_estimate needs K >= 4");
    if (!(eps >= 0.0))
        throw input_error("support_estimate needs eps >= 0");
    if (alpha.dimension() != c.dimension())
        throw input_error("direction dimension does not match oracle");

    for (int widen = 1; widen <= 4; widen *= 2) {
        DirectionWindow w{alpha, eps * widen, std::max(1, K / 2), K};
        double best = -kInf;
        MultiIndex arg;
        bool found = false;
        for (const auto& J : window_indices(w)) {
            const double lm = c.log_modulus(J);
            if (std::isinf(lm) && lm < 0) continue;
            const double val = lm / static_cast<double>(J.degree());
            if (!found || val > best) {
                best = val;
                arg = J;
                found = true;
            }
        }
        if (found) return {-best + 0.0, K, eps * widen, arg}; // +0.0 canonicalizes -0
    }
    throw numeric_error("no strand near alpha: window around direction is empty at radius 4*eps");
}

double radial_estimate(const CoefficientOracle& c, const std::vector<double>& unit_moduli,
                       int K) {
    double norm2 = 0.0;
    for (double m : unit_moduli) norm2 += m * m;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9)
        throw input_error("radial_estimate needs a unit vector");
    double psi;
    try {
        psi = psi_estimate(c, log_map(unit_moduli), K).value;
    } catch (const numeric_error&) {
        return kInf; // vanishing oracle: the domain is everything
    }
    if (std::isinf(psi) && psi < 0) return kInf;
    return std::exp(-psi);
}

double radial_estimate(const CoefficientOracle& c, const std::vector<std::complex<double>>& z,
                       int K) {
    return radial_estimate(c, modulus_map(z), K);
}

double gauge_estimate(const CoefficientOracle& c, const std::vector<double>& moduli, int K) {
    bool nonzero = false;
    for (double m : moduli)
        if (m != 0.0) nonzero = true;
    if (!nonzero)
        throw input_error("gauge_estimate needs z != 0");
    return std::exp(psi_estimate(c, log_map(moduli), K).value);
}

double gauge_estimate(const CoefficientOracle& c, const std::vector<std::complex<double>>& z,
                      int K) {
    return gauge_estimate(c, modulus_map(z), K);
}

Membership membership(const CoefficientOracle& c, const std::vector<double>& moduli, int K,
                      double margin) {
    double psi;
    try {
        psi = psi_estimate(c, log_map(moduli), K).value;
    } catch (const numeric_error&) {
        return Membership::inside;
    }
    if (psi < -margin) return Membership::inside;
    if (psi > margin) return Membership::outside;
    return Membership::boundary_band;
}

Membership membership(const CoefficientOracle& c, const std::vector<std::complex<double>>& z,
                      int K, double margin) {
    return membership(c, modulus_map(z), K, margin);
}

double conjugate_radii_residual(const CoefficientOracle& c, const std::vector<double>& r, int K) {
    for (double x : r)
        if (!(x > 0.0))
            throw input_error("conjugate radii must be positive");
    return std::exp(psi_estimate(c, log_map(r), K).value);
}

std::vector<double> holder_midpoint(const std::vector<double>& p, const std::vector<double>& q,
                                    double t) {
    if (p.size() != q.size())
        throw input_error("holder_midpoint needs points of equal dimension");
    if (!(t >= 0.0 && t <= 1.0))
        throw input_error("holder_midpoint needs t in [0,1]");
    std::vector<double> mid(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0.0 || q[i] < 0.0)
            throw input_error("holder_midpoint needs non-negative moduli");
        if (t == 0.0) mid[i] = q[i];
        else if (t == 1.0) mid[i] = p[i];
        else mid[i] = std::pow(p[i], t) * std::pow(q[i], 1.0 - t);
    }
    return mid;
}

} // namespace convdom

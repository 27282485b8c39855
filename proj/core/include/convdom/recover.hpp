#pragma once

#include "convdom/lattice.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace convdom {

/// Equispaced product grid on the distinguished boundary of the polydisc
/// P(0, r): nodes z_j = r_j e^{2 pi i m_j / M}. The evaluator must be
/// holomorphic on a polydisc strictly containing P(0, r).
class TorusSampler {
public:
    using Evaluator = std::function<std::complex<double>(const std::vector<std::complex<double>>&)>;

    TorusSampler(Evaluator f, std::vector<double> polyradius, int nodes_per_axis);

    int dimension() const { return static_cast<int>(polyradius_.size()); }
    int nodes_per_axis() const { return nodes_; }
    const std::vector<double>& polyradius() const { return polyradius_; }
    std::complex<double> evaluate(const std::vector<std::complex<double>>& z) const { return f_(z); }

private:
    Evaluator f_;
    std::vector<double> polyradius_;
    int nodes_ = 0;
};

/// Taylor coefficient c_K by trapezoidal quadrature of the boundary integral,
/// divided by r^K. Exact for trigonometric polynomials of per-axis degree
/// below M; the node sum runs in a fixed deterministic order. Errors with
/// "aliasing risk" when M <= 2 max(K_i) + 4.
std::complex<double> recover_coefficient(const TorusSampler& sampler, const MultiIndex& K);

struct CauchyCheck {
    double lhs = 0.0; // |recovered c_K|
    double rhs = 0.0; // max sampled |f| / r^K
    bool ok = false;
};

/// Classical Cauchy estimate |c_K| <= |f|_T / r^K on the sampled grid.
CauchyCheck cauchy_estimate_check(const TorusSampler& sampler, const MultiIndex& K,
                                  double tol = 1e-9);

} // namespace convdom

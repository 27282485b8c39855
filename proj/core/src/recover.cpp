#include "convdom/recover.hpp"
#include "convdom/errors.hpp"

#include <cmath>
#include <numbers>

namespace convdom {

TorusSampler::TorusSampler(Evaluator f, std::vector<double> polyradius, int nodes_per_axis)
    : f_(std::move(f)), polyradius_(std::move(polyradius)), nodes_(nodes_per_axis) {
    if (!f_)
        throw input_error("torus sampler needs an evaluator");
    if (polyradius_.empty())
        throw input_error("torus sampler needs dimension >= 1");
    for (double r : polyradius_)
        if (!(r > 0.0))
            throw input_error("polyradius entries must be positive");
    if (nodes_ < 2)
        throw input_error("torus sampler needs at least 2 nodes per axis");
}

namespace {

/// Walk the product grid in row-major order, calling visit(m, z).
template <typename Visit>
void for_each_node(const TorusSampler& s, Visit&& visit) {
    const int n = s.dimension();
    const int M = s.nodes_per_axis();
    // per-axis node tables
    std::vector<std::vector<std::complex<double>>> ring(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ring[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(M));
        for (int m = 0; m < M; ++m) {
            const double theta = 2.0 * std::numbers::pi * m / M;
            ring[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] =
                s.polyradius()[static_cast<std::size_t>(i)] *
                std::complex<double>(std::cos(theta), std::sin(theta));
        }
    }
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    while (true) {
        for (int i = 0; i < n; ++i)
            z[static_cast<std::size_t>(i)] =
                ring[static_cast<std::size_t>(i)][static_cast<std::size_t>(m[static_cast<std::size_t>(i)])];
        visit(m, z);
        int d = n - 1;
        while (d >= 0) {
            if (++m[static_cast<std::size_t>(d)] < M) break;
            m[static_cast<std::size_t>(d)] = 0;
            --d;
        }
        if (d < 0) break;
    }
}

} // namespace

std::complex<double> recover_coefficient(const TorusSampler& sampler, const MultiIndex& K) {
    const int n = sampler.dimension();
    if (K.dimension() != n)
        throw input_error("coefficient index of wrong dimension");
    const int M = sampler.nodes_per_axis();
    long long max_k = 0;
    for (int i = 0; i < n; ++i) max_k = std::max(max_k, K[i]);
    if (M <= 2 * max_k + 4)
        throw input_error("aliasing risk: need nodes_per_axis > 2*max(K_i) + 4");

    std::complex<double> sum(0.0, 0.0);
    for_each_node(sampler, [&](const std::vector<int>& m, const std::vector<std::complex<double>>& z) {
        double phase = 0.0;
        for (int i = 0; i < n; ++i)
            phase -= 2.0 * std::numbers::pi * static_cast<double>(K[i]) *
                     static_cast<double>(m[static_cast<std::size_t>(i)]) / M;
        sum += sampler.evaluate(z) * std::complex<double>(std::cos(phase), std::sin(phase));
    });

    double scale = 1.0;
    for (int i = 0; i < n; ++i) {
        scale /= std::pow(sampler.polyradius()[static_cast<std::size_t>(i)], static_cast<double>(K[i]));
        scale /= static_cast<double>(M);
    }
    return sum * scale;
}

CauchyCheck cauchy_estimate_check(const TorusSampler& sampler, const MultiIndex& K, double tol) {
    CauchyCheck check;
    check.lhs = std::abs(recover_coefficient(sampler, K));
    double max_abs = 0.0;
    for_each_node(sampler, [&](const std::vector<int>&, const std::vector<std::complex<double>>& z) {
        max_abs = std::max(max_abs, std::abs(sampler.evaluate(z)));
    });
    double rk = 1.0;
    for (int i = 0; i < sampler.dimension(); ++i)
        rk *= std::pow(sampler.polyradius()[static_cast<std::size_t>(i)], static_cast<double>(K[i]));
    check.rhs = max_abs / rk;
    check.ok = check.lhs <= check.rhs * (1.0 + tol);
    return check;
}

} // namespace convdom

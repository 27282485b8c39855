#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convdom/analyze.hpp"
#include "convdom/coefficients.hpp"
#include "convdom/errors.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <random>

using namespace convdom;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::complex<double>> cvec(std::vector<double> moduli) {
    std::vector<std::complex<double>> z;
    for (double m : moduli) z.emplace_back(m, 0.0);
    return z;
}

/// Rotating family of full-support oracles for randomized property trials.
CoefficientOracle trial_oracle(int which, std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.3, 3.0);
    switch (which % 4) {
        case 0: return geometric(2);
        case 1: return scaled_monomial(2, uni(rng));
        case 2: return entropy_family(2, +1, 0.25 + uni(rng) / 4.0);
        default: return entropy_family(2, -1, 0.25 + uni(rng) / 4.0);
    }
}

} // namespace

TEST_CASE("psi estimates on closed-form families") {
    const auto g = geometric(2);
    CHECK(psi_estimate(g, {-0.1, -0.1}, 40).value == doctest::Approx(-0.1).epsilon(1e-12));
    CHECK(psi_estimate(g, {0.0, 0.0}, 40).value == 0.0);

    const auto s = strand(MultiIndex({1, 1}), [](long long k) { return -2.0 * k; });
    for (const auto& pt : {std::vector<double>{0.3, -0.7}, {1.0, 1.0}, {-2.0, 0.5}}) {
        const double expected = 0.5 * (pt[0] + pt[1]) - 1.0;
        CHECK(psi_estimate(s, pt, 60).value == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("psi estimate reports the achieving index") {
    const auto g = geometric(2);
    const auto est = psi_estimate(g, {0.4, -0.9}, 30);
    // maximum along the first axis: index (k, 0)
    CHECK(est.achieving_index[1] == 0);
    CHECK(est.value == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("psi estimate errors on an empty tail") {
    // tabulated oracle supported only at low degree
    auto low = tabulated(2, {{MultiIndex({1, 0}), 0.0}});
    CHECK_THROWS_AS(psi_estimate(low, {0.0, 0.0}, 40), numeric_error);
    // derived estimators apply the everything-domain reading
    CHECK(membership(low, cvec({5.0, 5.0}), 40, 0.01) == Membership::inside);
    CHECK(radial_estimate(low, cvec({1.0, 0.0}), 40) == kInf);
}

TEST_CASE("phi estimates") {
    const auto g = geometric(2);
    CHECK(phi_estimate(g, cvec({0.5, 0.5}), 40) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(phi_estimate(g, cvec({1.0, 1.0}), 40) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(phi_estimate(g, cvec({2.0, 0.1}), 40) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("support estimates") {
    const auto g = geometric(2);
    for (double t : {0.1, 0.35, 0.5, 0.9})
        CHECK(support_estimate(g, SimplexDirection({t, 1.0 - t}), 100, 0.05).value == 0.0);

    const auto sm = scaled_monomial(2, 2.0);
    for (double t : {0.2, 0.5, 0.8})
        CHECK(support_estimate(sm, SimplexDirection({t, 1.0 - t}), 100, 0.05).value ==
              doctest::Approx(std::log(2.0)).epsilon(1e-15));

    const auto ball = entropy_family(2, +1, 0.5);
    const auto est = support_estimate(ball, SimplexDirection({0.5, 0.5}), 400, 0.02);
    // Lagrange solution for the sampled sphere log-image: h = (1/2) sum alpha log alpha
    CHECK(est.value == doctest::Approx(0.5 * std::log(0.5)).epsilon(0.02));
}

TEST_CASE("support estimate widens sparse windows before failing") {
    // strand oracle: only the diagonal direction carries indices
    const auto s = strand(MultiIndex({1, 1}), [](long long) { return 0.0; });
    const auto est = support_estimate(s, SimplexDirection({0.5, 0.5}), 40, 0.01);
    CHECK(est.value == 0.0);
    CHECK_THROWS_AS(support_estimate(s, SimplexDirection({0.9, 0.1}), 40, 0.01), numeric_error);
}

TEST_CASE("radial estimates") {
    const auto g = geometric(2);
    const double isq = 1.0 / std::sqrt(2.0);
    CHECK(radial_estimate(g, cvec({1.0, 0.0}), 60) == doctest::Approx(1.0).epsilon(1e-12));
    // phases do not matter
    const std::vector<std::complex<double>> rotated{{0.0, 1.0}, {0.0, 0.0}};
    CHECK(radial_estimate(g, rotated, 60) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(radial_estimate(g, cvec({isq, isq}), 60) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    const auto ball = entropy_family(2, +1, 0.5);
    CHECK(radial_estimate(ball, cvec({isq, isq}), 400) == doctest::Approx(1.0).epsilon(0.05));

    CHECK_THROWS_AS(radial_estimate(g, cvec({1.0, 1.0}), 60), input_error);
}

TEST_CASE("gauge estimates") {
    const auto g = geometric(2);
    CHECK(gauge_estimate(g, cvec({0.5, 0.25}), 60) == doctest::Approx(0.5).epsilon(1e-12));

    const auto ball = entropy_family(2, +1, 0.5);
    CHECK(gauge_estimate(ball, cvec({0.3, 0.4}), 400) == doctest::Approx(0.5).epsilon(0.03));

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> uni(0.1, 2.0);
    for (int t = 0; t < 50; ++t) {
        const std::vector<double> z{uni(rng), uni(rng)};
        const double g1 = gauge_estimate(g, z, 40);
        const double g2 = gauge_estimate(g, {2.0 * z[0], 2.0 * z[1]}, 40);
        CHECK(g2 == doctest::Approx(2.0 * g1).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gauge_estimate(g, cvec({0.0, 0.0}), 40), input_error);
}

TEST_CASE("membership classification") {
    const auto g = geometric(2);
    CHECK(membership(g, cvec({0.9, 0.9}), 40, 0.01) == Membership::inside);
    CHECK(membership(g, cvec({1.1, 0.5}), 40, 0.01) == Membership::outside);
    CHECK(membership(g, cvec({0.9, 0.0}), 40, 0.01) == Membership::inside);
    CHECK(membership(g, cvec({1.0, 0.5}), 40, 0.01) == Membership::boundary_band);
}

TEST_CASE("conjugate radii residual") {
    const auto g = geometric(2);
    CHECK(conjugate_radii_residual(g, {1.0, 1.0}, 40) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(conjugate_radii_residual(g, {0.5, 0.5}, 40) == doctest::Approx(0.5).epsilon(1e-12));

    const auto ball = entropy_family(2, +1, 0.5);
    const double isq = 1.0 / std::sqrt(2.0);
    CHECK(conjugate_radii_residual(ball, {isq, isq}, 400) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("holder midpoints") {
    CHECK(holder_midpoint({0.7, 0.2}, {0.7, 0.2}, 0.5) == std::vector<double>{0.7, 0.2});
    const auto mid = holder_midpoint({1.0, 4.0}, {4.0, 1.0}, 0.5);
    CHECK(mid[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(mid[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(holder_midpoint({0.3, 0.9}, {0.5, 0.1}, 1.0) == std::vector<double>{0.3, 0.9});
}

TEST_CASE("psi estimates are convex in s") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> pt(-2.0, 1.5), tt(0.05, 0.95);
    for (int trial = 0; trial < 300; ++trial) {
        const auto c = trial_oracle(trial, rng);
        const std::vector<double> s1{pt(rng), pt(rng)}, s2{pt(rng), pt(rng)};
        const double t = tt(rng);
        const std::vector<double> mid{t * s1[0] + (1 - t) * s2[0], t * s1[1] + (1 - t) * s2[1]};
        const double lhs = psi_estimate(c, mid, 24).value;
        const double rhs =
            t * psi_estimate(c, s1, 24).value + (1 - t) * psi_estimate(c, s2, 24).value;
        CHECK(lhs <= rhs + 1e-12);
    }
}

TEST_CASE("membership survives weighted geometric means") {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> mod(0.05, 1.2), tt(0.1, 0.9);
    int tested = 0;
    for (int trial = 0; trial < 600 && tested < 200; ++trial) {
        const auto c = trial_oracle(trial, rng);
        const std::vector<double> p{mod(rng), mod(rng)}, q{mod(rng), mod(rng)};
        if (membership(c, p, 24, 1e-9) != Membership::inside) continue;
        if (membership(c, q, 24, 1e-9) != Membership::inside) continue;
        ++tested;
        const auto mid = holder_midpoint(p, q, tt(rng));
        CHECK(membership(c, mid, 24, 1e-9) != Membership::outside);
    }
    CHECK(tested == 200);
}

TEST_CASE("estimates are phase invariant") {
    std::mt19937 rng(107);
    std::uniform_real_distribution<double> mod(0.05, 1.5), ang(0.0, 6.28);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = trial_oracle(trial, rng);
        std::vector<std::complex<double>> z, w;
        for (int i = 0; i < 2; ++i) {
            const double m = mod(rng), t = ang(rng);
            z.emplace_back(m, 0.0);
            w.emplace_back(m * std::cos(t), m * std::sin(t));
        }
        const double a = psi_estimate(c, log_map(modulus_map(z)), 24).value;
        const double b = psi_estimate(c, log_map(modulus_map(w)), 24).value;
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("membership is closed under coordinatewise shrinking") {
    std::mt19937 rng(109);
    std::uniform_real_distribution<double> mod(0.05, 1.2), fac(0.1, 1.0);
    int tested = 0;
    for (int trial = 0; trial < 600 && tested < 200; ++trial) {
        const auto c = trial_oracle(trial, rng);
        const std::vector<double> z{mod(rng), mod(rng)};
        if (membership(c, z, 24, 1e-9) != Membership::inside) continue;
        ++tested;
        const std::vector<double> w{fac(rng) * z[0], fac(rng) * z[1]};
        CHECK(membership(c, w, 24, 1e-9) == Membership::inside);
    }
    CHECK(tested == 200);
}

TEST_CASE("tail root growth stays inside the support range") {
    std::mt19937 rng(113);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = trial_oracle(trial, rng);
        const int K = 40;
        double lo = kInf, hi = -kInf;
        for (int i = 1; i < 24; ++i) {
            const double t = static_cast<double>(i) / 24.0;
            const double nh = -support_estimate(c, SimplexDirection({t, 1.0 - t}), K, 0.1).value;
            lo = std::min(lo, nh);
            hi = std::max(hi, nh);
        }
        double tail = -kInf;
        for (int k = K / 2; k <= K; ++k)
            for (const auto& J : enumerate_by_degree(2, k)) {
                const double lm = c.log_modulus(J);
                if (!std::isinf(lm)) tail = std::max(tail, lm / static_cast<double>(J.degree()));
            }
        CHECK(lo <= tail + 1e-9);
        CHECK(tail <= hi + 1e-9);
    }
}

TEST_CASE("log of the gauge equals psi on the log image") {
    std::mt19937 rng(127);
    std::uniform_real_distribution<double> pt(-2.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = trial_oracle(trial, rng);
        const std::vector<double> s{pt(rng), pt(rng)};
        const std::vector<double> z{std::exp(s[0]), std::exp(s[1])};
        const double psi = psi_estimate(c, log_map(z), 24).value;
        CHECK(std::log(gauge_estimate(c, z, 24)) == doctest::Approx(psi).epsilon(1e-12));
        // radial along the normalized direction carries the same information
        const double n = std::hypot(z[0], z[1]);
        const std::vector<double> u{z[0] / n, z[1] / n};
        const double R = radial_estimate(c, u, 24);
        if (std::isfinite(R) && R > 0.0)
            CHECK(-std::log(R) == doctest::Approx(psi - std::log(n)).epsilon(1e-9));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convdom/coefficients.hpp"
#include "convdom/errors.hpp"
#include "convdom/stardom.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace convdom;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double l2(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

std::vector<double> unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

} // namespace

TEST_CASE("radial values of the standard domains") {
    const auto ball = star_ball(2);
    for (double t : {0.0, 0.4, 1.1, 2.9})
        CHECK(radial(ball, unit(t)) == doctest::Approx(1.0).epsilon(1e-9));

    const auto pd = star_polydisc({1.0, 2.0});
    CHECK(radial(pd, {1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(radial(pd, {0.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-9));

    const auto hyper = star_hyperbolic(2);
    CHECK(radial(hyper, {1.0, 0.0}) == kInf);
    CHECK(radial(hyper, unit(0.25)) < kInf);
}

TEST_CASE("gauge values and homogeneity") {
    const auto ball = star_ball(2);
    CHECK(gauge(ball, {0.3, 0.4}) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(gauge(ball, {0.0, 0.0}) == 0.0);

    const auto pd = star_polydisc({1.0, 1.0});
    CHECK(gauge(pd, {0.2, 0.8}) == doctest::Approx(0.8).epsilon(1e-9));

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const std::vector<double> x{uni(rng), uni(rng)};
        if (l2(x) < 1e-6) continue;
        CHECK(gauge(ball, {2.0 * x[0], 2.0 * x[1]}) ==
              doctest::Approx(2.0 * gauge(ball, x)).epsilon(1e-9));
    }
    // unbounded rays carry zero gauge
    CHECK(gauge(star_hyperbolic(2), {5.0, 0.0}) == 0.0);
}

TEST_CASE("gauge and radial are reciprocal along rays") {
    const auto pd = star_polydisc({1.0, 2.0});
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> x{uni(rng), uni(rng)};
        const double n = l2(x);
        if (n < 1e-6) continue;
        const double rho = radial(pd, {x[0] / n, x[1] / n});
        CHECK(gauge(pd, x) * rho == doctest::Approx(n).epsilon(1e-9));
    }
}

TEST_CASE("domains coincide with their gauge sublevel sets") {
    const auto pd = star_polydisc({1.0, 2.0});
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(-2.5, 2.5);
    for (int t = 0; t < 300; ++t) {
        const std::vector<double> x{uni(rng), uni(rng)};
        if (l2(x) < 1e-6) continue;
        const double g = gauge(pd, x);
        if (std::abs(g - 1.0) < 1e-6) continue; // skip the boundary shell
        CHECK(pd.member(x) == (g < 1.0));
    }
}

TEST_CASE("convex domains have subadditive gauges") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (const auto& d : {star_ball(2), star_polydisc({1.0, 2.0})}) {
        for (int t = 0; t < 100; ++t) {
            const std::vector<double> x{uni(rng), uni(rng)}, y{uni(rng), uni(rng)};
            if (l2(x) < 1e-6 || l2(y) < 1e-6) continue;
            const std::vector<double> s{x[0] + y[0], x[1] + y[1]};
            if (l2(s) < 1e-6) continue;
            CHECK(gauge(d, s) <= gauge(d, x) + gauge(d, y) + 1e-9);
        }
    }
}

TEST_CASE("radial varies continuously over proper domains") {
    const auto pd = star_polydisc({1.0, 2.0});
    const int m = 256;
    double prev = radial(pd, unit(0.0));
    for (int i = 1; i <= m; ++i) {
        const double cur = radial(pd, unit(2.0 * std::numbers::pi * i / m));
        CHECK(std::abs(cur - prev) < 0.15); // Lipschitz-style bound on the sampled grid
        prev = cur;
    }
}

TEST_CASE("proper star verification") {
    std::vector<std::vector<double>> rays;
    for (int i = 0; i < 64; ++i) rays.push_back(unit(2.0 * std::numbers::pi * (i + 0.5) / 64));

    SUBCASE("the ball is proper") {
        const auto rep = proper_star_check(star_ball(2), rays);
        CHECK(rep.proper);
        CHECK(rep.origin_interior);
    }
    SUBCASE("annulus-like membership fails the interior precondition") {
        StarDomain annulus(2, [](const std::vector<double>& x) {
            const double n = l2(x);
            return 0.5 < n && n < 1.0;
        });
        const auto rep = proper_star_check(annulus, rays);
        CHECK(!rep.proper);
        CHECK(!rep.origin_interior);
    }
    SUBCASE("a detached shell piece flags its rays") {
        StarDomain broken(2, [](const std::vector<double>& x) {
            const double n = l2(x);
            if (n < 1.0) return true;
            return 1.5 < n && n < 1.6 && x[0] > 0.95 * n;
        });
        const auto rep = proper_star_check(broken, rays);
        CHECK(!rep.proper);
        CHECK(rep.origin_interior);
        CHECK(!rep.offending_rays.empty());
        for (const auto& v : rep.offending_rays) CHECK(v[0] > 0.9);
    }
}

TEST_CASE("the ball-to-domain map as displayed") {
    const auto ball = star_ball(2);
    // on the unit ball the factor is |x|/(2-|x|): not the identity
    const auto y = phi_map(ball, {0.5, 0.0});
    CHECK(y[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(y[1] == doctest::Approx(0.0).epsilon(1e-12));

    const auto zero = phi_map(ball, {0.0, 0.0});
    CHECK(zero == std::vector<double>{0.0, 0.0});

    // images stay on the input ray
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> uni(-0.7, 0.7);
    const auto pd = star_polydisc({1.0, 2.0});
    for (int t = 0; t < 50; ++t) {
        const std::vector<double> x{uni(rng), uni(rng)};
        if (l2(x) < 1e-3) continue;
        const auto img = phi_map(pd, x);
        CHECK(img[0] * x[1] == doctest::Approx(img[1] * x[0]).epsilon(1e-9));
        CHECK(pd.member(img));
    }

    // boundary approach: images approach the boundary point rho(v) v
    const auto near = phi_map(ball, {0.999999, 0.0});
    CHECK(near[0] == doctest::Approx(1.0).epsilon(1e-4));

    CHECK_THROWS_AS(phi_map(ball, {1.5, 0.0}), input_error);
}

TEST_CASE("series domains adapt to star domains") {
    const auto d = star_from_series(geometric(2), 40);
    CHECK(d.member({0.9, -0.9}));
    CHECK(!d.member({1.1, 0.1}));
    CHECK(radial(d, {1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-6));
    const double isq = 1.0 / std::sqrt(2.0);
    CHECK(radial(d, {isq, isq}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
}

#include "convdom/logconvex.hpp"
#include "convdom/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace convdom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// <a, s> with the convention 0 * (-inf) = 0, so that directions supported
/// away from -inf coordinates stay finite.
double dot_zero_conv(const std::vector<double>& a, const std::vector<double>& s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        acc += a[i] * s[i];
    }
    return acc;
}

double l2_norm(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

/// Deterministic direction sample of PS_N including the vertices.
std::vector<SimplexDirection> simplex_grid(int dimension, int resolution) {
    std::vector<SimplexDirection> dirs;
    for (const auto& J : enumerate_by_degree(dimension, resolution))
        dirs.push_back(normalize(J));
    return dirs;
}

const std::vector<SimplexDirection>& cached_directions(int dimension) {
    static std::map<int, std::vector<SimplexDirection>> cache;
    auto it = cache.find(dimension);
    if (it == cache.end()) {
        const int res = dimension == 1 ? 1 : (dimension == 2 ? 1024 : (dimension == 3 ? 48 : 12));
        it = cache.emplace(dimension, simplex_grid(dimension, res)).first;
    }
    return it->second;
}

// small dense solver, partial pivoting; returns false when singular
bool solve_linear(std::vector<std::vector<double>> A, std::vector<double> b,
                  std::vector<double>& x) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (std::abs(A[piv][col]) < 1e-14) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t ri = n; ri-- > 0;) {
        double acc = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c) acc -= A[ri][c] * x[c];
        x[ri] = acc / A[ri][ri];
    }
    return true;
}

} // namespace

double HalfSpace::evaluate(const std::vector<double>& s) const {
    if (static_cast<int>(s.size()) != gradient.dimension())
        throw input_error("half-space evaluated at point of wrong dimension");
    return dot_zero_conv(gradient.entries(), s) + offset;
}

ConvexLogDomain::ConvexLogDomain(int dimension, SupportFn support, DefiningFn defining,
                                 std::string finiteness_hint)
    : dimension_(dimension),
      support_(std::move(support)),
      defining_(std::move(defining)),
      finiteness_hint_(std::move(finiteness_hint)) {
    if (dimension_ < 1)
        throw input_error("convex log-domain needs dimension >= 1");
    if (!support_)
        throw input_error("convex log-domain needs a support oracle");
}

double ConvexLogDomain::support(const SimplexDirection& alpha) const {
    if (alpha.dimension() != dimension_)
        throw input_error("support query of wrong dimension");
    return support_(alpha);
}

double ConvexLogDomain::defining(const std::vector<double>& s) const {
    if (!defining_)
        throw input_error("domain carries no defining function");
    if (static_cast<int>(s.size()) != dimension_)
        throw input_error("defining query of wrong dimension");
    return defining_(s);
}

double support_of_point_cloud(const std::vector<std::vector<double>>& cloud,
                              const SimplexDirection& alpha) {
    if (cloud.empty())
        throw input_error("support of an empty point cloud");
    double best = -kInf;
    for (const auto& x : cloud) {
        if (static_cast<int>(x.size()) != alpha.dimension())
            throw input_error("point cloud dimension mismatch");
        best = std::max(best, dot_zero_conv(alpha.entries(), x));
    }
    return best;
}

GridFunction::GridFunction(std::vector<Axis> axes) : axes_(std::move(axes)) {
    if (axes_.empty())
        throw input_error("grid function needs at least one axis");
    std::size_t total = 1;
    for (const auto& a : axes_) {
        if (a.count < 1 || !(a.hi >= a.lo))
            throw input_error("grid axis needs count >= 1 and hi >= lo");
        total *= static_cast<std::size_t>(a.count);
    }
    values_.assign(total, 0.0);
}

GridFunction GridFunction::sample(std::vector<Axis> axes,
                                  const std::function<double(const std::vector<double>&)>& fn) {
    GridFunction g(std::move(axes));
    for (std::size_t i = 0; i < g.total_points(); ++i) g.value(i) = fn(g.point(i));
    return g;
}

std::vector<double> GridFunction::point(std::size_t flat) const {
    std::vector<double> p(axes_.size());
    for (std::size_t d = axes_.size(); d-- > 0;) {
        const auto& a = axes_[d];
        p[d] = a.coord(static_cast<int>(flat % static_cast<std::size_t>(a.count)));
        flat /= static_cast<std::size_t>(a.count);
    }
    return p;
}

GridFunction legendre_transform(const GridFunction& f, std::vector<GridFunction::Axis> dual_axes,
                                double cap) {
    if (static_cast<int>(dual_axes.size()) != f.dimension())
        throw input_error("dual grid dimension mismatch");

    // gather the finite part of f once
    std::vector<std::vector<double>> xs;
    std::vector<double> fx;
    for (std::size_t i = 0; i < f.total_points(); ++i) {
        const double v = f.value(i);
        if (std::isinf(v)) continue;
        xs.push_back(f.point(i));
        fx.push_back(v);
    }

    GridFunction out(std::move(dual_axes));
    for (std::size_t oi = 0; oi < out.total_points(); ++oi) {
        const auto y = out.point(oi);
        double best = -kInf;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            double dot = 0.0;
            for (std::size_t d = 0; d < y.size(); ++d) dot += xs[k][d] * y[d];
            best = std::max(best, dot - fx[k]);
        }
        out.value(oi) = (best > cap) ? kInf : best;
    }
    return out;
}

namespace {

/// Entries >= 1 summing to q, close to alpha*q in l1 (largest-remainder fixup).
std::vector<long long> apportion(const SimplexDirection& alpha, long long q) {
    const int n = alpha.dimension();
    std::vector<long long> j(static_cast<std::size_t>(n));
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        j[static_cast<std::size_t>(i)] =
            std::max<long long>(1, static_cast<long long>(std::floor(alpha[i] * static_cast<double>(q))));
        sum += j[static_cast<std::size_t>(i)];
    }
    while (sum < q) { // raise the entry lagging most behind its target
        int best = 0;
        double best_def = -kInf;
        for (int i = 0; i < n; ++i) {
            const double deficit = alpha[i] * static_cast<double>(q) - j[static_cast<std::size_t>(i)];
            if (deficit > best_def) {
                best_def = deficit;
                best = i;
            }
        }
        ++j[static_cast<std::size_t>(best)];
        ++sum;
    }
    while (sum > q) { // lower the entry furthest above its target, keeping >= 1
        int best = -1;
        double best_exc = -kInf;
        for (int i = 0; i < n; ++i) {
            if (j[static_cast<std::size_t>(i)] <= 1) continue;
            const double excess = j[static_cast<std::size_t>(i)] - alpha[i] * static_cast<double>(q);
            if (excess > best_exc) {
                best_exc = excess;
                best = i;
            }
        }
        if (best < 0) break; // q < n cannot hold entries >= 1
        --j[static_cast<std::size_t>(best)];
        --sum;
    }
    return j;
}

} // namespace

MultiIndex rational_simplex_approx(const SimplexDirection& alpha, int precision,
                                   long max_denominator) {
    if (precision < 1)
        throw input_error("rational_simplex_approx needs precision >= 1");
    const int n = alpha.dimension();
    if (n == 1) return MultiIndex(std::vector<long long>{1});

    const double bound = 1.0 / static_cast<double>(precision);
    const long long q0 = std::max<long long>(n, static_cast<long long>(std::ceil(2.0 * n * precision)));
    for (long long q = q0; q <= max_denominator; ++q) {
        std::vector<long long> j = apportion(alpha, q);
        double dist = 0.0;
        for (int i = 0; i < n; ++i)
            dist += std::abs(static_cast<double>(j[static_cast<std::size_t>(i)]) /
                                 static_cast<double>(q) -
                             alpha[i]);
        if (dist < bound) return MultiIndex(std::move(j)).reduced();
    }
    throw numeric_error("precision unreachable: no denominator <= " +
                        std::to_string(max_denominator) + " approximates the direction to 1/" +
                        std::to_string(precision));
}

namespace {

std::vector<HalfSpace> hull_halfspaces_2d(const std::vector<std::vector<double>>& pts) {
    // facet normals live on PS_2: alpha = (t, 1-t); the supporting offset is the
    // upper envelope of the lines t -> v2 + t (v1 - v2)
    struct Line {
        double slope, intercept; // value(t) = intercept + slope * t
    };
    std::vector<Line> lines;
    for (const auto& v : pts) lines.push_back({v[0] - v[1], v[1]});
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        if (a.slope != b.slope) return a.slope < b.slope;
        return a.intercept < b.intercept;
    });
    // keep only the top line per slope
    std::vector<Line> uniq;
    for (const auto& l : lines) {
        if (!uniq.empty() && uniq.back().slope == l.slope) uniq.back() = l;
        else uniq.push_back(l);
    }
    // upper envelope by the convex-hull-trick stack
    auto meet = [](const Line& a, const Line& b) {
        return (a.intercept - b.intercept) / (b.slope - a.slope);
    };
    std::vector<Line> env;
    for (const auto& l : uniq) {
        while (env.size() >= 2 && meet(env[env.size() - 2], l) <= meet(env[env.size() - 2], env.back()))
            env.pop_back();
        if (env.size() == 1 && l.slope == env.back().slope) env.pop_back();
        env.push_back(l);
    }
    std::vector<HalfSpace> hs;
    double max1 = -kInf, max2 = -kInf;
    for (const auto& v : pts) {
        max1 = std::max(max1, v[0]);
        max2 = std::max(max2, v[1]);
    }
    hs.push_back({SimplexDirection({1.0, 0.0}), -max1});
    hs.push_back({SimplexDirection({0.0, 1.0}), -max2});
    for (std::size_t i = 0; i + 1 < env.size(); ++i) {
        const double t = meet(env[i], env[i + 1]);
        if (!(t > 0.0 && t < 1.0)) continue;
        const double h = env[i].intercept + env[i].slope * t;
        hs.push_back({SimplexDirection({t, 1.0 - t}), -h});
    }
    return hs;
}

std::vector<HalfSpace> hull_halfspaces_nd(const std::vector<std::vector<double>>& pts, int n) {
    std::vector<HalfSpace> hs;
    for (int i = 0; i < n; ++i) {
        double m = -kInf;
        for (const auto& v : pts) m = std::max(m, v[static_cast<std::size_t>(i)]);
        std::vector<double> g(static_cast<std::size_t>(n), 0.0);
        g[static_cast<std::size_t>(i)] = 1.0;
        hs.push_back({SimplexDirection(std::move(g)), -m});
    }
    if (pts.size() < 2 || n < 2) return hs;

    // candidate facet normals from N-subsets of the points: alpha equalizes the
    // subset's dot products, sums to one, and must support the whole cloud
    std::vector<std::size_t> comb(static_cast<std::size_t>(n));
    std::function<void(std::size_t, int)> visit = [&](std::size_t start, int depth) {
        if (depth == n) {
            std::vector<std::vector<double>> A;
            std::vector<double> b;
            for (int r = 0; r + 1 < n; ++r) {
                std::vector<double> row(static_cast<std::size_t>(n));
                for (int c = 0; c < n; ++c)
                    row[static_cast<std::size_t>(c)] =
                        pts[comb[static_cast<std::size_t>(r)]][static_cast<std::size_t>(c)] -
                        pts[comb[static_cast<std::size_t>(n - 1)]][static_cast<std::size_t>(c)];
                A.push_back(std::move(row));
                b.push_back(0.0);
            }
            A.push_back(std::vector<double>(static_cast<std::size_t>(n), 1.0));
            b.push_back(1.0);
            std::vector<double> alpha;
            if (!solve_linear(A, b, alpha)) return;
            for (double& a : alpha) {
                if (a < -1e-10) return;
                if (a < 0.0) a = 0.0;
            }
            SimplexDirection dir = SimplexDirection::from_weights(alpha);
            double h = -kInf, h_subset = -kInf;
            for (std::size_t p = 0; p < pts.size(); ++p)
                h = std::max(h, dot_zero_conv(dir.entries(), pts[p]));
            for (int r = 0; r < n; ++r)
                h_subset = std::max(h_subset,
                                    dot_zero_conv(dir.entries(), pts[comb[static_cast<std::size_t>(r)]]));
            if (h > h_subset + 1e-9) return; // subset does not support the hull
            for (const auto& existing : hs) {
                double d = std::abs(existing.offset + h);
                for (int c = 0; c < n; ++c) d += std::abs(existing.gradient[c] - dir[c]);
                if (d < 1e-10) return;
            }
            hs.push_back({dir, -h});
            return;
        }
        for (std::size_t i = start; i < pts.size(); ++i) {
            comb[static_cast<std::size_t>(depth)] = i;
            visit(i + 1, depth + 1);
        }
    };
    if (pts.size() >= static_cast<std::size_t>(n)) visit(0, 0);
    return hs;
}

} // namespace

ConvexLogDomain log_convex_hull(const std::vector<std::vector<double>>& polyradii) {
    if (polyradii.empty())
        throw input_error("log_convex_hull of an empty list");
    const int n = static_cast<int>(polyradii.front().size());
    if (n < 1)
        throw input_error("polyradius needs dimension >= 1");

    std::vector<std::vector<double>> pts;
    for (const auto& r : polyradii) {
        if (static_cast<int>(r.size()) != n)
            throw input_error("polyradii of mismatched dimension");
        std::vector<double> v(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (!(r[i] > 0.0))
                throw input_error("polyradius entries must be positive");
            v[i] = std::log(r[i]);
        }
        pts.push_back(std::move(v));
    }
    // drop componentwise-dominated corners; they never move the hull
    std::vector<std::vector<double>> keep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
            if (i == j) continue;
            bool le = true, strict_or_first = (j < i);
            for (int c = 0; c < n; ++c) {
                if (pts[i][static_cast<std::size_t>(c)] > pts[j][static_cast<std::size_t>(c)]) le = false;
                if (pts[i][static_cast<std::size_t>(c)] < pts[j][static_cast<std::size_t>(c)])
                    strict_or_first = true;
            }
            dominated = le && strict_or_first;
        }
        if (!dominated) keep.push_back(pts[i]);
    }

    auto support = [keep](const SimplexDirection& alpha) {
        double best = -kInf;
        for (const auto& v : keep) best = std::max(best, dot_zero_conv(alpha.entries(), v));
        return best;
    };
    std::vector<HalfSpace> hs =
        (n == 2) ? hull_halfspaces_2d(keep) : hull_halfspaces_nd(keep, n);
    auto defining = [hs](const std::vector<double>& s) {
        double worst = -kInf;
        for (const auto& h : hs) worst = std::max(worst, h.evaluate(s));
        return worst;
    };
    ConvexLogDomain G(n, support, defining, "finite on all of PS_N");
    G.set_halfspaces(std::move(hs));
    return G;
}

CompletenessReport completeness_check(const ConvexLogDomain& G,
                                      const std::vector<std::vector<double>>& samples,
                                      double band, double tol) {
    if (!G.has_defining())
        throw input_error("completeness_check needs a defining oracle");
    CompletenessReport report;
    report.complete = true;
    for (const auto& s : samples) {
        if (std::abs(G.defining(s)) >= band) continue;
        double sup = 0.0;
        for (double c : s) sup = std::max(sup, std::abs(c));
        const double h = 1e-6 * (1.0 + sup);
        std::vector<double> grad(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<double> up(s), dn(s);
            up[i] += h;
            dn[i] -= h;
            grad[i] = (G.defining(up) - G.defining(dn)) / (2.0 * h);
        }
        const double norm = l2_norm(grad);
        if (norm < 1e-10)
            throw numeric_error("degenerate defining function: vanishing gradient near boundary");
        bool ok = true;
        for (double g : grad)
            if (g / norm < -tol) ok = false;
        if (!ok) {
            report.complete = false;
            report.offending.push_back(s);
        }
    }
    return report;
}

double distance_to_boundary(const ConvexLogDomain& G, const std::vector<double>& s) {
    if (static_cast<int>(s.size()) != G.dimension())
        throw input_error("distance query of wrong dimension");
    double best = kInf;
    for (const auto& alpha : cached_directions(G.dimension())) {
        bool incompatible = false;
        for (int i = 0; i < alpha.dimension(); ++i)
            if (alpha[i] > 0.0 && std::isinf(s[static_cast<std::size_t>(i)]) &&
                s[static_cast<std::size_t>(i)] < 0)
                incompatible = true;
        if (incompatible) continue;
        const double h = G.support(alpha);
        if (std::isinf(h)) continue;
        const double val = (h - dot_zero_conv(alpha.entries(), s)) / l2_norm(alpha.entries());
        best = std::min(best, val);
    }
    return best;
}

namespace {

struct ActiveSimplex {
    std::vector<int> coords; // indices of finite coordinates of x

    SimplexDirection embed(const std::vector<double>& reduced, int full_dim) const {
        std::vector<double> e(static_cast<std::size_t>(full_dim), 0.0);
        for (std::size_t i = 0; i < coords.size(); ++i)
            e[static_cast<std::size_t>(coords[i])] = reduced[i];
        return SimplexDirection(std::move(e));
    }
};

} // namespace

SeparationResult separate_with_witness(const ConvexLogDomain& G, const std::vector<double>& x,
                                       double tol) {
    const int n = G.dimension();
    if (static_cast<int>(x.size()) != n)
        throw input_error("separation point of wrong dimension");

    ActiveSimplex act;
    for (int i = 0; i < n; ++i) {
        const double xi = x[static_cast<std::size_t>(i)];
        if (std::isnan(xi) || (std::isinf(xi) && xi > 0))
            throw input_error("separation point must have finite or -inf coordinates");
        if (!std::isinf(xi)) act.coords.push_back(i);
    }
    if (act.coords.empty())
        throw input_error("separation point has no finite coordinate");
    const int m = static_cast<int>(act.coords.size());

    if (G.has_defining() && G.defining(x) <= tol)
        throw input_error("point is not strictly outside the domain");

    auto gap_of = [&](const SimplexDirection& alpha) {
        const double h = G.support(alpha);
        if (std::isinf(h) && h > 0) return -kInf;
        return dot_zero_conv(alpha.entries(), x) - h;
    };

    // maximize the (concave) support gap over the simplex of active coordinates;
    // barycenter goes first so that flat maxima keep the central direction
    std::vector<double> best_r(static_cast<std::size_t>(m), 1.0 / m);
    double best_gap = gap_of(act.embed(best_r, n));
    if (m > 1) {
        const int res = (m == 2) ? 512 : 16;
        for (const auto& J : enumerate_by_degree(m, res)) {
            std::vector<double> r(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                r[static_cast<std::size_t>(i)] = static_cast<double>(J[i]) / res;
            const double g = gap_of(act.embed(r, n));
            if (g > best_gap) {
                best_gap = g;
                best_r = r;
            }
        }
        // local hill climb along simplex tangents, halving the step
        double step = 1.0 / ((m == 2) ? 512.0 : 16.0);
        while (step > 1e-7) {
            bool moved = false;
            for (int i = 0; i < m && !moved; ++i) {
                for (int j = 0; j < m && !moved; ++j) {
                    if (i == j) continue;
                    std::vector<double> r(best_r);
                    if (r[static_cast<std::size_t>(j)] < step) continue;
                    r[static_cast<std::size_t>(i)] += step;
                    r[static_cast<std::size_t>(j)] -= step;
                    const double g = gap_of(act.embed(r, n));
                    if (g > best_gap) {
                        best_gap = g;
                        best_r = r;
                        moved = true;
                    }
                }
            }
            if (!moved) step *= 0.5;
        }
    }

    if (!(best_gap > tol) && !G.has_defining())
        throw input_error("point is not verifiably outside the domain");
    if (!(best_gap > 0.0))
        throw numeric_error("separation failed: no positive support gap");

    const SimplexDirection alpha_star = act.embed(best_r, n);

    // rationalize: push the integer direction toward alpha_star until the gap
    // clears half the continuous optimum
    MultiIndex best_J;
    SimplexDirection best_dir = alpha_star;
    double best_rat_gap = -kInf;
    for (int prec = 1; prec <= (1 << 14); prec *= 2) {
        MultiIndex J_red =
            (m == 1) ? MultiIndex(std::vector<long long>{1})
                     : rational_simplex_approx(SimplexDirection(best_r), prec);
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < m; ++i)
            e[static_cast<std::size_t>(act.coords[static_cast<std::size_t>(i)])] =
                (m == 1) ? 1 : J_red[i];
        MultiIndex J(std::move(e));
        const SimplexDirection dir = normalize(J);
        const double g = gap_of(dir);
        if (g > best_rat_gap) {
            best_rat_gap = g;
            best_J = J;
            best_dir = dir;
        }
        if (g >= 0.5 * best_gap) break;
    }
    if (!(best_rat_gap > 0.0))
        throw numeric_error("separation failed: no rational direction keeps a positive margin");

    const double h = G.support(best_dir);
    HalfSpace hs{best_dir, -(h + 0.5 * best_rat_gap)};
    return {hs, best_J, hs.evaluate(x)};
}

HalfSpace separate(const ConvexLogDomain& G, const std::vector<double>& x, double tol) {
    return separate_with_witness(G, x, tol).halfspace;
}

double support_from_halfspaces(const std::vector<HalfSpace>& halfspaces,
                               const SimplexDirection& alpha) {
    if (halfspaces.empty()) return kInf;
    const int n = alpha.dimension();
    const std::size_t m = halfspaces.size();
    double best = kInf;

    // dual enumeration over subsets of size <= N
    std::vector<std::size_t> comb;
    std::function<void(std::size_t)> visit = [&](std::size_t start) {
        if (!comb.empty()) {
            const std::size_t k = comb.size();
            // least squares for sum lambda_i g_i = alpha via normal equations
            std::vector<std::vector<double>> At(k, std::vector<double>(k, 0.0));
            std::vector<double> rhs(k, 0.0);
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t b = 0; b < k; ++b)
                    for (int c = 0; c < n; ++c)
                        At[a][b] += halfspaces[comb[a]].gradient[c] * halfspaces[comb[b]].gradient[c];
                for (int c = 0; c < n; ++c) rhs[a] += halfspaces[comb[a]].gradient[c] * alpha[c];
            }
            std::vector<double> lambda;
            if (solve_linear(At, rhs, lambda)) {
                bool feasible = true;
                for (double l : lambda)
                    if (l < -1e-10) feasible = false;
                if (feasible) {
                    std::vector<double> resid(static_cast<std::size_t>(n));
                    for (int c = 0; c < n; ++c) {
                        double acc = -alpha[c];
                        for (std::size_t a = 0; a < k; ++a)
                            acc += std::max(lambda[a], 0.0) * halfspaces[comb[a]].gradient[c];
                        resid[static_cast<std::size_t>(c)] = acc;
                    }
                    double rnorm = 0.0;
                    for (double r : resid) rnorm = std::max(rnorm, std::abs(r));
                    if (rnorm <= 1e-9) {
                        double val = 0.0;
                        for (std::size_t a = 0; a < k; ++a)
                            val += std::max(lambda[a], 0.0) * (-halfspaces[comb[a]].offset);
                        best = std::min(best, val);
                    }
                }
            }
        }
        if (comb.size() == static_cast<std::size_t>(n)) return;
        for (std::size_t i = start; i < m; ++i) {
            comb.push_back(i);
            visit(i + 1);
            comb.pop_back();
        }
    };
    visit(0);
    return best;
}

std::string domain_to_json(const ConvexLogDomain& G, int support_sample_count) {
    nlohmann::json j;
    j["N"] = G.dimension();
    j["halfspaces"] = nlohmann::json::array();
    for (const auto& h : G.halfspaces()) {
        nlohmann::json hj;
        hj["grad"] = h.gradient.entries();
        hj["offset"] = h.offset;
        j["halfspaces"].push_back(hj);
    }
    j["support_samples"] = nlohmann::json::array();
    const int res = (G.dimension() == 2) ? std::max(1, support_sample_count - 1) : 8;
    for (const auto& alpha : simplex_grid(G.dimension(), res)) {
        const double h = G.support(alpha);
        if (std::isinf(h)) continue;
        nlohmann::json sj;
        sj["alpha"] = alpha.entries();
        sj["h"] = h;
        j["support_samples"].push_back(sj);
    }
    if (!G.finiteness_hint().empty()) j["finiteness_hint"] = G.finiteness_hint();
    return j.dump(2);
}

ConvexLogDomain domain_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed domain JSON: ") + e.what());
    }
    if (!j.contains("N"))
        throw input_error("domain JSON needs field \"N\"");
    const int n = j["N"].get<int>();

    std::vector<HalfSpace> hs;
    for (const auto& hj : j.value("halfspaces", nlohmann::json::array())) {
        std::vector<double> g = hj.at("grad").get<std::vector<double>>();
        hs.push_back({SimplexDirection(std::move(g)), hj.at("offset").get<double>()});
    }

    std::string hint = j.value("finiteness_hint", std::string());
    if (!hs.empty()) {
        auto support = [hs](const SimplexDirection& alpha) {
            return support_from_halfspaces(hs, alpha);
        };
        auto defining = [hs](const std::vector<double>& s) {
            double worst = -kInf;
            for (const auto& h : hs) worst = std::max(worst, h.evaluate(s));
            return worst;
        };
        ConvexLogDomain G(n, support, defining, hint);
        G.set_halfspaces(std::move(hs));
        return G;
    }

    // fall back on interpolating the stored support samples
    std::vector<std::pair<std::vector<double>, double>> samples;
    for (const auto& sj : j.value("support_samples", nlohmann::json::array()))
        samples.emplace_back(sj.at("alpha").get<std::vector<double>>(), sj.at("h").get<double>());
    if (samples.empty())
        throw input_error("domain JSON carries neither halfspaces nor support samples");
    auto support = [samples, n](const SimplexDirection& alpha) {
        if (n == 2) { // linear interpolation in the first barycentric coordinate
            double lo_a = -1.0, lo_h = 0.0, hi_a = 2.0, hi_h = 0.0;
            for (const auto& [a, h] : samples) {
                if (a[0] <= alpha[0] && a[0] > lo_a) { lo_a = a[0]; lo_h = h; }
                if (a[0] >= alpha[0] && a[0] < hi_a) { hi_a = a[0]; hi_h = h; }
            }
            if (lo_a < -0.5 || hi_a > 1.5) return kInf;
            if (hi_a == lo_a) return lo_h;
            const double t = (alpha[0] - lo_a) / (hi_a - lo_a);
            return (1.0 - t) * lo_h + t * hi_h;
        }
        double best_d = kInf, best_h = kInf;
        for (const auto& [a, h] : samples) {
            double d = 0.0;
            for (int i = 0; i < n; ++i) d += std::abs(a[static_cast<std::size_t>(i)] - alpha[i]);
            if (d < best_d) { best_d = d; best_h = h; }
        }
        return best_h;
    };
    return ConvexLogDomain(n, support, nullptr, hint);
}

ConvexLogDomain load_domain(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open domain file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return domain_from_json(ss.str());
}

void save_domain(const ConvexLogDomain& G, const std::string& path, int support_sample_count) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("cannot write domain file: " + path);
    out << domain_to_json(G, support_sample_count) << '\n';
}

} // namespace convdom

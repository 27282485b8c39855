#pragma once

#include "convdom/lattice.hpp"

#include <functional>
#include <string>
#include <vector>

namespace convdom {

/// Open half-space { s : <gradient, s> + offset < 0 } with the gradient
/// normalized onto the probability simplex. With that normalization |offset|
/// is the l-infinity distance of the bounding hyperplane from the origin.
struct HalfSpace {
    SimplexDirection gradient;
    double offset = 0.0;

    double evaluate(const std::vector<double>& s) const;
    bool contains(const std::vector<double>& s) const { return evaluate(s) < 0.0; }
};

/// Convex domain G in logarithmic coordinates, described by its support
/// function on simplex directions (+inf allowed outside the normalized
/// effective domain) and, optionally, a defining function psi (negative
/// inside, zero on the boundary) and an explicit half-space list.
class ConvexLogDomain {
public:
    using SupportFn = std::function<double(const SimplexDirection&)>;
    using DefiningFn = std::function<double(const std::vector<double>&)>;

    ConvexLogDomain(int dimension, SupportFn support, DefiningFn defining = nullptr,
                    std::string finiteness_hint = "");

    int dimension() const { return dimension_; }
    double support(const SimplexDirection& alpha) const;
    bool has_defining() const { return static_cast<bool>(defining_); }
    double defining(const std::vector<double>& s) const;
    const std::string& finiteness_hint() const { return finiteness_hint_; }

    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
    void set_halfspaces(std::vector<HalfSpace> hs) { halfspaces_ = std::move(hs); }

private:
    int dimension_ = 0;
    SupportFn support_;
    DefiningFn defining_;
    std::string finiteness_hint_;
    std::vector<HalfSpace> halfspaces_;
};

/// max over the cloud of <alpha, x>. Errors on an empty cloud.
double support_of_point_cloud(const std::vector<std::vector<double>>& cloud,
                              const SimplexDirection& alpha);

/// Dense rectangular grid sample of an extended-real function. +inf marks
/// points outside the effective domain.
class GridFunction {
public:
    struct Axis {
        double lo = 0.0;
        double hi = 0.0;
        int count = 0;

        double step() const { return count > 1 ? (hi - lo) / (count - 1) : 0.0; }
        double coord(int i) const { return count > 1 ? lo + step() * i : lo; }
    };

    explicit GridFunction(std::vector<Axis> axes);

    static GridFunction sample(std::vector<Axis> axes,
                               const std::function<double(const std::vector<double>&)>& fn);

    int dimension() const { return static_cast<int>(axes_.size()); }
    const std::vector<Axis>& axes() const { return axes_; }
    std::size_t total_points() const { return values_.size(); }
    std::vector<double> point(std::size_t flat) const;

    double value(std::size_t flat) const { return values_[flat]; }
    double& value(std::size_t flat) { return values_[flat]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<Axis> axes_;
    std::vector<double> values_;
};

/// Legendre (Fenchel) conjugate f*(y) = sup_x { <x,y> - f(x) } by exhaustive
/// maximization over the input grid, evaluated on the dual grid. Results
/// beyond `cap` are published as +inf (lower semicontinuous extension of the
/// effective domain).
GridFunction legendre_transform(const GridFunction& f, std::vector<GridFunction::Axis> dual_axes,
                                double cap = 1e15);

/// Best integer direction: J in N^N with all entries >= 1 and
/// |J/|J| - alpha|_1 < 1/precision. Searches common denominators q = |J|
/// increasing from ceil(2*N*precision) and returns the gcd-reduced
/// representative of the first hit. Errors with "precision unreachable" past
/// `max_denominator`.
MultiIndex rational_simplex_approx(const SimplexDirection& alpha, int precision,
                                   long max_denominator = 1000000);

/// Convex hull of a union of polydisc log-images (lower-left orthants at
/// lambda(r^i)). Support function is exact in any dimension; the half-space
/// list is exact for N = 2 and assembled from axis normals plus validated
/// subset normals for N >= 3.
ConvexLogDomain log_convex_hull(const std::vector<std::vector<double>>& polyradii);

struct CompletenessReport {
    bool complete = false;
    std::vector<std::vector<double>> offending;
};

/// Checks that the outward normal of psi points into the closed positive
/// orthant at every near-boundary sample (|psi| < band), i.e. the recession
/// cone of {psi < 0} contains the negative orthant. Components are allowed
/// down to -tol; a vanishing gradient raises "degenerate defining function".
CompletenessReport completeness_check(const ConvexLogDomain& G,
                                      const std::vector<std::vector<double>>& samples,
                                      double band = 0.05, double tol = 1e-9);

struct SeparationResult {
    HalfSpace halfspace;
    MultiIndex witness; // integer direction; halfspace.gradient = witness/|witness|
    double gap = 0.0;   // <gradient, x> + offset at the separated point
};

/// Separating half-space with rational gradient: contains G, excludes x.
/// The point may carry -inf coordinates (limits toward the coordinate frame);
/// the gradient is then supported on the finite coordinates only.
SeparationResult separate_with_witness(const ConvexLogDomain& G, const std::vector<double>& x,
                                       double tol = 1e-9);
HalfSpace separate(const ConvexLogDomain& G, const std::vector<double>& x, double tol = 1e-9);

/// Signed distance-like quantity: inf over sampled simplex directions of
/// (h(alpha) - <alpha,s>) / |alpha|_2. Equals dist(s, boundary) for s inside
/// G (up to direction sampling); negative when s is verifiably outside.
/// -inf coordinates of s are treated as deep completeness directions.
double distance_to_boundary(const ConvexLogDomain& G, const std::vector<double>& s);

/// Support function of the intersection of half-spaces by dual enumeration:
/// h(alpha) = min { sum lambda_i (-d_i) : sum lambda_i g_i = alpha, lambda >= 0 },
/// +inf when alpha lies outside the cone of the gradients.
double support_from_halfspaces(const std::vector<HalfSpace>& halfspaces,
                               const SimplexDirection& alpha);

/// JSON: {"N":..,"halfspaces":[{"grad":[..],"offset":..}],
///        "support_samples":[{"alpha":[..],"h":..}]}.
std::string domain_to_json(const ConvexLogDomain& G, int support_sample_count = 33);
ConvexLogDomain domain_from_json(const std::string& json_text);
ConvexLogDomain load_domain(const std::string& path);
void save_domain(const ConvexLogDomain& G, const std::string& path, int support_sample_count = 33);

} // namespace convdom

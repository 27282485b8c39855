#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace convdom {

/// Exponent of a monomial: a point of N_0^N. Entries are validated non-negative.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<long long> entries);
    explicit MultiIndex(const std::vector<int>& entries);

    static MultiIndex zeros(int dimension);

    int dimension() const { return static_cast<int>(entries_.size()); }
    long long degree() const; // l1 norm |J|
    long long operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<long long>& entries() const { return entries_; }
    bool is_zero() const { return degree() == 0; }

    MultiIndex scaled(long long m) const;
    /// Divide all entries by their gcd; the zero index is returned unchanged.
    MultiIndex reduced() const;

    bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
    bool operator!=(const MultiIndex& o) const { return entries_ != o.entries_; }
    /// Canonical order: total degree, then lexicographic.
    bool operator<(const MultiIndex& o) const;

    std::string to_string() const;

private:
    std::vector<long long> entries_;
};

/// Point of the probability simplex PS_N: non-negative entries with unit l1 norm.
class SimplexDirection {
public:
    explicit SimplexDirection(std::vector<double> entries);

    /// Build from arbitrary non-negative weights by dividing out the l1 norm.
    static SimplexDirection from_weights(const std::vector<double>& weights);

    int dimension() const { return static_cast<int>(entries_.size()); }
    double operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& entries() const { return entries_; }

private:
    std::vector<double> entries_;
};

/// J/|J| as a simplex point. Errors on the zero index ("undefined direction").
SimplexDirection normalize(const MultiIndex& J);

double l1_distance(const SimplexDirection& a, const SimplexDirection& b);

/// Finite truncation of a direction strand: indices with degree in
/// [degree_lo, degree_hi] whose normalized direction lies within an l1 ball
/// around the center.
struct DirectionWindow {
    SimplexDirection center;
    double radius = 0.0;
    int degree_lo = 1;
    int degree_hi = 1;

    bool contains(const MultiIndex& J) const;
};

/// All J in N_0^N with |J| = degree, in lexicographic order.
/// Count is C(degree + N - 1, N - 1).
std::vector<MultiIndex> enumerate_by_degree(int dimension, int degree);

std::uint64_t count_by_degree(int dimension, int degree);

/// Indices selected by the window, ordered by degree then lexicographically.
/// May be empty; callers must handle.
std::vector<MultiIndex> window_indices(const DirectionWindow& w);

} // namespace convdom

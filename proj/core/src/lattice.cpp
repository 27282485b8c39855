#include "convdom/lattice.hpp"
#include "convdom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace convdom {

MultiIndex::MultiIndex(std::vector<long long> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw input_error("multi-index needs dimension >= 1");
    for (long long e : entries_)
        if (e < 0)
            throw input_error("multi-index entries must be non-negative");
}

MultiIndex::MultiIndex(const std::vector<int>& entries)
    : MultiIndex(std::vector<long long>(entries.begin(), entries.end())) {}

MultiIndex MultiIndex::zeros(int dimension) {
    return MultiIndex(std::vector<long long>(static_cast<std::size_t>(dimension), 0));
}

long long MultiIndex::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

MultiIndex MultiIndex::scaled(long long m) const {
    if (m < 0)
        throw input_error("multi-index scale factor must be non-negative");
    std::vector<long long> e(entries_);
    for (long long& v : e) v *= m;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::reduced() const {
    long long g = 0;
    for (long long e : entries_) g = std::gcd(g, e);
    if (g <= 1) return *this;
    std::vector<long long> e(entries_);
    for (long long& v : e) v /= g;
    return MultiIndex(std::move(e));
}

bool MultiIndex::operator<(const MultiIndex& o) const {
    const long long d = degree(), e = o.degree();
    if (d != e) return d < e;
    return entries_ < o.entries_;
}

std::string MultiIndex::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

SimplexDirection::SimplexDirection(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw input_error("simplex direction needs dimension >= 1");
    double sum = 0.0;
    for (double& e : entries_) {
        if (e < 0.0) {
            if (e < -1e-12)
                throw input_error("simplex direction entries must be non-negative");
            e = 0.0;
        }
        sum += e;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw input_error("simplex direction entries must sum to 1");
}

SimplexDirection SimplexDirection::from_weights(const std::vector<double>& weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0)
            throw input_error("simplex weights must be non-negative");
        sum += w;
    }
    if (!(sum > 0.0))
        throw input_error("simplex weights must not all vanish");
    std::vector<double> e(weights);
    for (double& v : e) v /= sum;
    return SimplexDirection(std::move(e));
}

SimplexDirection normalize(const MultiIndex& J) {
    const long long d = J.degree();
    if (d == 0)
        throw input_error("undefined direction: zero multi-index");
    std::vector<double> e(static_cast<std::size_t>(J.dimension()));
    for (int i = 0; i < J.dimension(); ++i)
        e[static_cast<std::size_t>(i)] = static_cast<double>(J[i]) / static_cast<double>(d);
    return SimplexDirection(std::move(e));
}

double l1_distance(const SimplexDirection& a, const SimplexDirection& b) {
    if (a.dimension() != b.dimension())
        throw input_error("simplex directions of mismatched dimension");
    double d = 0.0;
    for (int i = 0; i < a.dimension(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

bool DirectionWindow::contains(const MultiIndex& J) const {
    const long long d = J.degree();
    if (d < degree_lo || d > degree_hi) return false;
    // tiny slack so that boundary directions survive rounding
    return l1_distance(normalize(J), center) <= radius + 1e-12;
}

namespace {

void enumerate_rec(int dimension, int degree, std::vector<long long>& prefix,
                   std::vector<MultiIndex>& out) {
    if (dimension == 1) {
        prefix.push_back(degree);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int j = 0; j <= degree; ++j) {
        prefix.push_back(j);
        enumerate_rec(dimension - 1, degree - j, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> enumerate_by_degree(int dimension, int degree) {
    if (dimension < 1)
        throw input_error("dimension must be >= 1");
    if (degree < 0)
        throw input_error("degree must be >= 0");
    std::vector<MultiIndex> out;
    out.reserve(count_by_degree(dimension, degree));
    std::vector<long long> prefix;
    prefix.reserve(static_cast<std::size_t>(dimension));
    enumerate_rec(dimension, degree, prefix, out);
    return out;
}

std::uint64_t count_by_degree(int dimension, int degree) {
    // C(degree + dimension - 1, dimension - 1)
    std::uint64_t num = 1;
    for (int i = 1; i <= dimension - 1; ++i)
        num = num * static_cast<std::uint64_t>(degree + i) / static_cast<std::uint64_t>(i);
    return num;
}

std::vector<MultiIndex> window_indices(const DirectionWindow& w) {
    if (w.degree_lo < 1 || w.degree_hi < w.degree_lo)
        throw input_error("direction window needs 1 <= degree_lo <= degree_hi");
    if (w.radius < 0.0)
        throw input_error("direction window radius must be >= 0");
    std::vector<MultiIndex> out;
    for (int k = w.degree_lo; k <= w.degree_hi; ++k)
        for (auto& J : enumerate_by_degree(w.center.dimension(), k))
            if (w.contains(J)) out.push_back(std::move(J));
    return out;
}

} // namespace convdom

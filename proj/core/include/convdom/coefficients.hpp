#pragma once

#include "convdom/lattice.hpp"

#include <complex>
#include <functional>
#include <map>
#include <string>

namespace convdom {

/// Coefficient family of a formal power series about the origin, queried as
/// log|c_J|. The value -inf encodes c_J = 0. Coefficients are kept in log scale
/// throughout: every convergence-domain formula uses only |c_J|, and the
/// entropy families overflow doubles near degree 700 otherwise.
///
/// Oracles are immutable after construction and cheap to copy; the optional
/// complex value channel must satisfy |value(J)| = exp(log_modulus(J)).
class CoefficientOracle {
public:
    using LogModulusFn = std::function<double(const MultiIndex&)>;
    using ValueFn = std::function<std::complex<double>(const MultiIndex&)>;

    CoefficientOracle(int dimension, LogModulusFn log_modulus, ValueFn value = nullptr,
                      std::string name = "");

    int dimension() const { return dimension_; }
    double log_modulus(const MultiIndex& J) const;
    bool has_value() const { return static_cast<bool>(value_); }
    std::complex<double> value(const MultiIndex& J) const;
    const std::string& name() const { return name_; }

private:
    int dimension_ = 0;
    LogModulusFn log_modulus_;
    ValueFn value_;
    std::string name_;
};

/// The multi-variable geometric series: c_J = 1 for every J.
CoefficientOracle geometric(int dimension);

/// c_J = rho^{-|J|}.
CoefficientOracle scaled_monomial(int dimension, double rho);

/// log|c_J| = sign * weight * (|J| log|J| - sum_i j_i log j_i), with 0 log 0 = 0.
/// sign=+1, weight=1/2 converges precisely on the unit l2 ball; in general
/// sign=+1, weight=w converges on { sum |z_i|^{1/w} < 1 }.
CoefficientOracle entropy_family(int dimension, int sign, double weight);

CoefficientOracle entropy_ball(int dimension);   // entropy_family(+1, 1/2)
CoefficientOracle entropy_e_half(int dimension); // entropy_family(+1, 2)

/// Supported exactly on {k*base : k >= 0} with log|c_{k*base}| = log_c(k).
CoefficientOracle strand(const MultiIndex& base, std::function<double(long long)> log_c);

/// Sparse tabulated oracle; absent indices mean c_J = 0.
CoefficientOracle tabulated(int dimension, std::map<MultiIndex, double> log_entries,
                            std::map<MultiIndex, std::complex<double>> values = {},
                            std::string name = "table");

/// JSONL coefficient files: one object per line with fields "J" (int array),
/// "log_c" (number or the string "-inf"), optional "re"/"im". Absent indices
/// load as c_J = 0. Malformed lines and duplicate indices are reported with
/// their line number.
CoefficientOracle load_table(const std::string& path);

/// Write all indices with |J| <= max_degree and c_J != 0.
void save_table(const CoefficientOracle& oracle, int max_degree, const std::string& path);

} // namespace convdom

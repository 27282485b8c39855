#include "convdom/coefficients.hpp"
#include "convdom/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <utility>

namespace convdom {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double xlogx(double t) {
    return t > 0.0 ? t * std::log(t) : 0.0; // 0 log 0 := 0
}

} // namespace

CoefficientOracle::CoefficientOracle(int dimension, LogModulusFn log_modulus, ValueFn value,
                                     std::string name)
    : dimension_(dimension),
      log_modulus_(std::move(log_modulus)),
      value_(std::move(value)),
      name_(std::move(name)) {
    if (dimension_ < 1)
        throw input_error("coefficient oracle needs dimension >= 1");
    if (!log_modulus_)
        throw input_error("coefficient oracle needs a log-modulus rule");
}

double CoefficientOracle::log_modulus(const MultiIndex& J) const {
    if (J.dimension() != dimension_)
        throw input_error("multi-index dimension does not match oracle");
    return log_modulus_(J);
}

std::complex<double> CoefficientOracle::value(const MultiIndex& J) const {
    if (!value_)
        throw input_error("oracle '" + name_ + "' provides no complex values");
    if (J.dimension() != dimension_)
        throw input_error("multi-index dimension does not match oracle");
    return value_(J);
}

CoefficientOracle geometric(int dimension) {
    return CoefficientOracle(
        dimension, [](const MultiIndex&) { return 0.0; },
        [](const MultiIndex&) { return std::complex<double>(1.0, 0.0); }, "geometric");
}

CoefficientOracle scaled_monomial(int dimension, double rho) {
    if (!(rho > 0.0))
        throw input_error("scaled_monomial needs rho > 0");
    const double log_rho = std::log(rho);
    std::ostringstream name;
    name << "scaled_monomial(" << rho << ")";
    return CoefficientOracle(
        dimension,
        [log_rho](const MultiIndex& J) { return -static_cast<double>(J.degree()) * log_rho; },
        [rho](const MultiIndex& J) {
            return std::complex<double>(std::pow(rho, -static_cast<double>(J.degree())), 0.0);
        },
        name.str());
}

CoefficientOracle entropy_family(int dimension, int sign, double weight) {
    if (sign != 1 && sign != -1)
        throw input_error("entropy_family sign must be +1 or -1");
    if (!(weight > 0.0))
        throw input_error("entropy_family needs weight > 0");
    const double s = static_cast<double>(sign) * weight;
    std::ostringstream name;
    name << "entropy(" << (sign > 0 ? "+1" : "-1") << "," << weight << ")";
    auto lm = [s](const MultiIndex& J) {
        double acc = xlogx(static_cast<double>(J.degree()));
        for (int i = 0; i < J.dimension(); ++i) acc -= xlogx(static_cast<double>(J[i]));
        return s * acc;
    };
    return CoefficientOracle(
        dimension, lm,
        [lm](const MultiIndex& J) { return std::complex<double>(std::exp(lm(J)), 0.0); },
        name.str());
}

CoefficientOracle entropy_ball(int dimension) { return entropy_family(dimension, +1, 0.5); }

CoefficientOracle entropy_e_half(int dimension) { return entropy_family(dimension, +1, 2.0); }

CoefficientOracle strand(const MultiIndex& base, std::function<double(long long)> log_c) {
    if (base.degree() == 0)
        throw input_error("strand base must be a nonzero multi-index");
    if (!log_c)
        throw input_error("strand needs a log-coefficient rule");
    auto lm = [base, log_c](const MultiIndex& J) {
        if (J.is_zero()) return log_c(0);
        long long k = 0;
        for (int i = 0; i < base.dimension(); ++i) {
            if (base[i] == 0) {
                if (J[i] != 0) return kNegInf;
                continue;
            }
            const long long q = J[i] / base[i];
            if (q * base[i] != J[i]) return kNegInf;
            if (k == 0)
                k = q;
            else if (q != k)
                return kNegInf;
        }
        if (k == 0) return kNegInf;
        for (int i = 0; i < base.dimension(); ++i)
            if (J[i] != k * base[i]) return kNegInf;
        return log_c(k);
    };
    return CoefficientOracle(
        base.dimension(), lm,
        [lm](const MultiIndex& J) {
            const double v = lm(J);
            return std::complex<double>(std::isinf(v) ? 0.0 : std::exp(v), 0.0);
        },
        "strand" + base.to_string());
}

CoefficientOracle tabulated(int dimension, std::map<MultiIndex, double> log_entries,
                            std::map<MultiIndex, std::complex<double>> values,
                            std::string name) {
    auto table = std::make_shared<const std::map<MultiIndex, double>>(std::move(log_entries));
    CoefficientOracle::LogModulusFn lm = [table](const MultiIndex& J) {
        auto it = table->find(J);
        return it == table->end() ? kNegInf : it->second;
    };
    CoefficientOracle::ValueFn vf = nullptr;
    if (!values.empty()) {
        auto vtab = std::make_shared<const std::map<MultiIndex, std::complex<double>>>(
            std::move(values));
        vf = [vtab](const MultiIndex& J) {
            auto it = vtab->find(J);
            return it == vtab->end() ? std::complex<double>(0.0, 0.0) : it->second;
        };
    }
    return CoefficientOracle(dimension, std::move(lm), std::move(vf), std::move(name));
}

CoefficientOracle load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open coefficient file: " + path);

    std::map<MultiIndex, double> logs;
    std::map<MultiIndex, std::complex<double>> values;
    bool all_have_value = true;
    int dimension = -1;

    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw input_error(path + ": malformed line " + std::to_string(lineno) + ": " +
                              e.what());
        }
        if (!j.contains("J") || !j["J"].is_array() || !j.contains("log_c"))
            throw input_error(path + ": malformed line " + std::to_string(lineno) +
                              ": need fields \"J\" and \"log_c\"");
        std::vector<long long> e;
        for (const auto& v : j["J"]) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw input_error(path + ": malformed line " + std::to_string(lineno) +
                                  ": \"J\" must hold non-negative integers");
            e.push_back(v.get<long long>());
        }
        if (e.empty())
            throw input_error(path + ": malformed line " + std::to_string(lineno) +
                              ": empty multi-index");
        if (dimension < 0) dimension = static_cast<int>(e.size());
        if (static_cast<int>(e.size()) != dimension)
            throw input_error(path + ": malformed line " + std::to_string(lineno) +
                              ": inconsistent dimension");
        MultiIndex J(std::move(e));

        double lc;
        const auto& lj = j["log_c"];
        if (lj.is_string()) {
            if (lj.get<std::string>() != "-inf")
                throw input_error(path + ": malformed line " + std::to_string(lineno) +
                                  ": \"log_c\" string must be \"-inf\"");
            lc = kNegInf;
        } else if (lj.is_number()) {
            lc = lj.get<double>();
        } else {
            throw input_error(path + ": malformed line " + std::to_string(lineno) +
                              ": \"log_c\" must be a number or \"-inf\"");
        }

        if (!logs.emplace(J, lc).second)
            throw input_error(path + ": duplicate index " + J.to_string() + " at line " +
                              std::to_string(lineno));

        if (j.contains("re") || j.contains("im")) {
            const double re = j.value("re", 0.0);
            const double im = j.value("im", 0.0);
            values.emplace(J, std::complex<double>(re, im));
        } else {
            all_have_value = false;
        }
    }
    if (dimension < 0)
        throw input_error(path + ": empty coefficient table");
    if (!all_have_value) values.clear();
    return tabulated(dimension, std::move(logs), std::move(values), path);
}

void save_table(const CoefficientOracle& oracle, int max_degree, const std::string& path) {
    if (max_degree < 0)
        throw input_error("save_table needs max_degree >= 0");
    std::ofstream out(path, std::ios::binary); // LF line endings on every platform
    if (!out)
        throw input_error("cannot write coefficient file: " + path);
    for (int k = 0; k <= max_degree; ++k) {
        for (const auto& J : enumerate_by_degree(oracle.dimension(), k)) {
            const double lc = oracle.log_modulus(J);
            if (std::isinf(lc) && lc < 0) continue; // sparse: absent means zero
            nlohmann::json j;
            j["J"] = J.entries();
            j["log_c"] = lc;
            if (oracle.has_value()) {
                const auto v = oracle.value(J);
                j["re"] = v.real();
                j["im"] = v.imag();
            }
            out << j.dump() << '\n';
        }
    }
}

} // namespace convdom

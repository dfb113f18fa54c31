#pragma once

// Test-side oracles. Nothing here calls into the library's functional
// calculus; scalar formulas are written out longhand so they can disagree
// with the implementation.

#include <algorithm>
#include <cmath>
#include <utility>

#include "loewner/equations.hpp"
#include "loewner/furuta.hpp"
#include "loewner/matrix.hpp"
#include "loewner/params.hpp"

namespace oracle {

inline loewner::HermitianMatrix scalar(double x) { return loewner::HermitianMatrix({{x}}); }

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

// 2x2 symmetric [[a, b], [b, d]]: eigenvalues from the characteristic polynomial.
inline std::pair<double, double> eig2(double a, double b, double d) {
    const double mean = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), b);
    return {mean - rad, mean + rad};
}

// Plain triple loop, independent of Matrix::operator*.
inline loewner::Matrix naive_product(const loewner::Matrix& x, const loewner::Matrix& y) {
    const std::size_t n = x.dim();
    loewner::Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long double acc = 0.0L;
            for (std::size_t k = 0; k < n; ++k) acc += static_cast<long double>(x(i, k)) * y(k, j);
            out(i, j) = static_cast<double>(acc);
        }
    return out;
}

inline double rel_frobenius(const loewner::Matrix& got, const loewner::Matrix& want) {
    long double num = 0.0L, den = 0.0L;
    for (std::size_t i = 0; i < want.dim(); ++i)
        for (std::size_t j = 0; j < want.dim(); ++j) {
            const long double d = static_cast<long double>(got(i, j)) - want(i, j);
            num += d * d;
            den += static_cast<long double>(want(i, j)) * want(i, j);
        }
    return static_cast<double>(std::sqrt(num / std::max(den, 1e-300L)));
}

struct Sides {
    double lhs;
    double rhs;
};

// Closed forms of every inequality family at 1x1 operands a, b > 0.
inline Sides inequality_scalar(loewner::InequalityFamily f, double a, double b,
                               const loewner::ParamSet& ps) {
    using loewner::InequalityFamily;
    auto val = [&](const char* k) { return ps.get(k, "oracle"); };
    switch (f) {
        case InequalityFamily::furuta_B: {
            const double p = val("p"), q = val("q"), r = val("r");
            return {std::pow(std::pow(b, r) * std::pow(a, p), 1.0 / q), std::pow(b, (r + p) / q)};
        }
        case InequalityFamily::furuta_A: {
            const double p = val("p"), q = val("q"), r = val("r");
            return {std::pow(a, (r + p) / q), std::pow(std::pow(a, r) * std::pow(b, p), 1.0 / q)};
        }
        case InequalityFamily::grand_furuta: {
            const double p = val("p"), r = val("r"), s = val("s"), t = val("t");
            const double inner = std::pow(std::pow(a, -t) * std::pow(b, p), s);
            return {std::pow(a, 1.0 - t + r),
                    std::pow(std::pow(a, r) * inner, (1.0 - t + r) / ((p - t) * s + r))};
        }
        case InequalityFamily::complete_form: {
            const double p = val("p"), p0 = val("p0"), r = val("r");
            const double s = std::min(p, 2.0 * p0 + std::min(1.0, r));
            return {std::pow(std::pow(a, r) * std::pow(b, p0), (s + r) / (p0 + r)),
                    std::pow(std::pow(a, r) * std::pow(b, p), (s + r) / (p + r))};
        }
        case InequalityFamily::thm_1_9: {
            const double p = val("p"), r = val("r"), s = val("s"), t = val("t");
            const double inner = std::pow(std::pow(a, t) * std::pow(b, p), s);
            return {std::pow(a, 1.0 + t + r),
                    std::pow(std::pow(a, r) * inner, (1.0 + t + r) / ((p + t) * s + r))};
        }
        case InequalityFamily::thm_1_10: {
            const double p = val("p"), r = val("r"), s = val("s"), t = val("t");
            const double inner = std::pow(std::pow(a, t) * std::pow(b, p), s);
            return {std::pow(a, t + r), std::pow(std::pow(a, r) * inner, (t + r) / ((p + t) * s + r))};
        }
        case InequalityFamily::lowner_heinz: {
            const double al = val("alpha");
            return {std::pow(a, al), std::pow(b, al)};
        }
    }
    return {0.0, 0.0};
}

// Closed-form S of every equation family at 1x1 operands.
inline double equation_scalar(loewner::EquationFamily f, double a, double b,
                              const loewner::ParamSet& ps) {
    using loewner::EquationFamily;
    auto val = [&](const char* k) { return ps.get(k, "oracle"); };
    switch (f) {
        case EquationFamily::order_C4:
        case EquationFamily::chaotic_D4: {
            const double head = f == EquationFamily::order_C4 ? 1.0 : 0.0;
            const double p = val("p"), r = val("r"), s = val("s"), t = val("t");
            const double n = ps.get_n("oracle");
            const double h = std::pow(std::pow(a, r) * std::pow(std::pow(a, t) * std::pow(b, p), s),
                                      1.0 / (n + 1.0));
            return h / std::pow(a, head + t + r);
        }
        case EquationFamily::order_C5:
        case EquationFamily::chaotic_D5: {
            const double head = f == EquationFamily::order_C5 ? 1.0 : 0.0;
            const double p = val("p"), r = val("r"), s = val("s"), t = val("t");
            const double n = ps.get_n("oracle");
            const double h = std::pow(std::pow(b, r) * std::pow(std::pow(b, t) * std::pow(a, p), s),
                                      1.0 / (n + 1.0));
            return std::pow(b, head + t + r) / h;
        }
        case EquationFamily::complete_3_3:
        case EquationFamily::complete_3_7: {
            const double p = val("p"), p0 = val("p0"), r = val("r");
            const double n = ps.get_n("oracle");
            const double k = std::pow(a, r) * std::pow(b, p0);
            const double g = f == EquationFamily::complete_3_3
                                 ? k
                                 : std::pow(k, (2.0 * p0 + 1.0 + r) / (2.0 * p0 + 2.0 * r));
            return std::pow(std::pow(a, r) * std::pow(b, p), 1.0 / (n + 1.0)) / (g * g);
        }
        case EquationFamily::complete_3_11: {
            const double p = val("p"), p0 = val("p0"), r = val("r");
            const double n = ps.get_n("oracle");
            const double m = std::pow(a, -r) * std::pow(b, -p);
            return std::pow(std::pow(a, -r) * std::pow(b, -p0), (n + 1.0) / n) / m;
        }
        case EquationFamily::complete_3_5:
            return equation_scalar(EquationFamily::complete_3_3, 1.0 / b, 1.0 / a, ps);
        case EquationFamily::complete_3_9:
            return equation_scalar(EquationFamily::complete_3_7, 1.0 / b, 1.0 / a, ps);
        case EquationFamily::complete_3_13:
            return equation_scalar(EquationFamily::complete_3_11, 1.0 / b, 1.0 / a, ps);
    }
    return 0.0;
}

}  // namespace oracle

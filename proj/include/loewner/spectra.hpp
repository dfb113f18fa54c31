#pragma once

// Spectral decomposition and functional calculus for symmetric matrices.
//
// The eigensolver is cyclic Jacobi. It has converged once the off-diagonal
// Frobenius norm drops to 1e-13 * ||H||_F and gives up after 50 * dim^2
// rotations. Past convergence it keeps rotating pairs that are not small
// against their own diagonal, so tiny eigenvalues keep relative accuracy.
// Every function here is pure; the results depend only on the input bits.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "loewner/matrix.hpp"

namespace loewner {

/// Eigensolver did not converge within its rotation budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    [[nodiscard]] double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// A function was applied outside its domain (e.g. log of a matrix with a
/// non-positive eigenvalue). Carries the offending minimum eigenvalue.
class DomainError : public std::domain_error {
public:
    DomainError(const std::string& what, double lambda_min)
        : std::domain_error(what), lambda_min_(lambda_min) {}
    [[nodiscard]] double lambda_min() const noexcept { return lambda_min_; }

private:
    double lambda_min_;
};

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // column i pairs with eigenvalues[i]

    [[nodiscard]] std::size_t dim() const noexcept { return eigenvalues.size(); }
    [[nodiscard]] double lambda_min() const { return eigenvalues.front(); }
    [[nodiscard]] double lambda_max() const { return eigenvalues.back(); }
    /// max |lambda_i|
    [[nodiscard]] double spectral_norm() const;
    /// Q * diag(values) * Q^T, symmetrized.
    [[nodiscard]] HermitianMatrix reconstruct(const std::vector<double>& values) const;
};

class ScalarFunction {
public:
    enum class Kind { power, log, exp, inverse };

    static ScalarFunction power(double exponent) { return {Kind::power, exponent}; }
    static ScalarFunction log() { return {Kind::log, 0.0}; }
    static ScalarFunction exp() { return {Kind::exp, 0.0}; }
    static ScalarFunction inverse() { return {Kind::inverse, -1.0}; }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double exponent() const noexcept { return exponent_; }
    /// True when the function needs strictly positive eigenvalues.
    [[nodiscard]] bool requires_positive() const noexcept;
    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] std::string name() const;

private:
    ScalarFunction(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}
    Kind kind_;
    double exponent_;
};

[[nodiscard]] SpectralDecomposition eigh(const HermitianMatrix& h);

[[nodiscard]] HermitianMatrix apply_fn(const HermitianMatrix& h, const ScalarFunction& f);
/// Functional calculus on an existing decomposition; lets callers raise the
/// same operand to several exponents with a single eigensolve.
[[nodiscard]] HermitianMatrix apply_fn(const SpectralDecomposition& d, const ScalarFunction& f);

[[nodiscard]] double spectral_norm(const HermitianMatrix& h);
[[nodiscard]] double lambda_min(const HermitianMatrix& h);

/// M * X * M, symmetrized.
[[nodiscard]] HermitianMatrix congruence(const HermitianMatrix& x, const HermitianMatrix& m);

// Shorthands over apply_fn.
[[nodiscard]] HermitianMatrix power(const HermitianMatrix& h, double exponent);
[[nodiscard]] HermitianMatrix power(const SpectralDecomposition& d, double exponent);
[[nodiscard]] HermitianMatrix logm(const HermitianMatrix& h);
[[nodiscard]] HermitianMatrix expm(const HermitianMatrix& h);
[[nodiscard]] HermitianMatrix inverse(const HermitianMatrix& h);

/// Throws DomainError unless lambda_min(h) > 0.
void require_positive_definite(const HermitianMatrix& h, const char* what);

}  // namespace loewner

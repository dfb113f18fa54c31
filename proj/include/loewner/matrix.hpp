#pragma once

// Dense square matrices. `Matrix` is a general real square matrix used for
// intermediate (non-symmetric) products; `HermitianMatrix` is the symmetric
// type every public operation consumes and returns.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace loewner {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim);
    Matrix(std::size_t dim, std::vector<double> row_major);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const double> values);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * dim_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    [[nodiscard]] Matrix transposed() const;
    [[nodiscard]] double frobenius_norm() const noexcept;
    [[nodiscard]] double max_abs() const noexcept;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double scale) noexcept;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

[[nodiscard]] Matrix operator+(Matrix lhs, const Matrix& rhs);
[[nodiscard]] Matrix operator-(Matrix lhs, const Matrix& rhs);
[[nodiscard]] Matrix operator*(Matrix lhs, double scale);
[[nodiscard]] Matrix operator*(double scale, Matrix rhs);
[[nodiscard]] Matrix operator*(const Matrix& lhs, const Matrix& rhs);

/// Symmetric real matrix. Construction symmetrizes as (M + M^T) / 2, so
/// entries[i][j] == entries[j][i] holds bit-exactly for every instance.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const Matrix& m);
    HermitianMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static HermitianMatrix identity(std::size_t dim);
    static HermitianMatrix diagonal(std::span<const double> values);
    static HermitianMatrix zero(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
    [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }
    [[nodiscard]] double frobenius_norm() const noexcept { return m_.frobenius_norm(); }

    friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

private:
    Matrix m_;
};

[[nodiscard]] HermitianMatrix operator+(const HermitianMatrix& lhs, const HermitianMatrix& rhs);
[[nodiscard]] HermitianMatrix operator-(const HermitianMatrix& lhs, const HermitianMatrix& rhs);
[[nodiscard]] HermitianMatrix operator*(double scale, const HermitianMatrix& h);
[[nodiscard]] Matrix operator*(const HermitianMatrix& lhs, const HermitianMatrix& rhs);
[[nodiscard]] Matrix operator*(const Matrix& lhs, const HermitianMatrix& rhs);
[[nodiscard]] Matrix operator*(const HermitianMatrix& lhs, const Matrix& rhs);

/// Integer power of a general matrix by repeated squaring; n = 0 gives I.
[[nodiscard]] Matrix matrix_power(const Matrix& m, unsigned n);

/// ||lhs - rhs||_F / ||rhs||_F, or the absolute difference when rhs is zero.
[[nodiscard]] double relative_frobenius_error(const Matrix& lhs, const Matrix& rhs);

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace loewner

#include "loewner/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace loewner {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                             " vs " + std::to_string(b) + ")");
    }
}

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

Matrix::Matrix(std::size_t dim, std::vector<double> row_major)
    : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim * dim) {
        throw DimensionError("Matrix: expected " + std::to_string(dim * dim) + " entries, got " +
                             std::to_string(data_.size()));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) throw DimensionError("Matrix: rows must form a square array");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::frobenius_norm() const noexcept {
    // Scaled sum of squares: entries can span many orders of magnitude after
    // large fractional powers.
    const double scale = max_abs();
    if (scale == 0.0 || !std::isfinite(scale)) return scale;
    double sum = 0.0;
    for (double v : data_) {
        const double x = v / scale;
        sum += x * x;
    }
    return scale * std::sqrt(sum);
}

double Matrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_dim(dim_, other.dim_, "Matrix +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_dim(dim_, other.dim_, "Matrix -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(double scale) noexcept {
    for (double& v : data_) v *= scale;
    return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(Matrix lhs, double scale) { return lhs *= scale; }
Matrix operator*(double scale, Matrix rhs) { return rhs *= scale; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    require_same_dim(lhs.dim(), rhs.dim(), "Matrix *");
    const std::size_t n = lhs.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double a = lhs(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

HermitianMatrix::HermitianMatrix(const Matrix& m) : m_(m.dim()) {
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        m_(i, i) = m(i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            m_(i, j) = v;
            m_(j, i) = v;
        }
    }
}

HermitianMatrix::HermitianMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : HermitianMatrix(Matrix(rows)) {}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
    return HermitianMatrix(Matrix::identity(dim));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
    return HermitianMatrix(Matrix::diagonal(values));
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) { return HermitianMatrix(Matrix(dim)); }

HermitianMatrix operator+(const HermitianMatrix& lhs, const HermitianMatrix& rhs) {
    return HermitianMatrix(lhs.matrix() + rhs.matrix());
}

HermitianMatrix operator-(const HermitianMatrix& lhs, const HermitianMatrix& rhs) {
    return HermitianMatrix(lhs.matrix() - rhs.matrix());
}

HermitianMatrix operator*(double scale, const HermitianMatrix& h) {
    return HermitianMatrix(scale * h.matrix());
}

Matrix operator*(const HermitianMatrix& lhs, const HermitianMatrix& rhs) {
    return lhs.matrix() * rhs.matrix();
}
Matrix operator*(const Matrix& lhs, const HermitianMatrix& rhs) { return lhs * rhs.matrix(); }
Matrix operator*(const HermitianMatrix& lhs, const Matrix& rhs) { return lhs.matrix() * rhs; }

Matrix matrix_power(const Matrix& m, unsigned n) {
    Matrix result = Matrix::identity(m.dim());
    Matrix base = m;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

double relative_frobenius_error(const Matrix& lhs, const Matrix& rhs) {
    const double diff = (lhs - rhs).frobenius_norm();
    const double ref = rhs.frobenius_norm();
    return ref > 0.0 ? diff / ref : diff;
}

}  // namespace loewner

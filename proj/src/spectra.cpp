#include "loewner/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace loewner {
namespace {

constexpr double kConvergenceRel = 1e-13;
constexpr double kPolishRel = 1e-16;
constexpr std::size_t kRotationBudgetPerDim2 = 50;

double off_diagonal_norm(const Matrix& a) {
    const std::size_t n = a.dim();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) {
                const double x = a(i, j) / scale;
                sum += x * x;
            }
    return scale * std::sqrt(sum);
}

// One Jacobi rotation annihilating a(p,q); accumulates the rotation into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const std::size_t n = a.dim();

    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = a(k, p);
        const double akq = a(k, q);
        const double new_kp = c * akp - s * akq;
        const double new_kq = s * akp + c * akq;
        a(k, p) = new_kp;
        a(p, k) = new_kp;
        a(k, q) = new_kq;
        a(q, k) = new_kq;
    }
    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

bool is_nonnegative_integer(double x) { return x >= 0.0 && std::floor(x) == x; }

}  // namespace

double SpectralDecomposition::spectral_norm() const {
    double m = 0.0;
    for (double l : eigenvalues) m = std::max(m, std::abs(l));
    return m;
}

HermitianMatrix SpectralDecomposition::reconstruct(const std::vector<double>& values) const {
    require_same_dim(values.size(), dim(), "reconstruct");
    const std::size_t n = dim();
    const Matrix& q = eigenvectors;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += q(i, k) * values[k] * q(j, k);
            out(i, j) = acc;
            out(j, i) = acc;
        }
    }
    return HermitianMatrix(out);
}

bool ScalarFunction::requires_positive() const noexcept {
    switch (kind_) {
        case Kind::log:
        case Kind::inverse:
            return true;
        case Kind::power:
            return !is_nonnegative_integer(exponent_);
        case Kind::exp:
            return false;
    }
    return true;
}

double ScalarFunction::operator()(double x) const {
    switch (kind_) {
        case Kind::power:
            if (exponent_ == 0.0) return 1.0;
            if (exponent_ == 1.0) return x;
            if (exponent_ == 0.5) return std::sqrt(x);
            return std::pow(x, exponent_);
        case Kind::log:
            return std::log(x);
        case Kind::exp:
            return std::exp(x);
        case Kind::inverse:
            return 1.0 / x;
    }
    return x;
}

std::string ScalarFunction::name() const {
    switch (kind_) {
        case Kind::power: {
            std::ostringstream os;
            os << "power(" << exponent_ << ")";
            return os.str();
        }
        case Kind::log:
            return "log";
        case Kind::exp:
            return "exp";
        case Kind::inverse:
            return "inverse";
    }
    return "?";
}

SpectralDecomposition eigh(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    if (n == 0) throw DimensionError("eigh: empty matrix");
    Matrix a = h.matrix();
    Matrix v = Matrix::identity(n);
    const double threshold = kConvergenceRel * h.frobenius_norm();
    const std::size_t budget = kRotationBudgetPerDim2 * n * n;

    std::size_t rotations = 0;
    double off = off_diagonal_norm(a);
    while (off > threshold) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                if (rotations == budget) {
                    std::ostringstream os;
                    os << "eigh: no convergence after " << budget
                       << " rotations, off-diagonal residual " << off;
                    throw ConvergenceError(os.str(), off_diagonal_norm(a));
                }
                rotate(a, v, p, q);
                ++rotations;
            }
        }
        off = off_diagonal_norm(a);
    }

    // Converged in norm, but entries that are small against ||H|| can still be
    // large against their own diagonal, which costs the small eigenvalues
    // their relative accuracy. A sweep or two more fixes that; running out of
    // budget here is not an error.
    bool rotated = true;
    while (rotated && rotations < budget) {
        rotated = false;
        for (std::size_t p = 0; p + 1 < n && rotations < budget; ++p) {
            for (std::size_t q = p + 1; q < n && rotations < budget; ++q) {
                const double bound = kPolishRel * std::sqrt(std::abs(a(p, p) * a(q, q)));
                if (std::abs(a(p, q)) <= bound) continue;
                rotate(a, v, p, q);
                ++rotations;
                rotated = true;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SpectralDecomposition d{std::vector<double>(n), Matrix(n)};
    for (std::size_t c = 0; c < n; ++c) {
        d.eigenvalues[c] = a(order[c], order[c]);
        for (std::size_t r = 0; r < n; ++r) d.eigenvectors(r, c) = v(r, order[c]);
    }
    return d;
}

HermitianMatrix apply_fn(const SpectralDecomposition& d, const ScalarFunction& f) {
    if (f.requires_positive() && d.lambda_min() <= 0.0) {
        std::ostringstream os;
        os << "apply_fn(" << f.name() << "): non-positive eigenvalue " << d.lambda_min();
        throw DomainError(os.str(), d.lambda_min());
    }
    std::vector<double> mapped(d.dim());
    std::transform(d.eigenvalues.begin(), d.eigenvalues.end(), mapped.begin(),
                   [&](double l) { return f(l); });
    return d.reconstruct(mapped);
}

HermitianMatrix apply_fn(const HermitianMatrix& h, const ScalarFunction& f) {
    return apply_fn(eigh(h), f);
}

double spectral_norm(const HermitianMatrix& h) { return eigh(h).spectral_norm(); }

double lambda_min(const HermitianMatrix& h) { return eigh(h).lambda_min(); }

HermitianMatrix congruence(const HermitianMatrix& x, const HermitianMatrix& m) {
    require_same_dim(x.dim(), m.dim(), "congruence");
    return HermitianMatrix(m.matrix() * x.matrix() * m.matrix());
}

HermitianMatrix power(const HermitianMatrix& h, double exponent) {
    return apply_fn(h, ScalarFunction::power(exponent));
}
HermitianMatrix power(const SpectralDecomposition& d, double exponent) {
    return apply_fn(d, ScalarFunction::power(exponent));
}
HermitianMatrix logm(const HermitianMatrix& h) { return apply_fn(h, ScalarFunction::log()); }
HermitianMatrix expm(const HermitianMatrix& h) { return apply_fn(h, ScalarFunction::exp()); }
HermitianMatrix inverse(const HermitianMatrix& h) {
    return apply_fn(h, ScalarFunction::inverse());
}

void require_positive_definite(const HermitianMatrix& h, const char* what) {
    const double lmin = lambda_min(h);
    if (!(lmin > 0.0)) {
        std::ostringstream os;
        os << what << ": matrix is not positive definite (lambda_min = " << lmin << ")";
        throw DomainError(os.str(), lmin);
    }
}

}  // namespace loewner

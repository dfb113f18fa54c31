#include "loewner/genpairs.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "loewner/spectra.hpp"

namespace loewner {
namespace {

constexpr double kPerturbationFloor = 1e-4;  // smallest random eigenvalue of P, relative
constexpr double kChaoticFloor = 1e-3;

double log_uniform(SplitMix64& rng, double lo, double hi) {
    return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

HermitianMatrix with_spectrum(const Matrix& q, const std::vector<double>& values) {
    SpectralDecomposition d{values, q};
    return d.reconstruct(values);
}

double default_gap(const GenSpec& spec, double b_norm) { return spec.gap.value_or(1e-3 * b_norm); }

// log-space construction shared by the chaotic generators
MatrixPair chaotic_candidate(SplitMix64& rng, const GenSpec& spec) {
    const std::size_t n = spec.dim;
    const double spread = 0.25 * std::log(spec.condition_cap);
    const HermitianMatrix raw = random_symmetric(rng, n);
    const double raw_norm = spectral_norm(raw);
    const HermitianMatrix y = raw_norm > 0.0 ? (spread / raw_norm) * raw : raw;

    const Matrix q = random_orthogonal(rng, n);
    std::vector<double> mu(n);
    for (double& m : mu) m = spec.perturbation * spread * log_uniform(rng, kChaoticFloor, 1.0);
    const HermitianMatrix x = y + with_spectrum(q, mu);
    return MatrixPair{expm(x), expm(y)};
}

void require_dim_at_least_two(const GenSpec& spec, const char* what) {
    if (spec.dim < 2) {
        throw PreconditionError(std::string(what) +
                                ": dim must be >= 2 (scalars are totally ordered)");
    }
}

}  // namespace

void GenSpec::validate() const {
    if (dim < 1 || dim > 64) throw PreconditionError("GenSpec: dim must be in [1, 64]");
    if (!(condition_cap > 1.0) || !std::isfinite(condition_cap)) {
        throw PreconditionError("GenSpec: condition_cap must be > 1");
    }
    if (gap && !(*gap >= 0.0)) throw PreconditionError("GenSpec: gap must be >= 0");
    if (!(perturbation >= 0.0)) throw PreconditionError("GenSpec: perturbation must be >= 0");
    tolerance.validate();
}

std::string to_string(Relation relation) {
    switch (relation) {
        case Relation::ordered: return "ordered";
        case Relation::chaotic: return "chaotic";
        case Relation::unordered: return "unordered";
    }
    return "?";
}

std::optional<Relation> parse_relation(std::string_view text) {
    if (text == "ordered") return Relation::ordered;
    if (text == "chaotic") return Relation::chaotic;
    if (text == "unordered") return Relation::unordered;
    return std::nullopt;
}

HermitianMatrix random_symmetric(SplitMix64& rng, std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
    return HermitianMatrix(m);
}

Matrix random_orthogonal(SplitMix64& rng, std::size_t dim) {
    Matrix r(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) r(i, j) = rng.uniform(-1.0, 1.0);

    // Householder QR: r becomes R, q accumulates H_0 H_1 ... H_{n-1}.
    Matrix q = Matrix::identity(dim);
    std::vector<double> v(dim);
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        double norm_x = 0.0;
        for (std::size_t i = k; i < dim; ++i) norm_x = std::hypot(norm_x, r(i, k));
        if (norm_x == 0.0) continue;
        const double alpha = r(k, k) >= 0.0 ? -norm_x : norm_x;
        double vnorm2 = 0.0;
        for (std::size_t i = k; i < dim; ++i) {
            v[i] = r(i, k) - (i == k ? alpha : 0.0);
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < dim; ++i) dot += v[i] * r(i, j);
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < dim; ++i) r(i, j) -= f * v[i];
        }
        for (std::size_t i = 0; i < dim; ++i) {
            double dot = 0.0;
            for (std::size_t l = k; l < dim; ++l) dot += q(i, l) * v[l];
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t l = k; l < dim; ++l) q(i, l) -= f * v[l];
        }
    }
    for (std::size_t k = 0; k < dim; ++k) {
        if (r(k, k) < 0.0) {
            for (std::size_t i = 0; i < dim; ++i) q(i, k) = -q(i, k);
        }
    }
    return q;
}

HermitianMatrix random_pd(SplitMix64& rng, std::size_t dim, double condition_cap) {
    const Matrix q = random_orthogonal(rng, dim);
    const double half_log = 0.5 * std::log(condition_cap);
    std::vector<double> lambda(dim);
    for (double& l : lambda) l = std::exp(rng.uniform(-half_log, half_log));
    return with_spectrum(q, lambda);
}

HermitianMatrix random_pd(const GenSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);
    return random_pd(rng, spec.dim, spec.condition_cap);
}

MatrixPair ordered_pair_from(const HermitianMatrix& b, const HermitianMatrix& p,
                             const TolerancePolicy& tol) {
    require_same_dim(b.dim(), p.dim(), "ordered_pair_from");
    const double lo = lambda_min(p);
    if (lo < -tol.slack(spectral_norm(p))) {
        throw PreconditionError("ordered_pair_from: perturbation is not positive semidefinite");
    }
    return MatrixPair{b + p, b};
}

MatrixPair random_ordered_pair(const GenSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);
    HermitianMatrix b = random_pd(rng, spec.dim, spec.condition_cap);
    const double b_norm = spectral_norm(b);
    const double gap = default_gap(spec, b_norm);
    const Matrix q = random_orthogonal(rng, spec.dim);
    std::vector<double> mu(spec.dim);
    for (double& m : mu) {
        m = gap + spec.perturbation * b_norm * log_uniform(rng, kPerturbationFloor, 1.0);
    }
    HermitianMatrix a = b + with_spectrum(q, mu);
    return MatrixPair{std::move(a), std::move(b)};
}

MatrixPair random_chaotic_pair(const GenSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);
    return chaotic_candidate(rng, spec);
}

std::optional<MatrixPair> random_chaotic_only_pair(const GenSpec& spec, std::size_t budget) {
    spec.validate();
    require_dim_at_least_two(spec, "random_chaotic_only_pair");
    SplitMix64 rng(spec.seed);
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        MatrixPair pair = chaotic_candidate(rng, spec);
        const OrderVerdict loewner = loewner_geq(pair.a, pair.b, spec.tolerance);
        if (loewner.margin >= -10.0 * loewner.tolerance) continue;
        if (chaotic_geq(pair.a, pair.b, spec.tolerance).holds) return pair;
    }
    return std::nullopt;
}

std::optional<MatrixPair> random_unordered_pair(const GenSpec& spec, std::size_t budget) {
    spec.validate();
    require_dim_at_least_two(spec, "random_unordered_pair");
    SplitMix64 rng(spec.seed);
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        MatrixPair pair{random_pd(rng, spec.dim, spec.condition_cap),
                        random_pd(rng, spec.dim, spec.condition_cap)};
        const OrderVerdict ab = loewner_geq(pair.a, pair.b, spec.tolerance);
        const OrderVerdict ba = loewner_geq(pair.b, pair.a, spec.tolerance);
        if (ab.margin < -10.0 * ab.tolerance && ba.margin < -10.0 * ba.tolerance) return pair;
    }
    return std::nullopt;
}

}  // namespace loewner

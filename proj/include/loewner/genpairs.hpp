#pragma once

// Seeded generators of matrix pairs in a prescribed order relationship.
// Outputs are a pure function of the GenSpec (plus budget); identical specs
// produce bit-identical matrices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "loewner/matrix.hpp"
#include "loewner/orders.hpp"
#include "loewner/rng.hpp"

namespace loewner {

struct GenSpec {
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    /// Largest eigenvalue ratio of random_pd outputs.
    double condition_cap = 1e4;
    /// Minimum Loewner margin of ordered pairs; defaults to 1e-3 * ||B||_2.
    std::optional<double> gap;
    /// Scale of the random part of the perturbation P relative to ||B||_2.
    /// With gap = 0 and perturbation = 0 the ordered pair is A = B.
    double perturbation = 1.0;
    TolerancePolicy tolerance{};

    void validate() const;
};

struct MatrixPair {
    HermitianMatrix a;
    HermitianMatrix b;
};

enum class Relation { ordered, chaotic, unordered };

[[nodiscard]] std::string to_string(Relation relation);
[[nodiscard]] std::optional<Relation> parse_relation(std::string_view text);

/// Symmetrized matrix of i.i.d. uniform(-1, 1) entries.
[[nodiscard]] HermitianMatrix random_symmetric(SplitMix64& rng, std::size_t dim);
/// Q factor of a Householder QR of a uniform(-1, 1) matrix, signs fixed so
/// that R has a positive diagonal.
[[nodiscard]] Matrix random_orthogonal(SplitMix64& rng, std::size_t dim);

/// Q diag(lambda) Q^T with log-uniform lambda in [cap^{-1/2}, cap^{1/2}].
[[nodiscard]] HermitianMatrix random_pd(const GenSpec& spec);
[[nodiscard]] HermitianMatrix random_pd(SplitMix64& rng, std::size_t dim, double condition_cap);

/// (B + P, B) for a given positive semidefinite P; throws PreconditionError
/// when lambda_min(P) < -tolerance.
[[nodiscard]] MatrixPair ordered_pair_from(const HermitianMatrix& b, const HermitianMatrix& p,
                                           const TolerancePolicy& tol = {});

/// B = random_pd, A = B + P with lambda_min(P) >= gap.
[[nodiscard]] MatrixPair random_ordered_pair(const GenSpec& spec);

/// A = exp(Y + P), B = exp(Y) with P positive semidefinite; log A >= log B
/// by construction. Loewner order may or may not hold.
[[nodiscard]] MatrixPair random_chaotic_pair(const GenSpec& spec);

/// Draws random_chaotic_pair-style candidates from one stream until one has
/// chaotic order but fails Loewner order by more than 10x tolerance.
/// Requires dim >= 2; returns nullopt when the budget runs out.
[[nodiscard]] std::optional<MatrixPair> random_chaotic_only_pair(const GenSpec& spec,
                                                                 std::size_t budget);

/// Independent PD draws until neither A >= B nor B >= A holds (both margins
/// below -10x tolerance). Requires dim >= 2.
[[nodiscard]] std::optional<MatrixPair> random_unordered_pair(const GenSpec& spec,
                                                              std::size_t budget);

}  // namespace loewner

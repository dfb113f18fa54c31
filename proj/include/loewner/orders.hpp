#pragma once

// Loewner order A >= B and chaotic order A >> B (log A >= log B) as
// tolerance-aware predicates. Every verdict carries its signed margin, the
// minimum eigenvalue of the defining difference, even when it is false.

#include <stdexcept>
#include <string>

#include "loewner/matrix.hpp"

namespace loewner {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Absolute slack = rel * scale + floor, where scale is the larger spectral
/// norm of the two operands of the difference being tested.
struct TolerancePolicy {
    double rel = 1e-8;
    double floor = 1e-12;

    [[nodiscard]] double slack(double scale) const noexcept { return rel * scale + floor; }
    void validate() const;
};

enum class OrderKind { loewner, chaotic };

[[nodiscard]] std::string to_string(OrderKind kind);

struct OrderVerdict {
    bool holds = false;
    double margin = 0.0;
    double tolerance = 0.0;
    OrderKind kind = OrderKind::loewner;
};

[[nodiscard]] OrderVerdict loewner_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                                       const TolerancePolicy& tol = {});

/// Requires both operands positive definite; logs are taken per operand.
[[nodiscard]] OrderVerdict chaotic_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                                       const TolerancePolicy& tol = {});

/// Verdict for A^alpha >= B^alpha. Asserts A >= B with loewner_geq first.
[[nodiscard]] OrderVerdict lowner_heinz(const HermitianMatrix& a, const HermitianMatrix& b,
                                        double alpha, const TolerancePolicy& tol = {});

}  // namespace loewner

#include "loewner/orders.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "loewner/spectra.hpp"

namespace loewner {
namespace {

OrderVerdict compare(const HermitianMatrix& lhs, const HermitianMatrix& rhs,
                     const TolerancePolicy& tol, OrderKind kind) {
    require_same_dim(lhs.dim(), rhs.dim(), "order predicate");
    const double scale = std::max(spectral_norm(lhs), spectral_norm(rhs));
    const double margin = lambda_min(lhs - rhs);
    const double slack = tol.slack(scale);
    return OrderVerdict{margin >= -slack, margin, slack, kind};
}

}  // namespace

void TolerancePolicy::validate() const {
    if (!(rel > 0.0) || !(floor > 0.0)) {
        throw PreconditionError("TolerancePolicy: rel and floor must be positive");
    }
}

std::string to_string(OrderKind kind) {
    return kind == OrderKind::loewner ? "loewner" : "chaotic";
}

OrderVerdict loewner_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                         const TolerancePolicy& tol) {
    tol.validate();
    return compare(a, b, tol, OrderKind::loewner);
}

OrderVerdict chaotic_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                         const TolerancePolicy& tol) {
    tol.validate();
    require_same_dim(a.dim(), b.dim(), "chaotic_geq");
    return compare(logm(a), logm(b), tol, OrderKind::chaotic);
}

OrderVerdict lowner_heinz(const HermitianMatrix& a, const HermitianMatrix& b, double alpha,
                          const TolerancePolicy& tol) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw PreconditionError("lowner_heinz: alpha must be a finite nonnegative number");
    }
    const OrderVerdict base = loewner_geq(a, b, tol);
    if (!base.holds) {
        std::ostringstream os;
        os << "lowner_heinz: operands are not ordered (margin " << base.margin << ")";
        throw PreconditionError(os.str());
    }
    return loewner_geq(power(a, alpha), power(b, alpha), tol);
}

}  // namespace loewner

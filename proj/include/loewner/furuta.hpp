#pragma once

// The Furuta family of operator inequalities, each evaluated as an explicit
// left side, right side and Loewner verdict LHS >= RHS.
//
//   furuta_B       (B^{r/2} A^p B^{r/2})^{1/q}  >=  (B^{r/2} B^p B^{r/2})^{1/q}
//   furuta_A       (A^{r/2} A^p A^{r/2})^{1/q}  >=  (A^{r/2} B^p A^{r/2})^{1/q}
//                  hypotheses: p >= 0, q >= 1, r >= 0, (1+r) q >= p + r
//   grand_furuta   A^{1-t+r} >= (A^{r/2} (A^{-t/2} B^p A^{-t/2})^s A^{r/2})^{(1-t+r)/((p-t)s+r)}
//                  hypotheses: 0 <= t <= 1, p >= 1, s >= 1, r >= t
//   complete_form  (A^{r/2} B^{p0} A^{r/2})^{(s+r)/(p0+r)} >= (A^{r/2} B^p A^{r/2})^{(s+r)/(p+r)}
//                  hypotheses: r >= 0, p > p0 >= 0, s = min{p, 2 p0 + min{1, r}}
//   thm_1_9        A^{1+t+r} >= (A^{r/2} (A^{t/2} B^p A^{t/2})^s A^{r/2})^{(1+t+r)/((p+t)s+r)}
//                  hypotheses: p >= 1, t >= 0, r >= 0, s >= (1+t)/(p+t); holds iff A >= B
//   thm_1_10       A^{t+r} >= (A^{r/2} (A^{t/2} B^p A^{t/2})^s A^{r/2})^{(t+r)/((p+t)s+r)}
//                  hypotheses: p > 0, t >= 0, r >= 0, s >= t/(p+t); holds iff log A >= log B
//   lowner_heinz   A^alpha >= B^alpha, hypothesis 0 <= alpha <= 1
//
// evaluate() never refuses a parameter set that fails validate(); the verdict
// then carries no guarantee, which is what boundary searches need.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loewner/matrix.hpp"
#include "loewner/orders.hpp"
#include "loewner/params.hpp"

namespace loewner {

enum class InequalityFamily {
    furuta_B,
    furuta_A,
    grand_furuta,
    complete_form,
    thm_1_9,
    thm_1_10,
    lowner_heinz,
};

[[nodiscard]] std::string to_string(InequalityFamily family);
[[nodiscard]] std::optional<InequalityFamily> parse_inequality_family(std::string_view tag);
[[nodiscard]] const std::vector<InequalityFamily>& all_inequality_families();

/// Whether a family's theorem presumes A >= B (ordered) or log A >= log B.
[[nodiscard]] OrderKind hypothesis_order(InequalityFamily family);

struct Validation {
    bool valid = true;
    std::vector<std::string> violations;
    /// complete_form only: s = min{p, 2 p0 + min{1, r}}.
    std::optional<double> derived_s;
};

/// Checks the named theorem's hypotheses. Throws ParamError when a field the
/// family needs is absent.
[[nodiscard]] Validation validate(InequalityFamily family, const ParamSet& params);

struct InequalityEvaluation {
    HermitianMatrix lhs;
    HermitianMatrix rhs;
    OrderVerdict verdict;
};

[[nodiscard]] InequalityEvaluation evaluate(InequalityFamily family, const HermitianMatrix& a,
                                            const HermitianMatrix& b, const ParamSet& params,
                                            const TolerancePolicy& tol = {});

struct MarginSurface {
    std::string row_field;
    std::string col_field;
    std::vector<double> row_values;
    std::vector<double> col_values;
    std::vector<double> margins;  // row-major, row_values.size() x col_values.size()

    [[nodiscard]] double at(std::size_t row, std::size_t col) const {
        return margins[row * col_values.size() + col];
    }
};

/// One evaluate() per grid node, `base` supplying every other field.
[[nodiscard]] MarginSurface margin_surface(InequalityFamily family, const HermitianMatrix& a,
                                           const HermitianMatrix& b, const ParamSet& base,
                                           std::string_view row_field,
                                           std::vector<double> row_values,
                                           std::string_view col_field,
                                           std::vector<double> col_values,
                                           const TolerancePolicy& tol = {});

}  // namespace loewner

#pragma once

// Operator-equation characterizations of A >= B and log A >= log B.
//
// Each solver builds the canonical positive definite solution S of a sandwich
// identity G S G = H through douglas_contraction, then re-derives the target
// operator (B^p, A^p, ...) from S by the assertion's own formula and reports
// the relative reconstruction residual. S is a contraction exactly when the
// associated inequality G^2 >= H holds.
//
//   C4  H = (A^{r/2}(A^{t/2}B^pA^{t/2})^s A^{r/2})^{1/(n+1)},  G = A^{(1+t+r)/2}
//       B^p = A^{-t/2}(A^{(1+t)/2}(S A^{1+t+r})^n S A^{(1+t)/2})^{1/s} A^{-t/2}
//   C5  S = G' H'^{-1} G' with A and B exchanged in H, G; reconstructs A^p
//   D4  as C4 with G = A^{(t+r)/2} and inner A^{t/2}
//   D5  as C5 with G' = B^{(t+r)/2}
//       constraints: (p+t)s + r = (n+1)(1+t+r) for C, (n+1)(t+r) for D
//   3-3  K = A^{r/2}B^{p0}A^{r/2},  S = K^{-1} (A^{r/2}B^pA^{r/2})^{1/(n+1)} K^{-1}
//        p + r = (n+1)(2 p0 + 2 r)
//   3-7  G = K^{(2p0+1+r)/(2p0+2r)} in place of K,  p + r = (n+1)(2 p0 + 1 + r)
//   3-11 M = A^{-r/2}B^{-p}A^{-r/2},  S = M^{-1/2} (A^{-r/2}B^{-p0}A^{-r/2})^{(n+1)/n} M^{-1/2}
//        n (p + r) = (n+1)(p0 + r)
//   3-5, 3-9, 3-13 run 3-3, 3-7, 3-11 on the pair (B^{-1}, A^{-1}).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loewner/matrix.hpp"
#include "loewner/orders.hpp"
#include "loewner/params.hpp"

namespace loewner {

/// A computed residual exceeded its guaranteed bound.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EquationFamily {
    order_C4,
    order_C5,
    chaotic_D4,
    chaotic_D5,
    complete_3_3,
    complete_3_5,
    complete_3_7,
    complete_3_9,
    complete_3_11,
    complete_3_13,
};

[[nodiscard]] std::string to_string(EquationFamily family);
/// Accepts the enumerator name ("order_C4") or the assertion label ("C4", "3-11").
[[nodiscard]] std::optional<EquationFamily> parse_equation_family(std::string_view tag);
[[nodiscard]] const std::vector<EquationFamily>& all_equation_families();
[[nodiscard]] OrderKind hypothesis_order(EquationFamily family);

/// Reconstruction residual every emitted report satisfies.
inline constexpr double kEquationResidualBound = 1e-8;

struct SolutionReport {
    EquationFamily family{};
    ParamSet params;
    HermitianMatrix solution;         // S (or T)
    double norm_S = 0.0;
    double equation_residual = 0.0;   // relative Frobenius, against the reconstructed target
    double sandwich_residual = 0.0;   // ||G S G - H||_F / ||H||_F
    double ordering_agreement = 0.0;  // relative gap between the two factor orderings
    bool contraction = false;
    OrderVerdict inequality_verdict;  // G^2 >= H, or its exchanged form
    OrderVerdict order_verdict;       // A >= B, or log A >= log B for D4/D5
    bool approximate = false;         // reverse-direction witness only in a limit
};

struct DouglasFactor {
    HermitianMatrix solution;
    double norm = 0.0;
};

/// The unique positive definite S with G S G = H, i.e. S = G^{-1} H G^{-1}.
/// ||S|| <= 1 exactly when G^2 >= H.
[[nodiscard]] DouglasFactor douglas_contraction(const HermitianMatrix& h, const HermitianMatrix& g);

enum class OrderSide { C4, C5 };
enum class ChaoticSide { D4, D5 };

[[nodiscard]] SolutionReport solve_order(const HermitianMatrix& a, const HermitianMatrix& b,
                                         const ParamSet& params, OrderSide side,
                                         const TolerancePolicy& tol = {});
[[nodiscard]] SolutionReport solve_chaotic(const HermitianMatrix& a, const HermitianMatrix& b,
                                           const ParamSet& params, ChaoticSide side,
                                           const TolerancePolicy& tol = {});
[[nodiscard]] SolutionReport solve_complete(const HermitianMatrix& a, const HermitianMatrix& b,
                                            const ParamSet& params, EquationFamily family,
                                            const TolerancePolicy& tol = {});
/// Dispatches on the family to the matching solver.
[[nodiscard]] SolutionReport solve(EquationFamily family, const HermitianMatrix& a,
                                   const HermitianMatrix& b, const ParamSet& params,
                                   const TolerancePolicy& tol = {});

/// Throws ParamError listing the family's violated hypotheses, if any.
void check_equation_params(EquationFamily family, const ParamSet& params);

/// Solves the family's linear exponent constraint for the single missing
/// field among {s, n, p}.
[[nodiscard]] ParamSet complete_params(EquationFamily family, const ParamSet& known);

/// n = 1, r = p, s = (p+2t)/(p+t).
[[nodiscard]] ParamSet chaotic_params_n1(double p, double t);
/// p = 1, r = 1/n, t = 1/m, s = (m+n+1)/(m+1).
[[nodiscard]] ParamSet chaotic_params_mn(int m, int n);
/// n = 0, t = 0, r = 0, s = 1/p: the equation then reads S = A^{-1/2} B A^{-1/2}.
[[nodiscard]] ParamSet order_witness_params(double p = 1.0);
/// t = 0, p = 1, s = 1, r = 1/n: contraction approaches log A >= log B as n grows.
[[nodiscard]] ParamSet chaotic_witness_params(int n = 64);

struct ScaledChaoticCheck {
    OrderVerdict scaled_order;  // a^{n+1} A >> B
    SolutionReport report;
};

/// D4 on (a^{n+1} A, B) with the (m, n) chaotic parameters.
[[nodiscard]] ScaledChaoticCheck scaled_chaotic_check(const HermitianMatrix& a,
                                                      const HermitianMatrix& b, double scale,
                                                      int m, int n,
                                                      const TolerancePolicy& tol = {});

}  // namespace loewner

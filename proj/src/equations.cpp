#include "loewner/equations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <tuple>

#include "loewner/spectra.hpp"

namespace loewner {
namespace {

constexpr double kConstraintTol = 1e-12;
constexpr double kIntegralTol = 1e-9;

struct FamilyName {
    EquationFamily family;
    std::string_view name;
    std::string_view label;
};

constexpr std::array<FamilyName, 10> kNames = {{
    {EquationFamily::order_C4, "order_C4", "C4"},
    {EquationFamily::order_C5, "order_C5", "C5"},
    {EquationFamily::chaotic_D4, "chaotic_D4", "D4"},
    {EquationFamily::chaotic_D5, "chaotic_D5", "D5"},
    {EquationFamily::complete_3_3, "complete_3_3", "3-3"},
    {EquationFamily::complete_3_5, "complete_3_5", "3-5"},
    {EquationFamily::complete_3_7, "complete_3_7", "3-7"},
    {EquationFamily::complete_3_9, "complete_3_9", "3-9"},
    {EquationFamily::complete_3_11, "complete_3_11", "3-11"},
    {EquationFamily::complete_3_13, "complete_3_13", "3-13"},
}};

bool is_order(EquationFamily f) {
    return f == EquationFamily::order_C4 || f == EquationFamily::order_C5;
}
bool is_chaotic(EquationFamily f) {
    return f == EquationFamily::chaotic_D4 || f == EquationFamily::chaotic_D5;
}

// The corollary families run their theorem's solver on (B^{-1}, A^{-1}).
std::optional<EquationFamily> substituted_base(EquationFamily f) {
    switch (f) {
        case EquationFamily::complete_3_5: return EquationFamily::complete_3_3;
        case EquationFamily::complete_3_9: return EquationFamily::complete_3_7;
        case EquationFamily::complete_3_13: return EquationFamily::complete_3_11;
        default: return std::nullopt;
    }
}

bool constraint_holds(double lhs, double rhs) {
    return std::abs(lhs - rhs) <= kConstraintTol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

SpectralDecomposition pd_decomposition(const HermitianMatrix& h, const char* what) {
    SpectralDecomposition d = eigh(h);
    if (!(d.lambda_min() > 0.0)) {
        std::ostringstream os;
        os << what << " is not positive definite (lambda_min = " << d.lambda_min() << ")";
        throw DomainError(os.str(), d.lambda_min());
    }
    return d;
}

// X * (Y * X)^n and (X * Y)^n * X: both expansions of the same product.
std::pair<Matrix, Matrix> alternating(const Matrix& x, const Matrix& y, unsigned n) {
    return {x * matrix_power(y * x, n), matrix_power(x * y, n) * x};
}

void finish(SolutionReport& rep, const TolerancePolicy& tol) {
    rep.norm_S = spectral_norm(rep.solution);
    rep.contraction = rep.norm_S <= 1.0 + tol.slack(1.0);
    if (!(rep.equation_residual <= kEquationResidualBound)) {
        std::ostringstream os;
        os << "solve(" << to_string(rep.family) << "): reconstruction residual "
           << rep.equation_residual << " exceeds " << kEquationResidualBound;
        throw NumericError(os.str());
    }
}

// Q^T M Q and Q M Q^T
HermitianMatrix rotate_in(const HermitianMatrix& m, const Matrix& q) {
    return HermitianMatrix(q.transposed() * m.matrix() * q);
}
HermitianMatrix rotate_out(const HermitianMatrix& m, const Matrix& q) {
    return HermitianMatrix(q * m.matrix() * q.transposed());
}

// Shared machinery of C4/C5/D4/D5. `head` is 1 for the order family and 0
// for the chaotic one; `exchanged` selects the C5/D5 side.
//
// Everything is computed in the eigenbasis of the outer operand (A for C4/D4,
// B for C5/D5), where its powers are exact diagonal scalings. The solution
// and the reconstruction are rotated back, and the residual is measured in
// the caller's basis against an independently computed target.
SolutionReport solve_sandwich(const HermitianMatrix& a, const HermitianMatrix& b,
                              const ParamSet& params, EquationFamily family, double head,
                              bool exchanged, const TolerancePolicy& tol) {
    require_same_dim(a.dim(), b.dim(), "solve");
    check_equation_params(family, params);
    const double p = *params.p, r = *params.r, s = *params.s, t = *params.t;
    const auto n = static_cast<unsigned>(*params.n);

    const SpectralDecomposition da = pd_decomposition(a, "A");
    const SpectralDecomposition db = pd_decomposition(b, "B");
    const SpectralDecomposition& outer_full = exchanged ? db : da;
    const SpectralDecomposition& inner_full = exchanged ? da : db;
    const HermitianMatrix target = power(inner_full, p);

    const Matrix& q = outer_full.eigenvectors;
    const SpectralDecomposition outer{outer_full.eigenvalues, Matrix::identity(a.dim())};
    const HermitianMatrix target_hat = power(eigh(rotate_in(exchanged ? a : b, q)), p);

    const HermitianMatrix h = power(
        congruence(power(congruence(target_hat, power(outer, t / 2.0)), s), power(outer, r / 2.0)),
        1.0 / static_cast<double>(n + 1));
    const double g_exp = (head + t + r) / 2.0;
    const HermitianMatrix g2 = power(outer, 2.0 * g_exp);

    SolutionReport rep;
    rep.family = family;
    rep.params = params;

    HermitianMatrix solution_hat;
    // Factor applied around the n-fold product when reconstructing.
    Matrix middle_a, middle_b;
    if (!exchanged) {
        const HermitianMatrix g = power(outer, g_exp);
        solution_hat = douglas_contraction(h, g).solution;
        rep.sandwich_residual = relative_frobenius_error(
            HermitianMatrix(g * solution_hat * g).matrix(), h.matrix());
        std::tie(middle_a, middle_b) = alternating(solution_hat.matrix(), g2.matrix(), n);
        rep.inequality_verdict = loewner_geq(g2, h, tol);
    } else {
        // G' H'^{-1} G' is the Douglas solution for the inverted sandwich.
        const HermitianMatrix g_inv = power(outer, -g_exp);
        const HermitianMatrix h_inv = inverse(h);
        solution_hat = douglas_contraction(h_inv, g_inv).solution;
        rep.sandwich_residual = relative_frobenius_error(
            HermitianMatrix(g_inv * solution_hat * g_inv).matrix(), h_inv.matrix());
        const HermitianMatrix s_inv = inverse(solution_hat);
        std::tie(middle_a, middle_b) = alternating(s_inv.matrix(), g2.matrix(), n);
        rep.inequality_verdict = loewner_geq(h, g2, tol);
    }
    rep.solution = rotate_out(solution_hat, q);

    const HermitianMatrix edge = power(outer, (head + t) / 2.0);
    const HermitianMatrix untwist = power(outer, -t / 2.0);
    auto rebuild = [&](const Matrix& middle) {
        const HermitianMatrix core(edge * middle * edge);
        return rotate_out(congruence(power(core, 1.0 / s), untwist), q);
    };
    const HermitianMatrix recon_a = rebuild(middle_a);
    const HermitianMatrix recon_b = rebuild(middle_b);
    rep.equation_residual = relative_frobenius_error(recon_a.matrix(), target.matrix());
    rep.ordering_agreement = relative_frobenius_error(recon_b.matrix(), recon_a.matrix());
    rep.order_verdict = head > 0.0 ? loewner_geq(a, b, tol) : chaotic_geq(a, b, tol);
    finish(rep, tol);
    return rep;
}

SolutionReport solve_complete_direct(const HermitianMatrix& a, const HermitianMatrix& b,
                                     const ParamSet& params, EquationFamily family,
                                     const TolerancePolicy& tol) {
    const double p = *params.p, p0 = *params.p0, r = *params.r;
    const auto n = static_cast<unsigned>(*params.n);
    const SpectralDecomposition da = pd_decomposition(a, "A");
    const SpectralDecomposition db = pd_decomposition(b, "B");
    const HermitianMatrix ar2 = power(da, r / 2.0);
    const HermitianMatrix bp0 = power(db, p0);
    const HermitianMatrix k = congruence(bp0, ar2);   // A^{r/2} B^{p0} A^{r/2}
    const HermitianMatrix nn = congruence(power(db, p), ar2);  // A^{r/2} B^p A^{r/2}

    SolutionReport rep;
    rep.family = family;
    rep.params = params;

    if (family == EquationFamily::complete_3_3 || family == EquationFamily::complete_3_7) {
        const HermitianMatrix h = power(nn, 1.0 / static_cast<double>(n + 1));
        HermitianMatrix g, g2;
        Matrix left;  // the factor written to the left of S in the assertion
        if (family == EquationFamily::complete_3_3) {
            g = k;
            // A^{r/2} B^{p0} A^r B^{p0} A^{r/2}, spelled as in the assertion.
            g2 = congruence(congruence(power(da, r), bp0), ar2);
            left = bp0 * ar2;
        } else {
            const double e = (2.0 * p0 + 1.0 + r) / (2.0 * p0 + 2.0 * r);
            const SpectralDecomposition dk = eigh(k);
            g = power(dk, e);
            g2 = power(dk, 2.0 * e);
            left = power(da, -r / 2.0) * g;
        }
        rep.solution = douglas_contraction(h, g).solution;
        rep.sandwich_residual = relative_frobenius_error(
            HermitianMatrix(g * rep.solution * g).matrix(), h.matrix());
        const auto [mid_a, mid_b] = alternating(rep.solution.matrix(), g2.matrix(), n);
        const Matrix right = left.transposed();
        const HermitianMatrix target = power(db, p);
        const HermitianMatrix recon_a(left * mid_a * right);
        const HermitianMatrix recon_b(left * mid_b * right);
        rep.equation_residual = relative_frobenius_error(recon_a.matrix(), target.matrix());
        rep.ordering_agreement = relative_frobenius_error(recon_b.matrix(), recon_a.matrix());
        const HermitianMatrix lhs = family == EquationFamily::complete_3_3
                                        ? HermitianMatrix(k * k)
                                        : g2;
        rep.inequality_verdict = loewner_geq(lhs, h, tol);
    } else {  // complete_3_11
        const double nd = static_cast<double>(n);
        const HermitianMatrix amr2 = power(da, -r / 2.0);
        const HermitianMatrix m = congruence(power(db, -p), amr2);
        const HermitianMatrix l_inv = congruence(power(db, -p0), amr2);
        const HermitianMatrix h = power(l_inv, (nd + 1.0) / nd);
        const HermitianMatrix m_half = power(m, 0.5);
        rep.solution = douglas_contraction(h, m_half).solution;
        rep.sandwich_residual = relative_frobenius_error(
            HermitianMatrix(m_half * rep.solution * m_half).matrix(), h.matrix());

        const SpectralDecomposition dn = eigh(nn);
        const HermitianMatrix n_half = power(dn, 0.5);
        const HermitianMatrix s_inv = inverse(rep.solution);
        const Matrix core = n_half * s_inv * n_half;
        const HermitianMatrix recon_a(matrix_power(core, n));
        const HermitianMatrix recon_b(n_half * s_inv * matrix_power(nn * s_inv, n - 1) * n_half);
        const SpectralDecomposition dk = eigh(k);
        const HermitianMatrix target = power(dk, nd + 1.0);
        rep.equation_residual = relative_frobenius_error(recon_a.matrix(), target.matrix());
        rep.ordering_agreement = relative_frobenius_error(recon_b.matrix(), recon_a.matrix());
        rep.inequality_verdict = loewner_geq(power(dk, 1.0 + 1.0 / nd), nn, tol);
    }
    return rep;
}

}  // namespace

std::string to_string(EquationFamily family) {
    for (const auto& e : kNames)
        if (e.family == family) return std::string(e.name);
    return "?";
}

std::optional<EquationFamily> parse_equation_family(std::string_view tag) {
    for (const auto& e : kNames)
        if (e.name == tag || e.label == tag) return e.family;
    return std::nullopt;
}

const std::vector<EquationFamily>& all_equation_families() {
    static const std::vector<EquationFamily> all = [] {
        std::vector<EquationFamily> v;
        for (const auto& e : kNames) v.push_back(e.family);
        return v;
    }();
    return all;
}

OrderKind hypothesis_order(EquationFamily family) {
    return is_chaotic(family) ? OrderKind::chaotic : OrderKind::loewner;
}

DouglasFactor douglas_contraction(const HermitianMatrix& h, const HermitianMatrix& g) {
    require_same_dim(h.dim(), g.dim(), "douglas_contraction");
    require_positive_definite(h, "douglas_contraction: H");
    const SpectralDecomposition dg = pd_decomposition(g, "douglas_contraction: G");
    HermitianMatrix s = congruence(h, apply_fn(dg, ScalarFunction::inverse()));
    const double norm = spectral_norm(s);
    return DouglasFactor{std::move(s), norm};
}

void check_equation_params(EquationFamily family, const ParamSet& params) {
    const std::string ctx = "solve(" + to_string(family) + ")";
    std::vector<std::string> bad;
    auto require = [&](bool ok, const char* what) {
        if (!ok) bad.emplace_back(what);
    };

    if (is_order(family) || is_chaotic(family)) {
        const double p = params.get("p", ctx), r = params.get("r", ctx),
                     s = params.get("s", ctx), t = params.get("t", ctx);
        const int n = params.get_n(ctx);
        if (is_order(family)) {
            require(r >= 0.0, "r >= 0");
            require(t >= 0.0, "t >= 0");
            require(p >= 1.0, "p >= 1");
            require(n >= 0, "n >= 0");
            require(constraint_holds((p + t) * s + r, (n + 1) * (1.0 + t + r)),
                    "(p+t)s+r = (n+1)(1+t+r)");
            require(s >= (1.0 + t) / (p + t) * (1.0 - kConstraintTol), "s >= (1+t)/(p+t)");
        } else {
            require(p > 0.0, "p > 0");
            require(r > 0.0, "r > 0");
            require(t >= 0.0, "t >= 0");
            require(n >= 1, "n >= 1");
            require(constraint_holds((p + t) * s + r, (n + 1) * (t + r)),
                    "(p+t)s+r = (n+1)(t+r)");
            require(s > 0.0, "s > 0");
        }
    } else {
        const double p = params.get("p", ctx), p0 = params.get("p0", ctx),
                     r = params.get("r", ctx);
        const int n = params.get_n(ctx);
        require(p > p0, "p > p0");
        require(p0 >= 0.0, "p0 >= 0");
        const EquationFamily base = substituted_base(family).value_or(family);
        if (base == EquationFamily::complete_3_3) {
            require(r >= 0.0 && r <= 1.0, "0 <= r <= 1");
            require(constraint_holds(p + r, (n + 1) * (2.0 * p0 + 2.0 * r)),
                    "p+r = (n+1)(2p0+2r)");
        } else if (base == EquationFamily::complete_3_7) {
            require(r >= 1.0, "r >= 1");
            require(constraint_holds(p + r, (n + 1) * (2.0 * p0 + 1.0 + r)),
                    "p+r = (n+1)(2p0+1+r)");
        } else {
            require(r >= 0.0, "r >= 0");
            require(2.0 * p0 + std::min(1.0, r) >= p * (1.0 - kConstraintTol),
                    "2p0+min{1,r} >= p");
            require(n >= 1, "n >= 1");
            require(constraint_holds(n * (p + r), (n + 1) * (p0 + r)), "n(p+r) = (n+1)(p0+r)");
        }
    }
    if (!bad.empty()) {
        std::string msg = ctx + ": parameter constraints violated:";
        for (const auto& b : bad) msg += " [" + b + "]";
        msg += " for " + params.to_string();
        throw ParamError(msg);
    }
}

SolutionReport solve_order(const HermitianMatrix& a, const HermitianMatrix& b,
                           const ParamSet& params, OrderSide side, const TolerancePolicy& tol) {
    const bool exchanged = side == OrderSide::C5;
    return solve_sandwich(a, b, params,
                          exchanged ? EquationFamily::order_C5 : EquationFamily::order_C4, 1.0,
                          exchanged, tol);
}

SolutionReport solve_chaotic(const HermitianMatrix& a, const HermitianMatrix& b,
                             const ParamSet& params, ChaoticSide side,
                             const TolerancePolicy& tol) {
    const bool exchanged = side == ChaoticSide::D5;
    SolutionReport rep = solve_sandwich(
        a, b, params, exchanged ? EquationFamily::chaotic_D5 : EquationFamily::chaotic_D4, 0.0,
        exchanged, tol);
    rep.approximate = params == chaotic_witness_params(*params.n);
    return rep;
}

SolutionReport solve_complete(const HermitianMatrix& a, const HermitianMatrix& b,
                              const ParamSet& params, EquationFamily family,
                              const TolerancePolicy& tol) {
    if (is_order(family) || is_chaotic(family)) {
        throw ParamError("solve_complete: " + to_string(family) + " is not a complete-form family");
    }
    require_same_dim(a.dim(), b.dim(), "solve_complete");
    check_equation_params(family, params);
    SolutionReport rep;
    if (const auto base = substituted_base(family)) {
        rep = solve_complete_direct(inverse(b), inverse(a), params, *base, tol);
        rep.family = family;
    } else {
        rep = solve_complete_direct(a, b, params, family, tol);
    }
    rep.order_verdict = loewner_geq(a, b, tol);
    finish(rep, tol);
    return rep;
}

SolutionReport solve(EquationFamily family, const HermitianMatrix& a, const HermitianMatrix& b,
                     const ParamSet& params, const TolerancePolicy& tol) {
    switch (family) {
        case EquationFamily::order_C4: return solve_order(a, b, params, OrderSide::C4, tol);
        case EquationFamily::order_C5: return solve_order(a, b, params, OrderSide::C5, tol);
        case EquationFamily::chaotic_D4: return solve_chaotic(a, b, params, ChaoticSide::D4, tol);
        case EquationFamily::chaotic_D5: return solve_chaotic(a, b, params, ChaoticSide::D5, tol);
        default: return solve_complete(a, b, params, family, tol);
    }
}

ParamSet complete_params(EquationFamily family, const ParamSet& known) {
    const std::string ctx = "complete_params(" + to_string(family) + ")";
    const bool sandwich = is_order(family) || is_chaotic(family);
    std::vector<std::string_view> unknown;
    for (std::string_view f : {"s", "n", "p"}) {
        if (f == "s" && !sandwich) continue;
        if (!known.has(f)) unknown.push_back(f);
    }
    if (unknown.size() != 1) {
        throw ParamError(ctx + ": exactly one of {s, n, p} must be unknown, found " +
                         std::to_string(unknown.size()));
    }
    const std::string_view want = unknown.front();
    ParamSet out = known;
    double value = 0.0;

    if (sandwich) {
        const double r = known.get("r", ctx), t = known.get("t", ctx);
        const double c = (is_order(family) ? 1.0 : 0.0) + t + r;
        if (want == "s") {
            value = ((known.get_n(ctx) + 1) * c - r) / (known.get("p", ctx) + t);
        } else if (want == "n") {
            value = ((known.get("p", ctx) + t) * known.get("s", ctx) + r) / c - 1.0;
        } else {
            value = ((known.get_n(ctx) + 1) * c - r) / known.get("s", ctx) - t;
        }
    } else {
        const double r = known.get("r", ctx), p0 = known.get("p0", ctx);
        const EquationFamily base = substituted_base(family).value_or(family);
        if (base == EquationFamily::complete_3_11) {
            if (want == "p") {
                const double n = known.get_n(ctx);
                if (n == 0) throw ParamError(ctx + ": n must be positive");
                value = (n + 1.0) * (p0 + r) / n - r;
            } else {
                const double p = known.get("p", ctx);
                if (p <= p0) throw ParamError(ctx + ": p > p0 required to solve for n");
                value = (p0 + r) / (p - p0);
            }
        } else {
            const double d = base == EquationFamily::complete_3_3 ? 2.0 * p0 + 2.0 * r
                                                                   : 2.0 * p0 + 1.0 + r;
            if (want == "p") {
                value = (known.get_n(ctx) + 1) * d - r;
            } else {
                value = (known.get("p", ctx) + r) / d - 1.0;
            }
        }
    }

    if (!std::isfinite(value)) throw ParamError(ctx + ": constraint has no finite solution");
    if (want == "n") {
        const double rounded = std::round(value);
        if (std::abs(value - rounded) > kIntegralTol || rounded < 0.0) {
            std::ostringstream os;
            os << ctx << ": no nonnegative integral n (solution " << value << ")";
            throw ParamError(os.str());
        }
        value = rounded;
    }
    out.set(want, value);
    check_equation_params(family, out);
    return out;
}

ParamSet chaotic_params_n1(double p, double t) {
    ParamSet ps;
    ps.p = p;
    ps.t = t;
    ps.r = p;
    ps.n = 1;
    ps.s = (p + 2.0 * t) / (p + t);
    return ps;
}

ParamSet chaotic_params_mn(int m, int n) {
    if (m < 1 || n < 1) throw ParamError("chaotic_params_mn: m and n must be positive");
    ParamSet ps;
    ps.p = 1.0;
    ps.r = 1.0 / n;
    ps.t = 1.0 / m;
    ps.s = static_cast<double>(m + n + 1) / static_cast<double>(m + 1);
    ps.n = n;
    return ps;
}

ParamSet order_witness_params(double p) {
    ParamSet ps;
    ps.p = p;
    ps.n = 0;
    ps.t = 0.0;
    ps.r = 0.0;
    ps.s = 1.0 / p;
    return ps;
}

ParamSet chaotic_witness_params(int n) {
    if (n < 1) throw ParamError("chaotic_witness_params: n must be positive");
    ParamSet ps;
    ps.p = 1.0;
    ps.s = 1.0;
    ps.t = 0.0;
    ps.r = 1.0 / n;
    ps.n = n;
    return ps;
}

ScaledChaoticCheck scaled_chaotic_check(const HermitianMatrix& a, const HermitianMatrix& b,
                                        double scale, int m, int n, const TolerancePolicy& tol) {
    if (!(scale > 0.0)) throw ParamError("scaled_chaotic_check: scale must be positive");
    const HermitianMatrix scaled = std::pow(scale, n + 1) * a;
    SolutionReport rep = solve_chaotic(scaled, b, chaotic_params_mn(m, n), ChaoticSide::D4, tol);
    return ScaledChaoticCheck{chaotic_geq(scaled, b, tol), std::move(rep)};
}

}  // namespace loewner

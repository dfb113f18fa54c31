#include "loewner/furuta.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "loewner/spectra.hpp"

namespace loewner {
namespace {

constexpr double kConstraintSlack = 1e-12;

bool geq(double a, double b) { return a >= b - kConstraintSlack * std::max(1.0, std::abs(b)); }

class Checker {
public:
    void require(bool ok, std::string name) {
        if (!ok) {
            out_.valid = false;
            out_.violations.push_back(std::move(name));
        }
    }
    Validation take() { return std::move(out_); }
    Validation& result() { return out_; }

private:
    Validation out_;
};

double ratio(double num, double den, const char* what) {
    if (den == 0.0 || !std::isfinite(num / den)) {
        throw ParamError(std::string(what) + ": degenerate exponent (zero denominator)");
    }
    return num / den;
}

double complete_form_s(double p, double p0, double r) {
    return std::min(p, 2.0 * p0 + std::min(1.0, r));
}

// (A^{r/2} (A^{e} B^p A^{e})^s A^{r/2})^{outer} with e = inner_exp
HermitianMatrix nested_sandwich(const SpectralDecomposition& da, const HermitianMatrix& bp,
                                double inner_exp, double s, double r, double outer) {
    const HermitianMatrix inner = congruence(bp, power(da, inner_exp));
    const HermitianMatrix core = congruence(power(inner, s), power(da, r / 2.0));
    return power(core, outer);
}

}  // namespace

std::string to_string(InequalityFamily family) {
    switch (family) {
        case InequalityFamily::furuta_B: return "furuta_B";
        case InequalityFamily::furuta_A: return "furuta_A";
        case InequalityFamily::grand_furuta: return "grand_furuta";
        case InequalityFamily::complete_form: return "complete_form";
        case InequalityFamily::thm_1_9: return "thm_1_9";
        case InequalityFamily::thm_1_10: return "thm_1_10";
        case InequalityFamily::lowner_heinz: return "lowner_heinz";
    }
    return "?";
}

const std::vector<InequalityFamily>& all_inequality_families() {
    static const std::vector<InequalityFamily> all = {
        InequalityFamily::furuta_B,      InequalityFamily::furuta_A, InequalityFamily::grand_furuta,
        InequalityFamily::complete_form, InequalityFamily::thm_1_9,  InequalityFamily::thm_1_10,
        InequalityFamily::lowner_heinz,
    };
    return all;
}

std::optional<InequalityFamily> parse_inequality_family(std::string_view tag) {
    for (auto f : all_inequality_families())
        if (to_string(f) == tag) return f;
    return std::nullopt;
}

OrderKind hypothesis_order(InequalityFamily family) {
    return family == InequalityFamily::thm_1_10 ? OrderKind::chaotic : OrderKind::loewner;
}

Validation validate(InequalityFamily family, const ParamSet& params) {
    const std::string ctx = "validate(" + to_string(family) + ")";
    Checker c;
    switch (family) {
        case InequalityFamily::furuta_B:
        case InequalityFamily::furuta_A: {
            const double p = params.get("p", ctx), q = params.get("q", ctx),
                         r = params.get("r", ctx);
            c.require(p >= 0.0, "p >= 0");
            c.require(q >= 1.0, "q >= 1");
            c.require(r >= 0.0, "r >= 0");
            c.require(geq((1.0 + r) * q, p + r), "(1+r)q >= p+r");
            break;
        }
        case InequalityFamily::grand_furuta: {
            const double p = params.get("p", ctx), r = params.get("r", ctx),
                         s = params.get("s", ctx), t = params.get("t", ctx);
            c.require(t >= 0.0 && t <= 1.0, "0 <= t <= 1");
            c.require(p >= 1.0, "p >= 1");
            c.require(s >= 1.0, "s >= 1");
            c.require(geq(r, t), "r >= t");
            break;
        }
        case InequalityFamily::complete_form: {
            const double p = params.get("p", ctx), p0 = params.get("p0", ctx),
                         r = params.get("r", ctx);
            c.require(r >= 0.0, "r >= 0");
            c.require(p > p0, "p > p0");
            c.require(p0 >= 0.0, "p0 >= 0");
            c.require(p0 + r > 0.0, "p0 + r > 0");
            const double s = complete_form_s(p, p0, r);
            c.result().derived_s = s;
            if (params.s) {
                c.require(std::abs(*params.s - s) <= kConstraintSlack * std::max(1.0, s),
                          "s = min{p, 2p0+min{1,r}}");
            }
            break;
        }
        case InequalityFamily::thm_1_9: {
            const double p = params.get("p", ctx), r = params.get("r", ctx),
                         s = params.get("s", ctx), t = params.get("t", ctx);
            c.require(p >= 1.0, "p >= 1");
            c.require(t >= 0.0, "t >= 0");
            c.require(r >= 0.0, "r >= 0");
            c.require(geq(s, (1.0 + t) / (p + t)), "s >= (1+t)/(p+t)");
            break;
        }
        case InequalityFamily::thm_1_10: {
            const double p = params.get("p", ctx), r = params.get("r", ctx),
                         s = params.get("s", ctx), t = params.get("t", ctx);
            c.require(p > 0.0, "p > 0");
            c.require(t >= 0.0, "t >= 0");
            c.require(r >= 0.0, "r >= 0");
            c.require(p + t > 0.0 && geq(s, t / (p + t)), "s >= t/(p+t)");
            c.require((p + t) * s + r > 0.0, "(p+t)s+r > 0");
            break;
        }
        case InequalityFamily::lowner_heinz: {
            const double alpha = params.get("alpha", ctx);
            c.require(alpha >= 0.0 && alpha <= 1.0, "0 <= alpha <= 1");
            break;
        }
    }
    return c.take();
}

InequalityEvaluation evaluate(InequalityFamily family, const HermitianMatrix& a,
                              const HermitianMatrix& b, const ParamSet& params,
                              const TolerancePolicy& tol) {
    require_same_dim(a.dim(), b.dim(), "evaluate");
    const std::string ctx = "evaluate(" + to_string(family) + ")";
    const SpectralDecomposition da = eigh(a);
    const SpectralDecomposition db = eigh(b);
    if (!(da.lambda_min() > 0.0)) throw DomainError(ctx + ": A is not positive definite", da.lambda_min());
    if (!(db.lambda_min() > 0.0)) throw DomainError(ctx + ": B is not positive definite", db.lambda_min());

    HermitianMatrix lhs, rhs;
    switch (family) {
        case InequalityFamily::furuta_B: {
            const double p = params.get("p", ctx), q = params.get("q", ctx),
                         r = params.get("r", ctx);
            const double outer = ratio(1.0, q, ctx.c_str());
            const HermitianMatrix br2 = power(db, r / 2.0);
            lhs = power(congruence(power(da, p), br2), outer);
            rhs = power(congruence(power(db, p), br2), outer);
            break;
        }
        case InequalityFamily::furuta_A: {
            const double p = params.get("p", ctx), q = params.get("q", ctx),
                         r = params.get("r", ctx);
            const double outer = ratio(1.0, q, ctx.c_str());
            const HermitianMatrix ar2 = power(da, r / 2.0);
            lhs = power(congruence(power(da, p), ar2), outer);
            rhs = power(congruence(power(db, p), ar2), outer);
            break;
        }
        case InequalityFamily::grand_furuta: {
            const double p = params.get("p", ctx), r = params.get("r", ctx),
                         s = params.get("s", ctx), t = params.get("t", ctx);
            const double outer = ratio(1.0 - t + r, (p - t) * s + r, ctx.c_str());
            lhs = power(da, 1.0 - t + r);
            rhs = nested_sandwich(da, power(db, p), -t / 2.0, s, r, outer);
            break;
        }
        case InequalityFamily::complete_form: {
            const double p = params.get("p", ctx), p0 = params.get("p0", ctx),
                         r = params.get("r", ctx);
            const double s = params.s.value_or(complete_form_s(p, p0, r));
            const HermitianMatrix ar2 = power(da, r / 2.0);
            lhs = power(congruence(power(db, p0), ar2), ratio(s + r, p0 + r, ctx.c_str()));
            rhs = power(congruence(power(db, p), ar2), ratio(s + r, p + r, ctx.c_str()));
            break;
        }
        case InequalityFamily::thm_1_9:
        case InequalityFamily::thm_1_10: {
            const double p = params.get("p", ctx), r = params.get("r", ctx),
                         s = params.get("s", ctx), t = params.get("t", ctx);
            const double head = (family == InequalityFamily::thm_1_9 ? 1.0 : 0.0) + t + r;
            const double outer = ratio(head, (p + t) * s + r, ctx.c_str());
            lhs = power(da, head);
            rhs = nested_sandwich(da, power(db, p), t / 2.0, s, r, outer);
            break;
        }
        case InequalityFamily::lowner_heinz: {
            const double alpha = params.get("alpha", ctx);
            lhs = power(da, alpha);
            rhs = power(db, alpha);
            break;
        }
    }
    OrderVerdict verdict = loewner_geq(lhs, rhs, tol);
    return InequalityEvaluation{std::move(lhs), std::move(rhs), verdict};
}

MarginSurface margin_surface(InequalityFamily family, const HermitianMatrix& a,
                             const HermitianMatrix& b, const ParamSet& base,
                             std::string_view row_field, std::vector<double> row_values,
                             std::string_view col_field, std::vector<double> col_values,
                             const TolerancePolicy& tol) {
    MarginSurface out{std::string(row_field), std::string(col_field), std::move(row_values),
                      std::move(col_values), {}};
    out.margins.reserve(out.row_values.size() * out.col_values.size());
    for (double rv : out.row_values) {
        for (double cv : out.col_values) {
            ParamSet node = base;
            node.set(row_field, rv);
            node.set(col_field, cv);
            out.margins.push_back(evaluate(family, a, b, node, tol).verdict.margin);
        }
    }
    return out;
}

}  // namespace loewner

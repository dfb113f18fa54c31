#include "loewner/harness.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "loewner/matrix_io.hpp"
#include "loewner/rng.hpp"
#include "loewner/spectra.hpp"

namespace loewner {
namespace {

constexpr std::size_t kMaxErrorMessages = 8;

GridEntry entry(const char* params, const char* solve_for = nullptr) {
    GridEntry e;
    e.params = ParamSet::parse(params);
    if (solve_for) e.solve_for = solve_for;
    return e;
}

GridEntry entry(ParamSet params) {
    GridEntry e;
    e.params = std::move(params);
    return e;
}

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

std::string describe_instance(const std::string& tag, const InstanceFingerprint& fp,
                              const MatrixPair& pair, const std::string& detail) {
    std::ostringstream os;
    os << "family " << tag << " dim " << fp.dim << " trial " << fp.trial << " stream_seed "
       << fp.stream_seed << " params " << fp.params.to_string() << "\n"
       << detail << "\nA:\n"
       << matrix_to_text(pair.a) << "B:\n"
       << matrix_to_text(pair.b);
    return os.str();
}

}  // namespace

std::string family_tag(const FamilyId& family) {
    return std::visit([](auto f) { return to_string(f); }, family);
}

std::optional<FamilyId> parse_family(std::string_view tag) {
    if (auto f = parse_inequality_family(tag)) return FamilyId{*f};
    if (auto f = parse_equation_family(tag)) return FamilyId{*f};
    return std::nullopt;
}

OrderKind hypothesis_order(const FamilyId& family) {
    return std::visit([](auto f) { return hypothesis_order(f); }, family);
}

void CampaignConfig::validate() const {
    if (trials < 1) throw PreconditionError("campaign: trials must be >= 1");
    for (std::size_t d : dims) {
        if (d < 1 || d > 64) throw PreconditionError("campaign: dims must lie in [1, 64]");
    }
    if (!(condition_cap > 1.0)) throw PreconditionError("campaign: condition_cap must be > 1");
    tolerance.validate();
    for (const auto& [tag, entries] : param_grid) {
        const auto family = parse_family(tag);
        if (!family) throw PreconditionError("campaign: unknown family '" + tag + "' in param_grid");
        for (const auto& e : entries) (void)resolve_entry(*family, e);
    }
}

std::vector<GridEntry> default_param_grid(const FamilyId& family) {
    return std::visit(
        overloaded{
            [](InequalityFamily f) -> std::vector<GridEntry> {
                switch (f) {
                    case InequalityFamily::furuta_B:
                    case InequalityFamily::furuta_A:
                        return {entry("p=1,q=1,r=0"),     entry("p=2,q=2,r=0"),
                                entry("p=2,q=1.5,r=1"),   entry("p=3,q=2,r=1"),
                                entry("p=4,q=2,r=2"),     entry("p=0.5,q=1,r=0"),
                                entry("p=3,q=1.5,r=3"),   entry("p=5,q=3,r=1"),
                                entry("p=1.5,q=1.25,r=1"), entry("p=2.5,q=3,r=0.5")};
                    case InequalityFamily::grand_furuta:
                        return {entry("p=1,r=0,s=1,t=0"),      entry("p=2,r=1,s=1,t=0.5"),
                                entry("p=2,r=1,s=2,t=1"),      entry("p=3,r=0.5,s=1.5,t=0.25"),
                                entry("p=1.5,r=2,s=1,t=1"),    entry("p=2,r=0.5,s=1,t=0.5"),
                                entry("p=4,r=1,s=1,t=0"),      entry("p=1,r=1,s=3,t=1"),
                                entry("p=2.5,r=1.5,s=2,t=0.75"), entry("p=3,r=3,s=1,t=0")};
                    case InequalityFamily::complete_form:
                        return {entry("p=2,p0=1,r=1"),   entry("p=3,p0=1,r=1"),
                                entry("p=1,p0=0.5,r=0"), entry("p=2,p0=0.5,r=0.5"),
                                entry("p=4,p0=1,r=2"),   entry("p=1.5,p0=0,r=1"),
                                entry("p=3,p0=2,r=0"),   entry("p=2,p0=0.25,r=1"),
                                entry("p=5,p0=2,r=1"),   entry("p=1,p0=0.2,r=0.3")};
                    case InequalityFamily::thm_1_9:
                        return {entry("p=1,r=0,s=1,t=0"),     entry("p=2,r=0,s=0.5,t=0"),
                                entry("p=2,r=1,s=1,t=1"),     entry("p=3,r=1,s=0.5,t=1"),
                                entry("p=1.5,r=0.5,s=2,t=0.5"), entry("p=4,r=2,s=0.4,t=0"),
                                entry("p=2,r=3,s=1,t=2"),     entry("p=1,r=1,s=1,t=0.5"),
                                entry("p=3,r=0,s=1,t=0"),     entry("p=2.5,r=1,s=0.6,t=0.5")};
                    case InequalityFamily::thm_1_10:
                        return {entry("p=1,r=1,s=1,t=0"),     entry("p=0.5,r=1,s=1,t=0.5"),
                                entry("p=2,r=1,s=0.5,t=1"),   entry("p=1,r=0.5,s=2,t=1"),
                                entry("p=3,r=1,s=0.1,t=0"),   entry("p=1,r=2,s=1,t=1"),
                                entry("p=0.5,r=0.5,s=0.5,t=0"), entry("p=2,r=0,s=1,t=1"),
                                entry("p=1.5,r=1,s=1,t=0.5"), entry("p=1,r=1,s=0.5,t=1")};
                    case InequalityFamily::lowner_heinz:
                        return {entry("alpha=0"), entry("alpha=0.25"), entry("alpha=0.5"),
                                entry("alpha=0.75"), entry("alpha=1")};
                }
                return {};
            },
            [](EquationFamily f) -> std::vector<GridEntry> {
                switch (f) {
                    case EquationFamily::order_C4:
                    case EquationFamily::order_C5:
                        return {entry(order_witness_params(1.0)), entry(order_witness_params(2.0)),
                                entry("p=3,t=0,r=1,n=1", "s"), entry("p=2,t=1,r=1,n=1", "s"),
                                entry("p=1.5,t=0.5,r=0.5,n=0", "s"),
                                entry("p=2,t=0.5,r=0,n=2", "s")};
                    case EquationFamily::chaotic_D4:
                    case EquationFamily::chaotic_D5:
                        return {entry(chaotic_params_n1(1.0, 0.0)), entry(chaotic_params_n1(2.0, 1.0)),
                                entry(chaotic_params_mn(2, 3)), entry(chaotic_params_mn(1, 1)),
                                entry("p=2,t=0.5,r=1,n=2", "s")};
                    case EquationFamily::complete_3_3:
                    case EquationFamily::complete_3_5:
                        return {entry("p0=0,r=1,n=0", "p"), entry("p0=0.5,r=0.5,n=0", "p"),
                                entry("p0=0.25,r=0.5,n=1", "p"), entry("p0=1,r=0,n=0", "p"),
                                entry("p0=0,r=0.5,n=2", "p")};
                    case EquationFamily::complete_3_7:
                    case EquationFamily::complete_3_9:
                        return {entry("p0=0,r=1,n=0", "p"), entry("p0=0.5,r=1,n=0", "p"),
                                entry("p0=0,r=2,n=0", "p"), entry("p0=0.25,r=1.5,n=1", "p"),
                                entry("p0=0,r=1,n=1", "p")};
                    case EquationFamily::complete_3_11:
                    case EquationFamily::complete_3_13:
                        return {entry("p0=0.5,r=0,n=1", "p"), entry("p0=0,r=1,n=1", "p"),
                                entry("p0=1,r=1,n=2", "p"), entry("p0=0.5,r=0.5,n=1", "p"),
                                entry("p0=1,r=0,n=3", "p")};
                }
                return {};
            }},
        family);
}

CampaignConfig default_campaign_config() {
    CampaignConfig cfg;
    for (auto f : all_inequality_families()) cfg.families.emplace_back(f);
    for (auto f : all_equation_families()) cfg.families.emplace_back(f);
    cfg.dims = {2, 3, 4};
    cfg.trials = 20;
    cfg.seed = 20240601;
    return cfg;
}

bool entry_is_valid(const FamilyId& family, const ParamSet& params) {
    return std::visit(overloaded{[&](InequalityFamily f) { return validate(f, params).valid; },
                                 [&](EquationFamily f) {
                                     try {
                                         check_equation_params(f, params);
                                         return true;
                                     } catch (const ParamError&) {
                                         return false;
                                     }
                                 }},
                      family);
}

ParamSet resolve_entry(const FamilyId& family, const GridEntry& e) {
    ParamSet params = e.params;
    if (e.solve_for) {
        const auto* eq = std::get_if<EquationFamily>(&family);
        if (!eq) throw ParamError("solve_for applies to equation families only");
        if (params.has(*e.solve_for)) params.clear(*e.solve_for);
        params = complete_params(*eq, params);
    }
    if (!e.allow_invalid && !entry_is_valid(family, params)) {
        std::string why;
        if (const auto* f = std::get_if<InequalityFamily>(&family)) {
            for (const auto& v : validate(*f, params).violations) why += " [" + v + "]";
        }
        throw ParamError("grid entry " + params.to_string() + " is invalid for " +
                         family_tag(family) + why + "; set allow_invalid to keep it");
    }
    return params;
}

std::size_t CampaignReport::total_violations() const {
    std::size_t n = 0;
    for (const auto& f : families) n += f.violations;
    return n;
}

std::size_t CampaignReport::total_errors() const {
    std::size_t n = 0;
    for (const auto& f : families) n += f.errors;
    return n;
}

MatrixPair draw_pair(OrderKind relation, std::size_t dim, std::uint64_t stream_seed,
                     const CampaignConfig& cfg) {
    GenSpec spec;
    spec.dim = dim;
    spec.seed = stream_seed;
    spec.condition_cap = cfg.condition_cap;
    spec.gap = cfg.gap;
    spec.perturbation = cfg.perturbation;
    spec.tolerance = cfg.tolerance;
    if (relation == OrderKind::loewner) return random_ordered_pair(spec);
    if (cfg.chaotic_only && dim >= 2 && cfg.perturbation > 0.0) {
        if (auto pair = random_chaotic_only_pair(spec, cfg.chaotic_budget)) return *pair;
    }
    return random_chaotic_pair(spec);
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    cfg.validate();

    CampaignReport report;
    report.seed = cfg.seed;
    report.dims = cfg.dims;
    report.trials = cfg.trials;

    for (const FamilyId& family : cfg.families) {
        const std::string tag = family_tag(family);
        const auto grid_it = cfg.param_grid.find(tag);
        const std::vector<GridEntry> grid =
            grid_it != cfg.param_grid.end() ? grid_it->second : default_param_grid(family);

        std::vector<std::pair<ParamSet, bool>> params;  // (params, valid)
        for (const auto& e : grid) {
            ParamSet ps = resolve_entry(family, e);
            const bool valid = entry_is_valid(family, ps);
            params.emplace_back(std::move(ps), valid);
        }

        FamilyStats stats;
        stats.family = tag;
        const bool is_equation = std::holds_alternative<EquationFamily>(family);
        if (is_equation) stats.residual = ResidualStats{};

        for (std::size_t dim : cfg.dims) {
            for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
                const std::uint64_t stream = derive_seed(cfg.seed, tag, dim, trial);
                const MatrixPair pair = draw_pair(hypothesis_order(family), dim, stream, cfg);
                for (const auto& [ps, valid] : params) {
                    InstanceFingerprint fp{stream, dim, trial, ps};
                    ++stats.checked;
                    bool held = false;
                    double margin = 0.0;
                    std::string detail;
                    try {
                        if (const auto* f = std::get_if<InequalityFamily>(&family)) {
                            const auto ev = evaluate(*f, pair.a, pair.b, ps, cfg.tolerance);
                            held = ev.verdict.holds;
                            margin = ev.verdict.margin;
                            detail = "margin " + format_double(margin) + " tolerance " +
                                     format_double(ev.verdict.tolerance);
                        } else {
                            const auto f_eq = std::get<EquationFamily>(family);
                            const auto rep = solve(f_eq, pair.a, pair.b, ps, cfg.tolerance);
                            held = rep.contraction;
                            margin = 1.0 - rep.norm_S;
                            stats.residual->count += 1;
                            stats.residual->max = std::max(stats.residual->max, rep.equation_residual);
                            stats.residual->sum += rep.equation_residual;
                            detail = "norm_S " + format_double(rep.norm_S) + " residual " +
                                     format_double(rep.equation_residual);
                        }
                    } catch (const std::exception& ex) {
                        ++stats.errors;
                        held = false;
                        detail = std::string("error: ") + ex.what();
                        if (report.error_messages.size() < kMaxErrorMessages) {
                            report.error_messages.push_back(tag + ": " + ex.what());
                        }
                        // errors do not contribute to worst_margin
                        ++stats.failed;
                        if (valid) {
                            ++stats.violations;
                            if (!report.first_violation) {
                                report.first_violation = describe_instance(tag, fp, pair, detail);
                            }
                        }
                        continue;
                    }
                    if (held) {
                        ++stats.held;
                    } else {
                        ++stats.failed;
                        if (valid) {
                            ++stats.violations;
                            if (!report.first_violation) {
                                report.first_violation = describe_instance(tag, fp, pair, detail);
                            }
                        }
                    }
                    if (!stats.worst_margin || margin < *stats.worst_margin) {
                        stats.worst_margin = margin;
                        stats.worst_instance = fp;
                    }
                }
            }
        }
        report.families.push_back(std::move(stats));
    }

    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SearchResult search_counterexample(InequalityFamily family, const ParamSet& params,
                                   const SearchOptions& options) {
    SearchResult result;
    const Validation v = validate(family, params);
    if (v.valid) {
        result.vacuous = true;
        result.advisory = "parameters satisfy the hypotheses of " + to_string(family) +
                          "; no counterexample can exist, search is a sanity check only";
    }
    if (options.dims.empty()) throw PreconditionError("search: dims must be non-empty");

    CampaignConfig cfg;
    cfg.condition_cap = options.condition_cap;
    cfg.tolerance = options.tolerance;
    cfg.chaotic_only = false;
    const std::string tag = to_string(family);

    for (std::size_t draw = 0; draw < options.budget; ++draw) {
        const std::size_t dim = options.dims[draw % options.dims.size()];
        const std::uint64_t stream = derive_seed(options.seed, tag, dim, draw);
        MatrixPair pair = draw_pair(hypothesis_order(family), dim, stream, cfg);
        ++result.draws;
        InequalityEvaluation ev;
        try {
            ev = evaluate(family, pair.a, pair.b, params, options.tolerance);
        } catch (const DomainError&) {
            continue;
        }
        if (ev.verdict.margin < -10.0 * ev.verdict.tolerance) {
            result.witness = Witness{InstanceFingerprint{stream, dim, draw, params}, std::move(pair),
                                     ev.verdict.margin, ev.verdict.tolerance};
            break;
        }
    }
    if (!result.witness && !result.vacuous) {
        result.advisory = "budget exhausted without a witness; inconclusive";
    }
    return result;
}

InequalityEvaluation reevaluate(InequalityFamily family, const Witness& witness,
                                const SearchOptions& options) {
    CampaignConfig cfg;
    cfg.condition_cap = options.condition_cap;
    cfg.tolerance = options.tolerance;
    cfg.chaotic_only = false;
    const MatrixPair pair = draw_pair(hypothesis_order(family), witness.fingerprint.dim,
                                      witness.fingerprint.stream_seed, cfg);
    return evaluate(family, pair.a, pair.b, witness.fingerprint.params, options.tolerance);
}

}  // namespace loewner

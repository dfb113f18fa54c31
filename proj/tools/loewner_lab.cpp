// loewner-lab: campaigns, single solves, counterexample search and pair generation.
//
// exit codes: 0 ok, 1 violation in a valid-parameter campaign, 2 usage or
// config error, 3 numeric failure

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loewner/equations.hpp"
#include "loewner/harness.hpp"
#include "loewner/matrix_io.hpp"
#include "loewner/report_json.hpp"
#include "loewner/spectra.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct VerifyArgs {
    std::string config;
    std::string report = "-";
    std::string format = "json";
    bool no_wall_time = false;
};

struct SolveArgs {
    std::string family;
    std::string a_path;
    std::string b_path;
    std::string params;
    std::string solve_for;
};

struct SearchArgs {
    std::string family;
    std::string params;
    std::size_t budget = 10000;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims{2};
    double condition_cap = 1e2;
};

struct GenArgs {
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    std::string relation = "ordered";
    double condition_cap = 1e4;
    std::size_t budget = 1000;
    std::string out = "-";
};

int run_verify(const VerifyArgs& args) {
    using namespace loewner;
    const CampaignConfig cfg =
        args.config.empty() ? default_campaign_config() : read_campaign_config(args.config);
    const ReportFormat format = args.format == "csv" ? ReportFormat::csv : ReportFormat::json;

    const CampaignReport report = run_campaign(cfg);
    const std::string text = render_report(report, format, !args.no_wall_time);
    if (args.report == "-") {
        std::cout << text;
    } else {
        std::ofstream out(args.report, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + args.report + "' for writing");
        out << text;
    }

    const std::size_t violations = report.total_violations();
    if (violations == 0) return kExitOk;
    std::cerr << "loewner-lab: " << violations << " violation(s) at valid parameters\n";
    if (report.first_violation) std::cerr << "first violation:\n" << *report.first_violation;
    // every violation an exception: numeric trouble rather than a false inequality
    std::size_t errors = 0;
    for (const auto& f : report.families) errors += std::min(f.errors, f.violations);
    return errors >= violations ? kExitNumeric : kExitViolation;
}

int run_solve(const SolveArgs& args) {
    using namespace loewner;
    const auto family = parse_equation_family(args.family);
    if (!family) throw ParamError("unknown equation family '" + args.family + "'");
    const HermitianMatrix a = read_matrix_file(args.a_path);
    const HermitianMatrix b = read_matrix_file(args.b_path);
    ParamSet params = ParamSet::parse(args.params);
    if (!args.solve_for.empty()) {
        params.clear(args.solve_for);
        params = complete_params(*family, params);
    }
    const SolutionReport report = solve(*family, a, b, params);
    std::cout << to_json(report).dump(2) << '\n';
    return kExitOk;
}

int run_search(const SearchArgs& args) {
    using namespace loewner;
    const auto family = parse_inequality_family(args.family);
    if (!family) throw ParamError("unknown inequality family '" + args.family + "'");
    const ParamSet params = ParamSet::parse(args.params);
    SearchOptions opts;
    opts.budget = args.budget;
    opts.seed = args.seed;
    opts.dims = args.dims;
    opts.condition_cap = args.condition_cap;
    const SearchResult result = search_counterexample(*family, params, opts);
    std::cout << to_json(result, *family, params).dump(2) << '\n';
    if (!result.advisory.empty()) std::cerr << "advisory: " << result.advisory << '\n';
    return kExitOk;
}

int run_gen(const GenArgs& args) {
    using namespace loewner;
    const auto relation = parse_relation(args.relation);
    if (!relation) throw ParamError("unknown relation '" + args.relation + "'");
    GenSpec spec;
    spec.dim = args.dim;
    spec.seed = args.seed;
    spec.condition_cap = args.condition_cap;

    std::optional<MatrixPair> pair;
    switch (*relation) {
        case Relation::ordered: pair = random_ordered_pair(spec); break;
        case Relation::chaotic: pair = random_chaotic_pair(spec); break;
        case Relation::unordered: pair = random_unordered_pair(spec, args.budget); break;
    }
    if (!pair) {
        std::cerr << "loewner-lab: no unordered pair within " << args.budget << " draws\n";
        return kExitNumeric;
    }
    if (args.out == "-") {
        write_pair(std::cout, *pair);
    } else {
        std::ofstream out(args.out);
        if (!out) throw std::runtime_error("cannot open '" + args.out + "' for writing");
        write_pair(out, *pair);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Furuta-type operator inequality and operator equation laboratory", "loewner-lab"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("--config", verify_args.config, "campaign config (JSON); default campaign if omitted")
        ->check(CLI::ExistingFile);
    verify->add_option("--report", verify_args.report, "report path, - for stdout");
    verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--no-wall-time", verify_args.no_wall_time, "omit wall time from the JSON report");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve one operator equation, print its report as JSON");
    solve->add_option("--family", solve_args.family, "equation family, e.g. C4 or 3-11")->required();
    solve->add_option("--A", solve_args.a_path, "matrix file for A")->required()->check(CLI::ExistingFile);
    solve->add_option("--B", solve_args.b_path, "matrix file for B")->required()->check(CLI::ExistingFile);
    solve->add_option("--params", solve_args.params, "e.g. p=2,t=0,r=1,n=1")->required();
    solve->add_option("--solve-for", solve_args.solve_for, "fill this field from the exponent constraint")
        ->check(CLI::IsMember({"s", "n", "p"}));

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "rejection-sample a counterexample");
    search->add_option("--family", search_args.family, "inequality family tag")->required();
    search->add_option("--params", search_args.params)->required();
    search->add_option("--budget", search_args.budget);
    search->add_option("--seed", search_args.seed);
    search->add_option("--dims", search_args.dims)->delimiter(',');
    search->add_option("--condition-cap", search_args.condition_cap);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a seeded matrix pair");
    gen->add_option("--dim", gen_args.dim)->required();
    gen->add_option("--seed", gen_args.seed)->required();
    gen->add_option("--relation", gen_args.relation)
        ->check(CLI::IsMember({"ordered", "chaotic", "unordered"}));
    gen->add_option("--condition-cap", gen_args.condition_cap);
    gen->add_option("--budget", gen_args.budget, "draws allowed for unordered pairs");
    gen->add_option("--out", gen_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) return run_verify(verify_args);
        if (*solve) return run_solve(solve_args);
        if (*search) return run_search(search_args);
        if (*gen) return run_gen(gen_args);
    } catch (const loewner::ConfigError& e) {
        std::cerr << "loewner-lab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const loewner::MatrixFormatError& e) {
        std::cerr << "loewner-lab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const loewner::NumericError& e) {
        std::cerr << "loewner-lab: numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const loewner::ConvergenceError& e) {
        std::cerr << "loewner-lab: numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const loewner::DomainError& e) {
        std::cerr << "loewner-lab: numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {  // ParamError, PreconditionError, DimensionError
        std::cerr << "loewner-lab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "loewner-lab: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitUsage;
}

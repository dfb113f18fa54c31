#include "loewner/report_json.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "loewner/matrix_io.hpp"

namespace loewner {
namespace {

using nlohmann::json;

// NaN and infinities become null rather than invalid JSON.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json opt_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const char* where) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key)) {
            throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
        }
    }
}

ParamSet params_from_json(const json& v) {
    if (v.is_string()) return ParamSet::parse(v.get<std::string>());
    if (!v.is_object()) throw ConfigError("params must be a string or an object");
    ParamSet ps;
    for (const auto& [key, value] : v.items()) {
        if (!value.is_number()) throw ConfigError("param '" + key + "' must be a number");
        ps.set(key, value.get<double>());
    }
    return ps;
}

GridEntry grid_entry_from_json(const json& v) {
    GridEntry e;
    if (v.is_string()) {
        e.params = ParamSet::parse(v.get<std::string>());
        return e;
    }
    if (!v.is_object()) throw ConfigError("param_grid entry must be a string or an object");
    reject_unknown_keys(v, {"params", "allow_invalid", "solve_for"}, "param_grid entry");
    if (v.contains("params")) e.params = params_from_json(v.at("params"));
    e.allow_invalid = v.value("allow_invalid", false);
    if (v.contains("solve_for")) e.solve_for = v.at("solve_for").get<std::string>();
    return e;
}

json fingerprint_to_json(const InstanceFingerprint& fp) {
    return json{{"stream_seed", fp.stream_seed},
                {"dim", fp.dim},
                {"trial", fp.trial},
                {"params", fp.params.to_string()}};
}

InstanceFingerprint fingerprint_from_json(const json& v) {
    InstanceFingerprint fp;
    fp.stream_seed = v.at("stream_seed").get<std::uint64_t>();
    fp.dim = v.at("dim").get<std::size_t>();
    fp.trial = v.at("trial").get<std::size_t>();
    fp.params = ParamSet::parse(v.at("params").get<std::string>());
    return fp;
}

std::optional<double> read_opt_number(const json& v, const char* key) {
    if (!v.contains(key) || v.at(key).is_null()) return std::nullopt;
    return v.at(key).get<double>();
}

}  // namespace

CampaignConfig campaign_config_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("campaign config must be a JSON object");
    reject_unknown_keys(doc,
                        {"families", "dims", "trials", "seed", "tolerance", "param_grid",
                         "condition_cap", "gap", "perturbation", "chaotic_only", "chaotic_budget"},
                        "campaign config");
    CampaignConfig cfg = default_campaign_config();
    try {
        if (doc.contains("families")) {
            cfg.families.clear();
            for (const auto& tag : doc.at("families")) {
                const auto f = parse_family(tag.get<std::string>());
                if (!f) throw ConfigError("unknown family '" + tag.get<std::string>() + "'");
                cfg.families.push_back(*f);
            }
        }
        if (doc.contains("dims")) cfg.dims = doc.at("dims").get<std::vector<std::size_t>>();
        if (doc.contains("trials")) {
            const auto trials = doc.at("trials").get<long long>();
            if (trials < 1) throw ConfigError("trials must be >= 1");
            cfg.trials = static_cast<std::size_t>(trials);
        }
        if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
        if (doc.contains("tolerance")) {
            const auto& t = doc.at("tolerance");
            reject_unknown_keys(t, {"rel", "floor"}, "tolerance");
            cfg.tolerance.rel = t.value("rel", cfg.tolerance.rel);
            cfg.tolerance.floor = t.value("floor", cfg.tolerance.floor);
        }
        if (doc.contains("param_grid")) {
            for (const auto& [tag, entries] : doc.at("param_grid").items()) {
                const auto f = parse_family(tag);
                if (!f) throw ConfigError("param_grid: unknown family '" + tag + "'");
                std::vector<GridEntry> grid;
                for (const auto& e : entries) grid.push_back(grid_entry_from_json(e));
                cfg.param_grid[family_tag(*f)] = std::move(grid);
            }
        }
        cfg.condition_cap = doc.value("condition_cap", cfg.condition_cap);
        if (doc.contains("gap") && !doc.at("gap").is_null()) cfg.gap = doc.at("gap").get<double>();
        cfg.perturbation = doc.value("perturbation", cfg.perturbation);
        cfg.chaotic_only = doc.value("chaotic_only", cfg.chaotic_only);
        cfg.chaotic_budget = doc.value("chaotic_budget", cfg.chaotic_budget);
    } catch (const json::exception& ex) {
        throw ConfigError(std::string("campaign config: ") + ex.what());
    } catch (const std::invalid_argument& ex) {  // ParamError, PreconditionError
        throw ConfigError(std::string("campaign config: ") + ex.what());
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(std::string("campaign config: ") + ex.what());
    }
    return cfg;
}

CampaignConfig read_campaign_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& ex) {
        throw ConfigError(path + ": " + ex.what());
    }
    return campaign_config_from_json(doc);
}

json to_json(const CampaignReport& report, bool include_wall_time) {
    json families = json::array();
    std::size_t checked = 0;
    for (const auto& f : report.families) {
        checked += f.checked;
        json row{{"family", f.family},        {"checked", f.checked}, {"held", f.held},
                 {"failed", f.failed},        {"violations", f.violations},
                 {"errors", f.errors},        {"worst_margin", opt_number(f.worst_margin)},
                 {"worst_instance", nullptr}, {"residual", nullptr}};
        if (f.worst_instance) row["worst_instance"] = fingerprint_to_json(*f.worst_instance);
        if (f.residual) {
            row["residual"] = json{{"count", f.residual->count},
                                   {"max", number(f.residual->max)},
                                   {"mean", number(f.residual->mean())},
                                   {"sum", number(f.residual->sum)}};
        }
        families.push_back(std::move(row));
    }
    json doc{{"schema", kReportSchema},
             {"seed", report.seed},
             {"dims", report.dims},
             {"trials", report.trials},
             {"families", std::move(families)},
             {"totals",
              {{"checked", checked},
               {"violations", report.total_violations()},
               {"errors", report.total_errors()}}},
             {"first_violation", report.first_violation ? json(*report.first_violation) : json(nullptr)},
             {"error_messages", report.error_messages}};
    if (include_wall_time) doc["wall_time_seconds"] = report.wall_time_seconds;
    return doc;
}

CampaignReport campaign_report_from_json(const json& doc) {
    try {
        if (doc.value("schema", std::string{}) != kReportSchema) {
            throw ConfigError("report: missing or unsupported schema tag");
        }
        CampaignReport r;
        r.seed = doc.at("seed").get<std::uint64_t>();
        r.dims = doc.at("dims").get<std::vector<std::size_t>>();
        r.trials = doc.at("trials").get<std::size_t>();
        for (const auto& row : doc.at("families")) {
            FamilyStats f;
            f.family = row.at("family").get<std::string>();
            f.checked = row.at("checked").get<std::size_t>();
            f.held = row.at("held").get<std::size_t>();
            f.failed = row.at("failed").get<std::size_t>();
            f.violations = row.at("violations").get<std::size_t>();
            f.errors = row.at("errors").get<std::size_t>();
            f.worst_margin = read_opt_number(row, "worst_margin");
            if (row.contains("worst_instance") && !row.at("worst_instance").is_null()) {
                f.worst_instance = fingerprint_from_json(row.at("worst_instance"));
            }
            if (row.contains("residual") && !row.at("residual").is_null()) {
                const auto& res = row.at("residual");
                f.residual = ResidualStats{res.at("count").get<std::size_t>(),
                                           res.at("max").get<double>(), res.at("sum").get<double>()};
            }
            r.families.push_back(std::move(f));
        }
        if (doc.contains("first_violation") && !doc.at("first_violation").is_null()) {
            r.first_violation = doc.at("first_violation").get<std::string>();
        }
        if (doc.contains("error_messages")) {
            r.error_messages = doc.at("error_messages").get<std::vector<std::string>>();
        }
        r.wall_time_seconds = doc.value("wall_time_seconds", 0.0);
        return r;
    } catch (const json::exception& ex) {
        throw ConfigError(std::string("report: ") + ex.what());
    }
}

std::string report_to_csv(const CampaignReport& report) {
    std::ostringstream os;
    os << "family,checked,held,failed,violations,errors,worst_margin,residual_max,residual_mean\n";
    for (const auto& f : report.families) {
        os << f.family << ',' << f.checked << ',' << f.held << ',' << f.failed << ','
           << f.violations << ',' << f.errors << ','
           << (f.worst_margin ? format_double(*f.worst_margin) : "") << ','
           << (f.residual ? format_double(f.residual->max) : "") << ','
           << (f.residual ? format_double(f.residual->mean()) : "") << '\n';
    }
    return os.str();
}

std::string render_report(const CampaignReport& report, ReportFormat format, bool include_wall_time) {
    if (format == ReportFormat::csv) return report_to_csv(report);
    return to_json(report, include_wall_time).dump(2) + "\n";
}

void emit_report(const CampaignReport& report, const std::string& path, ReportFormat format) {
    const std::string text = render_report(report, format);
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    out.close();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

json matrix_to_json(const HermitianMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(number(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const SolutionReport& report) {
    return json{{"family", to_string(report.family)},
                {"params", report.params.to_string()},
                {"norm_S", number(report.norm_S)},
                {"equation_residual", number(report.equation_residual)},
                {"sandwich_residual", number(report.sandwich_residual)},
                {"ordering_agreement", number(report.ordering_agreement)},
                {"contraction", report.contraction},
                {"order_kind", to_string(report.order_verdict.kind)},
                {"order_holds", report.order_verdict.holds},
                {"order_margin", number(report.order_verdict.margin)},
                {"inequality_margin", number(report.inequality_verdict.margin)},
                {"approximate", report.approximate},
                {"S", matrix_to_json(report.solution)}};
}

json to_json(const SearchResult& result, InequalityFamily family, const ParamSet& params) {
    json doc{{"family", to_string(family)},
             {"params", params.to_string()},
             {"vacuous", result.vacuous},
             {"draws", result.draws},
             {"advisory", result.advisory},
             {"witness", nullptr}};
    if (result.witness) {
        const Witness& w = *result.witness;
        doc["witness"] = json{{"fingerprint", fingerprint_to_json(w.fingerprint)},
                              {"margin", number(w.margin)},
                              {"tolerance", number(w.tolerance)},
                              {"A", matrix_to_json(w.pair.a)},
                              {"B", matrix_to_json(w.pair.b)}};
    }
    return doc;
}

}  // namespace loewner

#pragma once

// Verification campaigns and counterexample search.
//
// A campaign walks family x dim x trial. Each trial draws a pair in the
// relation the family's theorem presumes (ordered for Loewner families,
// chaotic for thm_1_10 / D4 / D5) from a stream seeded by
// derive_seed(seed, family, dim, trial), then evaluates every grid entry.
// Reports depend only on the config; wall time is the one exception.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "loewner/equations.hpp"
#include "loewner/furuta.hpp"
#include "loewner/genpairs.hpp"

namespace loewner {

using FamilyId = std::variant<InequalityFamily, EquationFamily>;

[[nodiscard]] std::string family_tag(const FamilyId& family);
[[nodiscard]] std::optional<FamilyId> parse_family(std::string_view tag);
[[nodiscard]] OrderKind hypothesis_order(const FamilyId& family);

struct GridEntry {
    ParamSet params;
    /// Entries failing validation are errors unless flagged.
    bool allow_invalid = false;
    /// Field ("s", "n" or "p") to fill from the family's exponent constraint.
    std::optional<std::string> solve_for;
};

struct CampaignConfig {
    std::vector<FamilyId> families;
    std::vector<std::size_t> dims{2, 3};
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    TolerancePolicy tolerance{};
    /// Per family tag; families without an entry use default_param_grid.
    std::map<std::string, std::vector<GridEntry>> param_grid;
    double condition_cap = 1e2;
    std::optional<double> gap;
    double perturbation = 1.0;
    /// Chaotic-hypothesis families draw pairs where Loewner order fails.
    bool chaotic_only = true;
    std::size_t chaotic_budget = 200;

    void validate() const;
};

/// The parameter sets a campaign uses when the config names none.
[[nodiscard]] std::vector<GridEntry> default_param_grid(const FamilyId& family);

/// Every family, dims {2, 3, 4}, 20 trials, seed 20240601.
[[nodiscard]] CampaignConfig default_campaign_config();

/// Resolves solve_for and checks validity; throws ParamError for an invalid
/// entry not flagged allow_invalid. Returns the concrete ParamSet.
[[nodiscard]] ParamSet resolve_entry(const FamilyId& family, const GridEntry& entry);
[[nodiscard]] bool entry_is_valid(const FamilyId& family, const ParamSet& params);

struct InstanceFingerprint {
    std::uint64_t stream_seed = 0;
    std::size_t dim = 0;
    std::size_t trial = 0;
    ParamSet params;
};

struct ResidualStats {
    std::size_t count = 0;
    double max = 0.0;
    double sum = 0.0;
    [[nodiscard]] double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
};

struct FamilyStats {
    std::string family;
    std::size_t checked = 0;
    std::size_t held = 0;
    std::size_t failed = 0;
    /// Failures at parameters that pass validation (subset of failed).
    std::size_t violations = 0;
    /// Instances that threw (subset of failed).
    std::size_t errors = 0;
    /// Minimum verdict margin for inequalities, min (1 - ||S||) for equations.
    std::optional<double> worst_margin;
    std::optional<InstanceFingerprint> worst_instance;
    std::optional<ResidualStats> residual;  // equation families only
};

struct CampaignReport {
    std::vector<FamilyStats> families;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims;
    std::size_t trials = 0;
    double wall_time_seconds = 0.0;
    /// Text dump of the first violation at valid parameters, if any.
    std::optional<std::string> first_violation;
    std::vector<std::string> error_messages;  // first few, for diagnosis

    [[nodiscard]] std::size_t total_violations() const;
    [[nodiscard]] std::size_t total_errors() const;
};

/// Pair for a campaign instance; also used to re-derive a fingerprint.
[[nodiscard]] MatrixPair draw_pair(OrderKind relation, std::size_t dim, std::uint64_t stream_seed,
                                   const CampaignConfig& cfg);

[[nodiscard]] CampaignReport run_campaign(const CampaignConfig& cfg);

struct Witness {
    InstanceFingerprint fingerprint;
    MatrixPair pair;
    double margin = 0.0;
    double tolerance = 0.0;
};

struct SearchResult {
    std::optional<Witness> witness;
    /// Parameters satisfy the theorem, so no witness can exist.
    bool vacuous = false;
    std::size_t draws = 0;
    std::string advisory;
};

struct SearchOptions {
    std::size_t budget = 10000;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims{2};
    double condition_cap = 1e2;
    TolerancePolicy tolerance{};
};

/// Rejection sampling over hypothesis-satisfying pairs; returns the first
/// instance whose margin is below -10x its tolerance.
[[nodiscard]] SearchResult search_counterexample(InequalityFamily family, const ParamSet& params,
                                                 const SearchOptions& options);

/// Re-draws the witness pair from its fingerprint and re-evaluates.
[[nodiscard]] InequalityEvaluation reevaluate(InequalityFamily family, const Witness& witness,
                                              const SearchOptions& options);

}  // namespace loewner

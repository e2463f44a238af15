#ifndef GGB_HARNESS_HPP
#define GGB_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ggb/closed_form.hpp"
#include "ggb/generic.hpp"
#include "ggb/monomial_ideal.hpp"

namespace ggb {

// One conjecture-verification campaign: `trials` randomized generic ideals
// with the given variable count and degrees, seeded from `base_seed`.
struct TrialConfig {
    int nvars = 2;
    std::vector<int> degrees;
    CoeffDomain domain = CoeffDomain::prime_field(kDefaultPrime);
    int trials = 1;
    std::uint64_t base_seed = 0;
    int max_resamples = 5;
    std::optional<int> rl_bound; // for ideals not decided exactly
};

// Fully re-runnable result of one trial: (seed, shape data) determine the
// record bit-exactly.
struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0; // derived seed, not the campaign base
    int nvars = 0;
    std::vector<int> degrees; // sorted ascending
    std::string field;
    std::vector<std::vector<int>> initial_generators; // descending grevlex
    bool wrl = false;
    std::optional<std::pair<std::string, std::string>> wrl_witness;
    bool rl = false;
    bool rl_exact = false;
    int rl_bound = 0;
    int resamples = 0;
    std::int64_t elapsed_ms = 0;

    MonomialIdeal initial_ideal() const;
};

nlohmann::json to_json(const TrialRecord& rec);
TrialRecord trial_record_from_json(const nlohmann::json& j);

nlohmann::json monomial_ideal_to_json(const MonomialIdeal& J);
MonomialIdeal monomial_ideal_from_json(const nlohmann::json& j);

// Runs one trial with an explicitly given derived seed (replay path).
// Degenerate once the resample budget is exhausted.
TrialRecord run_trial_seeded(const TrialConfig& config, int index,
                             std::uint64_t seed);

// Normal path: the per-trial seed is derive_seed(base_seed, index).
TrialRecord run_trial(const TrialConfig& config, int index);

// Re-runs a logged record from its own seed.
TrialRecord replay_trial(const TrialRecord& rec, int max_resamples = 5);

struct CampaignSummary {
    int requested = 0;
    int executed = 0;
    int skipped = 0; // indices already present in the log
    int wrl_pass = 0;
    int wrl_fail = 0;
    std::vector<TrialRecord> records;  // all, sorted by index
    std::vector<TrialRecord> failures; // wrl violations
};

// Runs trials 0..trials-1, appending one JSON line per record to
// `log_path` when given. Indices already present in an existing log are
// skipped, so an interrupted campaign resumes without duplicates.
CampaignSummary run_campaign(const TrialConfig& config,
                             const std::optional<std::string>& log_path);

// Sampled cross-validation of the explicit two-variable construction.
struct ClosedFormRunReport {
    int n = 0;
    int m = 0;
    bool agreement = false;
    std::string mismatch;
    std::vector<std::vector<int>> initial_generators;
    int resamples = 0;
    std::int64_t elapsed_ms = 0;
};

nlohmann::json to_json(const ClosedFormRunReport& rep);

// Samples a generic (n, m) pair from the seed and cross-validates both
// pipelines; resamples on degeneracy, Degenerate when the budget runs out.
ClosedFormRunReport run_closed_form(int n, int m, std::uint64_t seed,
                                    const CoeffDomain& domain,
                                    int max_resamples = 5);

} // namespace ggb

#endif

#include "ggb/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>

#include "ggb/groebner.hpp"

namespace ggb {

using nlohmann::json;

MonomialIdeal TrialRecord::initial_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(initial_generators.size());
    for (const auto& e : initial_generators) gens.emplace_back(e);
    return MonomialIdeal(nvars, std::move(gens));
}

json monomial_ideal_to_json(const MonomialIdeal& J) {
    json gens = json::array();
    for (const Monomial& g : J.generators()) gens.push_back(g.exponents());
    return json{{"nvars", J.nvars()}, {"generators", gens}};
}

MonomialIdeal monomial_ideal_from_json(const json& j) {
    const int nvars = j.at("nvars").get<int>();
    std::vector<Monomial> gens;
    for (const auto& e : j.at("generators"))
        gens.emplace_back(e.get<std::vector<int>>());
    return MonomialIdeal(nvars, std::move(gens));
}

json to_json(const TrialRecord& rec) {
    json j{{"trial", rec.index},
           {"seed", rec.seed},
           {"nvars", rec.nvars},
           {"degrees", rec.degrees},
           {"field", rec.field},
           {"initial_ideal",
            json{{"nvars", rec.nvars},
                 {"generators", rec.initial_generators}}},
           {"wrl", rec.wrl},
           {"rl", rec.rl},
           {"rl_exact", rec.rl_exact},
           {"rl_bound", rec.rl_bound},
           {"resamples", rec.resamples},
           {"elapsed_ms", rec.elapsed_ms}};
    if (rec.wrl_witness)
        j["wrl_witness"] = json{{"generator", rec.wrl_witness->first},
                                {"missing", rec.wrl_witness->second}};
    return j;
}

TrialRecord trial_record_from_json(const json& j) {
    TrialRecord rec;
    rec.index = j.at("trial").get<int>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.nvars = j.at("nvars").get<int>();
    rec.degrees = j.at("degrees").get<std::vector<int>>();
    rec.field = j.at("field").get<std::string>();
    rec.initial_generators =
        j.at("initial_ideal").at("generators").get<std::vector<std::vector<int>>>();
    rec.wrl = j.at("wrl").get<bool>();
    rec.rl = j.at("rl").get<bool>();
    rec.rl_exact = j.at("rl_exact").get<bool>();
    rec.rl_bound = j.at("rl_bound").get<int>();
    rec.resamples = j.at("resamples").get<int>();
    rec.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    if (j.contains("wrl_witness"))
        rec.wrl_witness = {j["wrl_witness"].at("generator").get<std::string>(),
                           j["wrl_witness"].at("missing").get<std::string>()};
    return rec;
}

namespace {

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

TrialRecord run_trial_seeded(const TrialConfig& config, int index,
                             std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const GenericSpec spec(config.nvars, config.degrees, config.domain, seed);

    for (int attempt = 0; attempt <= config.max_resamples; ++attempt) {
        GenericSpec attempt_spec(spec.nvars, spec.degrees, spec.domain,
                                 derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Polynomial> generators = sample_generic_ideal(attempt_spec);
        if (config.nvars == 2 && generators.size() == 2) {
            // Two-variable pairs go through the division preprocessing;
            // a degenerate remainder triggers a resample.
            try {
                generators[1] = reduce_second_generator(generators[0], generators[1]);
            } catch (const Degenerate&) {
                continue;
            }
        }

        const GroebnerBasis gb =
            buchberger(Ideal(config.domain, config.nvars, std::move(generators)));
        const MonomialIdeal J = initial_ideal(gb);

        const WeaklyRevlexReport wrl = is_weakly_revlex(J);
        std::optional<int> bound = config.rl_bound;
        if (!(J.nvars() == 2 && is_artinian(J)) && !bound) {
            int maxdeg = 0;
            for (const Monomial& g : J.generators())
                maxdeg = std::max(maxdeg, g.degree());
            bound = maxdeg + 2;
        }
        const RevlexReport rl = is_revlex(J, bound);
        if (rl.holds && !wrl.holds)
            throw Error("revlex ideal classified as not weakly revlex; "
                        "classification bug");

        TrialRecord rec;
        rec.index = index;
        rec.seed = seed;
        rec.nvars = config.nvars;
        rec.degrees = attempt_spec.degrees;
        rec.field = config.domain.to_string();
        for (const Monomial& g : J.generators())
            rec.initial_generators.push_back(g.exponents());
        rec.wrl = wrl.holds;
        if (wrl.witness)
            rec.wrl_witness = {wrl.witness->member.to_string(),
                               wrl.witness->missing.to_string()};
        rec.rl = rl.holds;
        rec.rl_exact = rl.exact;
        rec.rl_bound = rl.bound;
        rec.resamples = attempt;
        rec.elapsed_ms = ms_since(start);
        return rec;
    }
    throw Degenerate("trial " + std::to_string(index) + " stayed degenerate after " +
                     std::to_string(config.max_resamples) + " resamples");
}

TrialRecord run_trial(const TrialConfig& config, int index) {
    return run_trial_seeded(config, index,
                            derive_seed(config.base_seed,
                                        static_cast<std::uint64_t>(index)));
}

TrialRecord replay_trial(const TrialRecord& rec, int max_resamples) {
    TrialConfig config;
    config.nvars = rec.nvars;
    config.degrees = rec.degrees;
    config.domain = CoeffDomain::parse(rec.field);
    config.max_resamples = max_resamples;
    if (!rec.rl_exact) config.rl_bound = rec.rl_bound;
    return run_trial_seeded(config, rec.index, rec.seed);
}

CampaignSummary run_campaign(const TrialConfig& config,
                             const std::optional<std::string>& log_path) {
    CampaignSummary summary;
    summary.requested = config.trials;

    std::set<int> done;
    if (log_path) {
        std::ifstream in(*log_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            TrialRecord rec = trial_record_from_json(json::parse(line));
            if (rec.index >= 0 && rec.index < config.trials &&
                done.insert(rec.index).second)
                summary.records.push_back(std::move(rec));
        }
    }

    std::ofstream out;
    if (log_path) {
        out.open(*log_path, std::ios::app);
        if (!out) throw Error("cannot open trial log '" + *log_path + "'");
    }

    for (int idx = 0; idx < config.trials; ++idx) {
        if (done.count(idx)) {
            ++summary.skipped;
            continue;
        }
        TrialRecord rec = run_trial(config, idx);
        if (out.is_open()) {
            out << to_json(rec).dump() << "\n";
            out.flush();
        }
        summary.records.push_back(std::move(rec));
        ++summary.executed;
    }

    std::sort(summary.records.begin(), summary.records.end(),
              [](const TrialRecord& a, const TrialRecord& b) {
                  return a.index < b.index;
              });
    for (const TrialRecord& rec : summary.records) {
        if (rec.wrl)
            ++summary.wrl_pass;
        else {
            ++summary.wrl_fail;
            summary.failures.push_back(rec);
        }
    }
    return summary;
}

json to_json(const ClosedFormRunReport& rep) {
    return json{{"spec", json{{"n", rep.n}, {"m", rep.m}, {"mu", rep.m - rep.n}}},
                {"initial_ideal",
                 json{{"nvars", 2}, {"generators", rep.initial_generators}}},
                {"agreement", rep.agreement},
                {"resamples", rep.resamples},
                {"elapsed_ms", rep.elapsed_ms}};
}

ClosedFormRunReport run_closed_form(int n, int m, std::uint64_t seed,
                                    const CoeffDomain& domain, int max_resamples) {
    const auto start = std::chrono::steady_clock::now();
    const ClosedFormSpec spec(n, m);

    for (int attempt = 0; attempt <= max_resamples; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::set<Scalar> used;
        const Polynomial f1 = sample_generic_form(n, 2, domain, rng, used);
        const Polynomial f2 = sample_generic_form(m, 2, domain, rng, used);

        CrossValidateReport core;
        try {
            core = cross_validate(spec, f1, f2);
        } catch (const Degenerate&) {
            continue;
        }

        ClosedFormRunReport rep;
        rep.n = n;
        rep.m = m;
        rep.agreement = core.agreement;
        rep.mismatch = core.mismatch;
        for (const Monomial& g : core.buchberger_initial)
            rep.initial_generators.push_back(g.exponents());
        rep.resamples = attempt;
        rep.elapsed_ms = ms_since(start);
        return rep;
    }
    throw Degenerate("degenerate samples for (n, m) = (" + std::to_string(n) + ", " +
                     std::to_string(m) + ") after " + std::to_string(max_resamples) +
                     " resamples");
}

} // namespace ggb

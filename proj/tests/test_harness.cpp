#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ggb/harness.hpp"
#include "ggb/render.hpp"
#include "testutil.hpp"

using namespace ggb;
using testutil::fp;
using testutil::mono;

namespace {

TrialConfig small_config(int trials = 3) {
    TrialConfig config;
    config.nvars = 2;
    config.degrees = {2, 3};
    config.domain = fp();
    config.trials = trials;
    config.base_seed = 4242;
    return config;
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) { std::remove(path.c_str()); }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("seed mixing matches the reference splitmix64 stream") {
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(derive_seed(1, 2) == derive_seed(1, 2));
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
    CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("trials are deterministic and replayable") {
    const TrialConfig config = small_config();
    const TrialRecord a = run_trial(config, 1);
    const TrialRecord b = run_trial(config, 1);
    CHECK(a.seed == b.seed);
    CHECK(a.initial_generators == b.initial_generators);
    CHECK(a.wrl == b.wrl);
    CHECK(a.rl == b.rl);

    const TrialRecord replayed = replay_trial(a);
    CHECK(replayed.seed == a.seed);
    CHECK(replayed.initial_generators == a.initial_generators);
    CHECK(replayed.degrees == a.degrees);
    CHECK(replayed.resamples == a.resamples);

    // two variables, theorem territory: wrl must hold
    CHECK(a.wrl);
    CHECK(a.rl); // the explicit initial ideal is even fully reverse-lex
    CHECK(a.rl_exact);
}

TEST_CASE("trial records round trip through json") {
    const TrialRecord rec = run_trial(small_config(), 0);
    const nlohmann::json j = to_json(rec);
    const TrialRecord back = trial_record_from_json(j);
    CHECK(back.index == rec.index);
    CHECK(back.seed == rec.seed);
    CHECK(back.nvars == rec.nvars);
    CHECK(back.degrees == rec.degrees);
    CHECK(back.field == rec.field);
    CHECK(back.initial_generators == rec.initial_generators);
    CHECK(back.wrl == rec.wrl);
    CHECK(back.rl == rec.rl);
    CHECK(back.rl_exact == rec.rl_exact);
    CHECK(back.rl_bound == rec.rl_bound);
    CHECK(back.resamples == rec.resamples);
    CHECK(to_json(back) == j);
}

TEST_CASE("three-variable trials record bounded revlex checks") {
    TrialConfig config;
    config.nvars = 3;
    config.degrees = {2, 2, 2};
    config.domain = fp();
    config.trials = 1;
    config.base_seed = 7;
    const TrialRecord rec = run_trial(config, 0);
    CHECK(rec.wrl);
    CHECK(rec.nvars == 3);
    CHECK(rec.rl_bound >= 2);
    // records replay bit-identically
    const TrialRecord again = replay_trial(rec);
    CHECK(again.initial_generators == rec.initial_generators);
}

TEST_CASE("campaigns log, resume, and never duplicate indices") {
    const TempFile log("harness_campaign_log.jsonl");
    const TrialConfig config = small_config(4);

    const CampaignSummary first = run_campaign(config, log.path);
    CHECK(first.requested == 4);
    CHECK(first.executed == 4);
    CHECK(first.skipped == 0);
    CHECK(first.wrl_pass == 4);

    // truncate to two records, as if interrupted
    {
        std::ifstream in(log.path);
        std::string line0, line1;
        std::getline(in, line0);
        std::getline(in, line1);
        in.close();
        std::ofstream out(log.path, std::ios::trunc);
        out << line0 << "\n" << line1 << "\n";
    }

    const CampaignSummary resumed = run_campaign(config, log.path);
    CHECK(resumed.executed == 2);
    CHECK(resumed.skipped == 2);
    CHECK(resumed.wrl_pass == 4);
    REQUIRE(resumed.records.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(resumed.records[static_cast<std::size_t>(i)].index == i);

    // resumed trials are identical to a fresh run
    const CampaignSummary fresh = run_campaign(config, std::nullopt);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(fresh.records[i].initial_generators ==
              resumed.records[i].initial_generators);

    // the log parses as json lines with unique indices
    std::ifstream in(log.path);
    std::string line;
    std::set<int> seen;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const TrialRecord rec = trial_record_from_json(nlohmann::json::parse(line));
        CHECK(seen.insert(rec.index).second);
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("closed-form runs emit the report schema") {
    const ClosedFormRunReport rep = run_closed_form(2, 3, 9, fp());
    CHECK(rep.agreement);
    CHECK(rep.resamples == 0);
    const nlohmann::json j = to_json(rep);
    CHECK(j.at("spec").at("n") == 2);
    CHECK(j.at("spec").at("m") == 3);
    CHECK(j.at("spec").at("mu") == 1);
    CHECK(j.at("agreement") == true);
    CHECK(j.at("initial_ideal").at("generators") ==
          nlohmann::json::parse("[[0,4],[1,2],[2,0]]"));
    CHECK(j.contains("resamples"));
    CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("two generic linear forms cut out the maximal ideal") {
    const ClosedFormRunReport rep = run_closed_form(1, 1, 31, fp());
    CHECK(rep.agreement);
    const MonomialIdeal J(2, {mono({1, 0}), mono({0, 1})});
    CHECK(rep.initial_generators ==
          std::vector<std::vector<int>>{{1, 0}, {0, 1}});
    CHECK(standard_monomial_count(J) == 1);
}

TEST_CASE("equal-degree campaigns pass for every d up to 8") {
    for (int d = 1; d <= 8; ++d) {
        TrialConfig config;
        config.nvars = 2;
        config.degrees = {d, d};
        config.domain = fp();
        config.trials = 2;
        config.base_seed = 5150 + static_cast<std::uint64_t>(d);
        const CampaignSummary summary = run_campaign(config, std::nullopt);
        CHECK(summary.wrl_pass == 2);
        // mu = 0: the initial ideal is the explicit one for (d, d)
        for (const TrialRecord& rec : summary.records)
            CHECK(rec.initial_ideal() ==
                  closed_form_initial_ideal(ClosedFormSpec(d, d)));
    }
}

TEST_CASE("ascii staircase is the documented golden grid") {
    const MonomialIdeal J(2, {mono({2, 0}), mono({1, 2}), mono({0, 4})});
    CHECK(render_staircase_ascii(J) ==
          "####\n"
          "####\n"
          ".###\n"
          ".###\n"
          "..##\n"
          "..##\n");
    const MonomialIdeal axis(2, {mono({1, 0})});
    CHECK(render_staircase_ascii(axis) == ".##\n.##\n");
}

TEST_CASE("svg staircase has one rect per cell and is deterministic") {
    const MonomialIdeal J(2, {mono({2, 0}), mono({1, 2}), mono({0, 4})});
    const std::string svg = render_staircase_svg(J);
    CHECK(svg == render_staircase_svg(J));
    CHECK(svg.rfind("<?xml version=\"1.0\"", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);

    std::size_t rects = 0, at = 0;
    while ((at = svg.find("<rect ", at)) != std::string::npos) {
        ++rects;
        ++at;
    }
    CHECK(rects == 24); // (2+2) x (4+2) bounding box

    // corner labels carry the generator monomials
    CHECK(svg.find(">x^2<") != std::string::npos);
    CHECK(svg.find(">x*y^2<") != std::string::npos);
    CHECK(svg.find(">y^4<") != std::string::npos);
}

// genericgb: Groebner bases of generic ideals under grevlex, the explicit
// two-variable construction, staircase rendering, and randomized
// weak-reverse-lex verification campaigns.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggb/groebner.hpp"
#include "ggb/harness.hpp"
#include "ggb/render.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct ParsedIdeal {
    ggb::CoeffDomain domain;
    int nvars;
    std::vector<ggb::Polynomial> generators;
};

// Ideal file: first line "ring <k> vars over <field>", then one
// polynomial per line; blank lines and '#' comments are skipped.
ParsedIdeal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ggb::Error("cannot open ideal file '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw ggb::ParseError("empty ideal file", 0);

    std::istringstream header(line);
    std::string ring_kw, vars_kw, over_kw, field_text;
    int nvars = 0;
    header >> ring_kw >> nvars >> vars_kw >> over_kw >> field_text;
    if (ring_kw != "ring" || vars_kw != "vars" || over_kw != "over" || nvars < 1)
        throw ggb::ParseError(
            "bad header '" + line + "' (expected: ring <k> vars over <field>)", 0);

    ParsedIdeal out{ggb::CoeffDomain::parse(field_text), nvars, {}};
    while (std::getline(in, line)) {
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        out.generators.push_back(ggb::parse_polynomial(line, out.domain, nvars));
    }
    if (out.generators.empty())
        throw ggb::ParseError("ideal file lists no generators", 0);
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ggb::Error("cannot open output file '" + out_path + "'");
    out << text;
}

std::string witness_text(const ggb::RevlexWitness& w) {
    return w.missing.to_string() + " precedes " + w.member.to_string() +
           " but is not in the ideal";
}

int cmd_gb(const std::string& input, const std::vector<std::string>& inline_gens,
           int inline_nvars, const std::string& field, const std::string& format,
           const std::string& out_path) {
    ParsedIdeal parsed{ggb::CoeffDomain::parse(field), 2, {}};
    if (!input.empty()) {
        parsed = read_ideal_file(input);
    } else {
        parsed.nvars = inline_nvars;
        for (const std::string& text : inline_gens)
            parsed.generators.push_back(
                ggb::parse_polynomial(text, parsed.domain, parsed.nvars));
    }

    const ggb::GroebnerBasis gb = ggb::buchberger(
        ggb::Ideal(parsed.domain, parsed.nvars, parsed.generators));
    const ggb::MonomialIdeal in_ideal = ggb::initial_ideal(gb);

    std::ostringstream os;
    if (format == "json") {
        json j{{"field", parsed.domain.to_string()},
               {"nvars", parsed.nvars},
               {"reduced", gb.reduced},
               {"basis", json::array()},
               {"initial_ideal", ggb::monomial_ideal_to_json(in_ideal)}};
        for (const ggb::Polynomial& g : gb.elements)
            j["basis"].push_back(g.to_string());
        os << j.dump() << "\n";
    } else {
        os << "reduced grevlex basis (" << gb.elements.size() << " elements):\n";
        for (const ggb::Polynomial& g : gb.elements)
            os << "  " << g.to_string() << "\n";
        os << "initial ideal: " << ggb::monomial_ideal_to_json(in_ideal).dump()
           << "\n";
    }
    write_output(os.str(), out_path);
    return kExitOk;
}

int cmd_closed_form(int n, int m, std::uint64_t seed, const std::string& field,
                    int max_resamples, const std::string& out_path) {
    const ggb::CoeffDomain domain = ggb::CoeffDomain::parse(field);
    const ggb::ClosedFormRunReport rep =
        ggb::run_closed_form(n, m, seed, domain, max_resamples);
    write_output(ggb::to_json(rep).dump() + "\n", out_path);
    if (!rep.agreement) {
        std::cerr << "mismatch: " << rep.mismatch << "\n";
        return kExitFinding;
    }
    return kExitOk;
}

int cmd_check_ideal(const std::string& path, std::optional<int> bound,
                    const std::string& format, const std::string& out_path) {
    std::ifstream in(path);
    if (!in) throw ggb::Error("cannot open ideal file '" + path + "'");
    json j = json::parse(in);
    const ggb::MonomialIdeal J = ggb::monomial_ideal_from_json(j);

    const ggb::WeaklyRevlexReport wrl = ggb::is_weakly_revlex(J);
    std::optional<int> effective = bound;
    if (!effective && !(J.nvars() == 2 && ggb::is_artinian(J))) {
        // not decidable exactly: default to a reported bound
        int maxdeg = 0;
        for (const ggb::Monomial& g : J.generators())
            maxdeg = std::max(maxdeg, g.degree());
        effective = maxdeg + 2;
    }
    const ggb::RevlexReport rl = ggb::is_revlex(J, effective);

    std::ostringstream os;
    if (format == "json") {
        json out{{"ideal", ggb::monomial_ideal_to_json(J)},
                 {"wrl", wrl.holds},
                 {"rl", rl.holds},
                 {"rl_exact", rl.exact},
                 {"rl_bound", rl.bound}};
        if (wrl.witness) out["wrl_witness"] = witness_text(*wrl.witness);
        if (rl.witness) out["rl_witness"] = witness_text(*rl.witness);
        os << out.dump() << "\n";
    } else {
        os << "ideal: " << J.to_string() << "\n";
        os << "weakly reverse lexicographic: " << (wrl.holds ? "yes" : "no");
        if (wrl.witness) os << "  (" << witness_text(*wrl.witness) << ")";
        os << "\n";
        os << "reverse lexicographic: " << (rl.holds ? "yes" : "no")
           << (rl.exact ? " (exact)" : " (checked to degree " +
                                           std::to_string(rl.bound) + ")");
        if (rl.witness) os << "  (" << witness_text(*rl.witness) << ")";
        os << "\n";
    }
    write_output(os.str(), out_path);
    return wrl.holds ? kExitOk : kExitFinding;
}

int cmd_staircase(const std::string& input, const std::vector<int>& closed_form,
                  const std::string& render, const std::string& out_path) {
    std::optional<ggb::MonomialIdeal> J;
    if (!closed_form.empty()) {
        J = ggb::closed_form_initial_ideal(
            ggb::ClosedFormSpec(closed_form[0], closed_form[1]));
    } else {
        std::ifstream in(input);
        if (!in) throw ggb::Error("cannot open ideal file '" + input + "'");
        J = ggb::monomial_ideal_from_json(json::parse(in));
    }
    const std::string text = render == "svg" ? ggb::render_staircase_svg(*J)
                                             : ggb::render_staircase_ascii(*J);
    write_output(text, out_path);
    return kExitOk;
}

int cmd_verify(int nvars, const std::vector<int>& degrees, int trials,
               std::uint64_t seed, const std::string& field, int max_resamples,
               std::optional<int> rl_bound, const std::string& log_path,
               const std::string& format) {
    ggb::TrialConfig config;
    config.nvars = nvars;
    config.degrees = degrees;
    config.domain = ggb::CoeffDomain::parse(field);
    config.trials = trials;
    config.base_seed = seed;
    config.max_resamples = max_resamples;
    config.rl_bound = rl_bound;

    std::optional<std::string> log =
        log_path.empty() ? std::nullopt : std::optional<std::string>(log_path);
    const ggb::CampaignSummary summary = ggb::run_campaign(config, log);

    if (!log)
        for (const ggb::TrialRecord& rec : summary.records)
            std::cout << ggb::to_json(rec).dump() << "\n";

    if (format == "json") {
        json j{{"trials", summary.requested}, {"executed", summary.executed},
               {"skipped", summary.skipped},  {"wrl_pass", summary.wrl_pass},
               {"wrl_fail", summary.wrl_fail}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "trials: " << summary.requested << " (" << summary.executed
                  << " run, " << summary.skipped << " resumed)\n"
                  << "weakly reverse lexicographic: " << summary.wrl_pass << "/"
                  << summary.requested << "\n";
    }

    if (summary.wrl_fail > 0) {
        for (const ggb::TrialRecord& rec : summary.failures)
            std::cerr << "finding: trial " << rec.index << " seed " << rec.seed
                      << " is not weakly reverse lexicographic\n";
        if (nvars == 2)
            std::cerr << "the two-variable case is a theorem; this is an "
                         "implementation bug\n";
        return kExitFinding;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases of generic ideals under grevlex"};
    app.require_subcommand(1);

    std::string field = "prime:" + std::to_string(ggb::kDefaultPrime);
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 0;
    app.add_option("--field", field, "coefficient field: rational | prime:<p>")
        ->capture_default_str();
    app.add_option("--format", format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to this file");
    app.add_option("--seed", seed, "base random seed")->capture_default_str();

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis + initial ideal");
    gb->fallthrough();
    std::string gb_input;
    std::vector<std::string> gb_gens;
    int gb_nvars = 2;
    gb->add_option("--input", gb_input, "ideal file (ring header + generators)");
    gb->add_option("--gen", gb_gens, "inline generator (repeatable)");
    gb->add_option("--nvars", gb_nvars, "variable count for inline generators")
        ->capture_default_str();

    auto* cf = app.add_subcommand(
        "closed-form", "cross-validate the explicit two-variable basis");
    cf->fallthrough();
    int cf_n = 0, cf_m = 0, cf_resamples = 5;
    cf->add_option("n", cf_n, "degree of f1")->required();
    cf->add_option("m", cf_m, "degree of f2 (n <= m)")->required();
    cf->add_option("--max-resamples", cf_resamples, "degeneracy budget")
        ->capture_default_str();

    auto* check = app.add_subcommand("check-ideal",
                                     "weak/full reverse-lex check of a JSON ideal");
    check->fallthrough();
    std::string check_input;
    int check_bound = -1;
    check->add_option("ideal", check_input, "monomial ideal JSON file")->required();
    check->add_option("--bound", check_bound,
                      "degree bound for ideals not decided exactly");

    auto* stair = app.add_subcommand("staircase", "render a two-variable staircase");
    stair->fallthrough();
    std::string stair_input, stair_render = "ascii";
    std::vector<int> stair_cf;
    stair->add_option("--input", stair_input, "monomial ideal JSON file");
    stair->add_option("--closed-form", stair_cf,
                      "render the explicit initial ideal for n m")
        ->expected(2);
    stair->add_option("--render", stair_render, "ascii | svg")
        ->check(CLI::IsMember({"ascii", "svg"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand(
        "verify", "randomized weak-reverse-lex campaign over generic ideals");
    verify->fallthrough();
    int v_nvars = 2, v_trials = 1, v_resamples = 5, v_rl_bound = -1;
    std::vector<int> v_degrees;
    std::string v_log;
    verify->add_option("--nvars", v_nvars, "number of variables")->required();
    verify->add_option("--degrees", v_degrees, "generator degrees (one per form)")
        ->required()
        ->delimiter(',');
    verify->add_option("--trials", v_trials, "number of trials")->required();
    verify->add_option("--log", v_log, "JSON-lines trial log (appended, resumable)");
    verify->add_option("--max-resamples", v_resamples, "degeneracy budget per trial")
        ->capture_default_str();
    verify->add_option("--rl-bound", v_rl_bound,
                       "degree bound for the reverse-lex check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gb->parsed()) {
            if (gb_input.empty() && gb_gens.empty())
                throw ggb::Error("gb needs --input or at least one --gen");
            return cmd_gb(gb_input, gb_gens, gb_nvars, field, format, out_path);
        }
        if (cf->parsed())
            return cmd_closed_form(cf_n, cf_m, seed, field, cf_resamples, out_path);
        if (check->parsed())
            return cmd_check_ideal(check_input,
                                   check_bound < 0 ? std::nullopt
                                                   : std::optional<int>(check_bound),
                                   format, out_path);
        if (stair->parsed()) {
            if (stair_input.empty() == stair_cf.empty())
                throw ggb::Error("staircase needs exactly one of --input, --closed-form");
            return cmd_staircase(stair_input, stair_cf, stair_render, out_path);
        }
        if (verify->parsed())
            return cmd_verify(v_nvars, v_degrees, v_trials, seed, field, v_resamples,
                              v_rl_bound < 0 ? std::nullopt
                                             : std::optional<int>(v_rl_bound),
                              v_log, format);
    } catch (const ggb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ggb::Degenerate& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const ggb::ArityMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ggb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

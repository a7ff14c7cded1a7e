// Copyright 2026 The bell_lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "bell_lab/bilocal.h"
#include "bell_lab/covariance.h"
#include "bell_lab/error.h"
#include "bell_lab/freewill.h"
#include "bell_lab/json_io.h"
#include "bell_lab/local_polytope.h"
#include "bell_lab/quantum.h"
#include "bell_lab/randomness.h"

namespace bell_lab::cli {

namespace {

using nlohmann::json;
// Output objects keep their keys in insertion order so headline values come first.
using Out = nlohmann::ordered_json;

struct Globals {
    std::uint64_t seed = 0;
    std::uint64_t samples = 1'000'000;
    std::string format = "json";
    double tolerance = kMembershipTolerance;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Doubles in CSV use the same shortest round-trip text as JSON output.
std::string num(double v) {
    return json(v).dump();
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::kInvalidArgument, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        fail(ErrorCode::kParse, path + ": " + e.what());
    }
}

void require_json(const Globals &g, const char *command) {
    if (g.format != "json") throw UsageError(std::string(command) + " only produces json output");
}

Out estimates(const std::vector<Estimate> &es) {
    Out a = Out::array();
    for (const auto &e : es) a.push_back(Out(to_json(e)));
    return a;
}

MeasurementSettings settings_or_default(const std::string &path) {
    return path.empty() ? chsh_optimal_settings() : settings_from_json(read_json_file(path));
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::kNumericalFailure:
            return kExitNumerical;
        case ErrorCode::kCapExceeded:
            return kExitCap;
        default:
            return kExitUsage;
    }
}

// ---- subcommand bodies ----

void cmd_chsh(const Globals &g, double visibility, std::ostream &out) {
    const Behavior b = quantum_behavior(werner_state(visibility), chsh_optimal_settings());
    const double value = evaluate(chsh_expression(), b);
    MembershipOptions opt;
    opt.tolerance = g.tolerance;
    const bool local = is_local(b, opt).isLocal;
    const char *verdict = local ? "local" : "nonlocal";
    if (g.format == "csv") {
        out << "visibility,chsh,localBound,isLocal,verdict\n"
            << num(visibility) << ',' << num(value) << ",2.0," << (local ? "true" : "false") << ',' << verdict << '\n';
        return;
    }
    Out j{{"visibility", visibility}, {"chsh", value},    {"localBound", 2.0},
           {"isLocal", local},         {"verdict", verdict}, {"behavior", to_json(b)}};
    out << j.dump(2) << '\n';
}

void cmd_membership(const Globals &g, const std::string &path, std::uint64_t cap, std::ostream &out) {
    require_json(g, "membership");
    const Behavior b = behavior_from_json(read_json_file(path));
    MembershipOptions opt;
    opt.tolerance = g.tolerance;
    opt.cap = cap;
    const auto r = is_local(b, opt);
    Out j = to_json(r);
    j["verdict"] = r.isLocal ? "local" : "nonlocal";
    out << j.dump(2) << '\n';
}

void cmd_local_bound(const Globals &g, const std::string &path, std::uint64_t cap, std::ostream &out) {
    const BellExpression e = expression_from_json(read_json_file(path));
    const double local = local_bound(e, cap);
    const double algebraic = algebraic_bound(e);
    if (g.format == "csv") {
        out << "localBound,algebraicBound\n" << num(local) << ',' << num(algebraic) << '\n';
        return;
    }
    out << Out{{"localBound", local}, {"algebraicBound", algebraic}, {"strategies", strategy_count(e.scenario(), cap)}}
               .dump(2)
        << '\n';
}

Out sweep_row_json(const SweepRow &r) {
    return {{"v1", r.v1},     {"v2", r.v2},     {"product", r.product}, {"S_biloc", r.sBiloc},
            {"chsh", r.chsh}, {"violatesBilocal", r.violatesBilocal}, {"violatesCHSH", r.violatesChsh}};
}

void cmd_bilocal(const Globals &g, double v1, double v2, int sweep, std::ostream &out) {
    const bool csv = g.format == "csv";
    if (csv) out << "v1,v2,product,S_biloc,chsh,violatesBilocal,violatesCHSH\n";
    const auto csv_row = [&](const SweepRow &r) {
        out << num(r.v1) << ',' << num(r.v2) << ',' << num(r.product) << ',' << num(r.sBiloc) << ',' << num(r.chsh)
            << ',' << (r.violatesBilocal ? "true" : "false") << ',' << (r.violatesChsh ? "true" : "false") << '\n';
    };
    if (sweep == 0) {
        const SweepRow r = bilocal_point(v1, v2);
        if (csv) {
            csv_row(r);
        } else {
            Out j = sweep_row_json(r);
            const BilocalValue b = bilocal_value(v1, v2);
            j["I"] = b.i;
            j["J"] = b.j;
            j["bound"] = b.bound;
            out << j.dump(2) << '\n';
        }
        return;
    }
    const auto grid = unit_grid(sweep);
    if (csv) {
        bilocal_threshold_sweep(grid, grid, csv_row);
        return;
    }
    // JSON sweeps stream one row object per line inside an array.
    bool first = true;
    out << "[\n";
    bilocal_threshold_sweep(grid, grid, [&](const SweepRow &r) {
        out << (first ? "" : ",\n") << sweep_row_json(r).dump();
        first = false;
    });
    out << "\n]\n";
}

void cmd_deficit(const Globals &g, std::uint64_t n, std::uint64_t m, std::ostream &out) {
    const FreeWillDeficit d = deficit(n, m);
    if (g.format == "csv") {
        out << "n,m,bits\n" << n << ',' << m << ',' << num(d.bits) << '\n';
        return;
    }
    out << num(d.bits) << '\n';
}

void cmd_detection(const Globals &g, const std::string &settings_path, std::ostream &out) {
    require_json(g, "freewill detection");
    const MeasurementSettings m = settings_or_default(settings_path);
    const DetectionRun run = simulate_detection_model(m, g.samples, g.seed);
    Out j{{"model", "detection"},
           {"seed", g.seed},
           {"samples", run.samples},
           {"settings", to_json(m)},
           {"behavior", to_json(run.conditional)},
           {"correlators", estimates(run.correlators)},
           {"detectionRatePerInput", estimates(run.detectionRatePerInput)},
           {"stats",
            {{"detectionRate", run.detectionRate.mean},
             {"stderr", run.detectionRate.standardError},
             {"deficitBits", run.deficitBits}}}};
    out << j.dump(2) << '\n';
}

void cmd_md(const Globals &g, const std::string &settings_path, std::size_t grid, std::ostream &out) {
    require_json(g, "freewill md");
    const MeasurementSettings m = settings_or_default(settings_path);
    const MeasurementDependentModel model{m.alice, std::nullopt};
    const auto run = simulate_measurement_dependent(model, m.bob, g.samples, g.seed);
    const EntropyDeficit ed = entropy_deficit(model, grid);
    Out j{{"model", "measurement-dependent"},
           {"seed", g.seed},
           {"samples", run.samples},
           {"settings", to_json(m)},
           {"behavior", to_json(run.behavior)},
           {"correlators", estimates(run.correlators)},
           {"stats",
            {{"detectionRate", run.acceptanceRate.mean},
             {"stderr", run.acceptanceRate.standardError},
             {"deficitBits", run.acceptanceDeficitBits}}},
           {"entropyDeficit", {{"bits", ed.bits}, {"gridPoints", ed.gridPoints}}}};
    if (m.alice.size() == 2 && m.bob.size() == 2) {
        const auto &e = run.correlators;
        double var = 0;
        for (const auto &c : e) var += c.standardError * c.standardError;
        j["chsh"] = {{"mean", e[0].mean + e[1].mean + e[2].mean - e[3].mean}, {"stderr", std::sqrt(var)}};
    }
    out << j.dump(2) << '\n';
}

void cmd_covariance_check(const Globals &g, const std::string &path, std::ostream &out) {
    require_json(g, "covariance check");
    const CovariantModel model = covariant_model_from_json(read_json_file(path));
    const auto check = check_covariance(model);
    Out violations = Out::array();
    for (const auto &v : check.violations) {
        violations.push_back({{"x", v.x},
                              {"y", v.y},
                              {"lambda", v.lambda},
                              {"party", v.party == Party::kAlice ? "alice" : "bob"},
                              {"first", v.firstValue},
                              {"second", v.secondValue}});
    }
    Out j{{"covariant", check.covariant}, {"violations", violations}};
    if (check.covariant) {
        const Behavior b = induced_behavior(model);
        MembershipOptions opt;
        opt.tolerance = g.tolerance;
        j["behavior"] = to_json(b);
        j["isLocal"] = is_local(b, opt).isLocal;
    }
    out << j.dump(2) << '\n';
}

void cmd_forces_locality(const Globals &g, const std::vector<int> &dims, int lambda_count, std::uint64_t trials,
                         const std::string &mode_name, std::uint64_t exhaustive_cap, std::ostream &out) {
    require_json(g, "covariance forces-locality");
    if (dims.size() != 4) throw UsageError("--scenario takes four integers nX nY nA nB");
    const Scenario s{dims[0], dims[1], dims[2], dims[3]};
    static const std::map<std::string, SearchMode> modes{
        {"auto", SearchMode::kAuto}, {"exhaustive", SearchMode::kExhaustive}, {"sampled", SearchMode::kSampled}};
    LocalityOptions opt;
    opt.mode = modes.at(mode_name);
    opt.exhaustiveCap = exhaustive_cap;
    const LocalityReport r = covariance_forces_locality(s, lambda_count, trials, g.seed, opt);
    Out j{{"scenario", to_json(s)},
           {"lambdaCount", lambda_count},
           {"mode", r.mode == SearchMode::kExhaustive ? "exhaustive" : "sampled"},
           {"seed", g.seed},
           {"modelsChecked", r.modelsChecked},
           {"localityFailures", r.localityFailures}};
    if (r.chshApplicable) {
        j["chshViolations"] = r.chshViolations;
        j["maxChsh"] = r.maxChsh;
        j["minChsh"] = r.minChsh;
        j["maxChshAnyLabeling"] = r.maxChshAnyLabeling;
    }
    out << j.dump(2) << '\n';
}

struct LedgerFlags {
    std::string config;
    std::uint64_t rounds = 1000;
    double chsh = 2.0 * std::sqrt(2.0);
    std::uint64_t inputAlphabet = 2;
    std::uint64_t outputAlphabet = 2;
    double testFraction = 1.0;
    int stages = 1;
    double seedBits = 0.0;
};

void cmd_ledger(const Globals &g, const LedgerFlags &f, std::ostream &out) {
    require_json(g, "expand ledger");
    std::vector<ExpansionStage> stages;
    double seed_bits = f.seedBits;
    if (!f.config.empty()) {
        const json cfg = read_json_file(f.config);
        try {
            for (const auto &s : cfg.at("stages")) stages.push_back(stage_from_json(s));
            if (seed_bits == 0.0) seed_bits = cfg.at("seedBits").get<double>();
        } catch (const json::exception &e) {
            fail(ErrorCode::kParse, f.config + ": " + e.what());
        }
    } else {
        for (int k = 0; k < f.stages; ++k) {
            stages.push_back(make_stage(f.inputAlphabet, f.outputAlphabet, f.rounds, f.chsh, f.testFraction));
        }
    }
    if (seed_bits == 0.0 && !stages.empty()) seed_bits = stages.front().inputBitsConsumed;
    Out per_stage = Out::array();
    for (const auto &s : stages) {
        const ExpansionReport r = expansion_accounting(s);
        Out sj = to_json(s);
        sj["net"] = r.net;
        sj["expanding"] = r.expanding;
        per_stage.push_back(sj);
    }
    const ChainReport chain = serial_composition(stages, seed_bits);
    Out j = to_json(chain);
    j["stageDefinitions"] = per_stage;
    j["bitsPerRound"] = minentropy_bound(stages.front().chshValue);
    out << j.dump(2) << '\n';
}

void cmd_simulate(const Globals &g, double visibility, const std::string &settings_path, const std::string &bits_path,
                  const std::string &bits_format, std::ostream &out) {
    require_json(g, "expand simulate");
    const MeasurementSettings m = settings_or_default(settings_path);
    const QrngRun run = simulate_qrng_rounds(m, werner_state(visibility), g.samples, g.seed);
    if (!bits_path.empty()) {
        std::ofstream f(bits_path, std::ios::binary);
        if (!f) fail(ErrorCode::kInvalidArgument, "cannot write " + bits_path);
        if (bits_format == "packed") {
            write_bits_packed(f, run.bits);
        } else {
            write_bits_text(f, run.bits);
        }
    }
    std::uint64_t ones = 0;
    for (auto b : run.bits) ones += b;
    Out j{{"seed", g.seed},
           {"rounds", g.samples},
           {"visibility", visibility},
           {"correlators", run.correlators},
           {"outputBits", run.bits.size()},
           {"ones", ones}};
    if (!std::isnan(run.chsh.mean)) {
        j["chsh"] = to_json(run.chsh);
        const double s = std::clamp(std::abs(run.chsh.mean), 0.0, 2.0 * std::sqrt(2.0));
        j["certifiedBitsPerRound"] = minentropy_bound(s);
    }
    if (!bits_path.empty()) j["bitsFile"] = {{"path", bits_path}, {"format", bits_format}};
    out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bell nonlocality toolkit: local polytopes, quantum behaviors, bilocality, "
                 "measurement dependence and randomness expansion."};
    app.name("bell_lab");
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Seed for every random draw")->capture_default_str();
    app.add_option("--samples", g.samples, "Monte Carlo samples or rounds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--tolerance", g.tolerance, "Locality decision tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    double visibility = 1.0;
    auto *chsh = app.add_subcommand("chsh", "CHSH value and locality verdict for a Werner state");
    chsh->add_option("--visibility", visibility, "Werner visibility in [0, 1]")->required();

    std::string behavior_path, expression_path;
    std::uint64_t cap = kDefaultStrategyCap;
    auto *membership = app.add_subcommand("membership", "Decide local-polytope membership of a behavior");
    membership->add_option("--behavior", behavior_path, "Behavior JSON file")->required()->check(CLI::ExistingFile);
    membership->add_option("--cap", cap, "Deterministic strategy cap")->capture_default_str();

    auto *bound = app.add_subcommand("local-bound", "Local and algebraic bounds of a Bell expression");
    bound->add_option("--expression", expression_path, "Expression JSON file")->required()->check(CLI::ExistingFile);
    bound->add_option("--cap", cap, "Deterministic strategy cap")->capture_default_str();

    double v1 = 1.0, v2 = 1.0;
    int sweep = 0;
    auto *bilocal = app.add_subcommand("bilocal", "Bilocal value for two sources, or a visibility sweep");
    auto *v1_opt = bilocal->add_option("--v1", v1, "First source visibility")->check(CLI::Range(0.0, 1.0));
    auto *v2_opt = bilocal->add_option("--v2", v2, "Second source visibility")->check(CLI::Range(0.0, 1.0));
    auto *sweep_opt = bilocal->add_option("--sweep", sweep, "Grid points per axis for a sweep over [0,1]^2")
                          ->check(CLI::Range(2, 100000));
    sweep_opt->excludes(v1_opt)->excludes(v2_opt);

    auto *freewill = app.add_subcommand("freewill", "Measurement-dependence tools");
    freewill->require_subcommand(1);
    std::uint64_t n_choices = 1, m_choices = 1;
    auto *fw_deficit = freewill->add_subcommand("deficit", "Free-will deficit log2(N/M) in bits");
    fw_deficit->add_option("--n", n_choices, "Nominal number of inputs")->required();
    fw_deficit->add_option("--m", m_choices, "Inputs actually available")->required();
    std::string settings_path;
    auto *fw_detection = freewill->add_subcommand("detection", "Detection-loophole local model simulation");
    fw_detection->add_option("--settings", settings_path, "Settings JSON (default: CHSH-optimal)")
        ->check(CLI::ExistingFile);
    std::size_t grid = 20'000;
    auto *fw_md = freewill->add_subcommand("md", "Measurement-dependent local model simulation");
    fw_md->add_option("--settings", settings_path, "Settings JSON (default: CHSH-optimal)")->check(CLI::ExistingFile);
    fw_md->add_option("--grid", grid, "Sphere grid points for the entropy deficit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto *covariance = app.add_subcommand("covariance", "Covariant deterministic models");
    covariance->require_subcommand(1);
    std::string model_path;
    auto *cov_check = covariance->add_subcommand("check", "Check frame covariance of a model file");
    cov_check->add_option("--model", model_path, "Model JSON file")->required()->check(CLI::ExistingFile);
    std::vector<int> dims{2, 2, 2, 2};
    int lambda_count = 1;
    std::uint64_t trials = 1000, exhaustive_cap = 1'000'000;
    std::string mode = "auto";
    auto *cov_forces = covariance->add_subcommand("forces-locality", "Search covariant models for nonlocality");
    cov_forces->add_option("--scenario", dims, "nX nY nA nB")->expected(4)->capture_default_str();
    cov_forces->add_option("--lambda-count", lambda_count, "Size of the hidden-variable alphabet")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cov_forces->add_option("--trials", trials, "Random models in sampled mode")->capture_default_str();
    cov_forces->add_option("--mode", mode, "Search mode")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}))
        ->capture_default_str();
    cov_forces->add_option("--exhaustive-cap", exhaustive_cap, "Largest exhaustive search")->capture_default_str();

    auto *expand = app.add_subcommand("expand", "Randomness expansion");
    expand->require_subcommand(1);
    LedgerFlags lf;
    auto *ledger = expand->add_subcommand("ledger", "Bit ledger for a chain of expansion stages");
    ledger->add_option("--config", lf.config, "Chain JSON {seedBits, stages:[...]}")->check(CLI::ExistingFile);
    ledger->add_option("--rounds", lf.rounds, "Rounds per stage")->capture_default_str();
    ledger->add_option("--chsh", lf.chsh, "CHSH value per stage")->capture_default_str();
    ledger->add_option("--input-alphabet", lf.inputAlphabet, "Inputs per party")->capture_default_str();
    ledger->add_option("--output-alphabet", lf.outputAlphabet, "Outcomes per party")->capture_default_str();
    ledger->add_option("--test-fraction", lf.testFraction, "Fraction of rounds with random inputs")
        ->capture_default_str();
    ledger->add_option("--stages", lf.stages, "Number of identical stages")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ledger->add_option("--seed-bits", lf.seedBits, "Initial seed bits (default: first stage's demand)");
    std::string bits_path, bits_format = "text";
    double sim_visibility = 1.0;
    auto *simulate = expand->add_subcommand("simulate", "Simulate Bell-test rounds and emit outcome bits");
    simulate->add_option("--visibility", sim_visibility, "Werner visibility")->capture_default_str();
    simulate->add_option("--settings", settings_path, "Settings JSON (default: CHSH-optimal)")
        ->check(CLI::ExistingFile);
    simulate->add_option("--bits-out", bits_path, "Write outcome bits to this file");
    simulate->add_option("--bits-format", bits_format, "Bit file format")
        ->check(CLI::IsMember({"text", "packed"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "ERR:" << kExitUsage << ":Usage: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*chsh) {
            cmd_chsh(g, visibility, out);
        } else if (*membership) {
            cmd_membership(g, behavior_path, cap, out);
        } else if (*bound) {
            cmd_local_bound(g, expression_path, cap, out);
        } else if (*bilocal) {
            if (!*sweep_opt && (!*v1_opt || !*v2_opt)) throw UsageError("bilocal needs --v1 and --v2, or --sweep");
            cmd_bilocal(g, v1, v2, *sweep_opt ? sweep : 0, out);
        } else if (*fw_deficit) {
            cmd_deficit(g, n_choices, m_choices, out);
        } else if (*fw_detection) {
            cmd_detection(g, settings_path, out);
        } else if (*fw_md) {
            cmd_md(g, settings_path, grid, out);
        } else if (*cov_check) {
            cmd_covariance_check(g, model_path, out);
        } else if (*cov_forces) {
            cmd_forces_locality(g, dims, lambda_count, trials, mode, exhaustive_cap, out);
        } else if (*ledger) {
            cmd_ledger(g, lf, out);
        } else if (*simulate) {
            cmd_simulate(g, sim_visibility, settings_path, bits_path, bits_format, out);
        }
    } catch (const UsageError &e) {
        err << "ERR:" << kExitUsage << ":Usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        const int code = exit_code_for(e.code());
        err << "ERR:" << code << ':' << error_code_name(e.code()) << ": " << e.what() << '\n';
        return code;
    }
    out.flush();
    return kExitOk;
}

}  // namespace bell_lab::cli

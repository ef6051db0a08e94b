// SPDX-License-Identifier: Apache-2.0
//
// csit-dof: link-level simulator and DoF outer-bound toolkit for MISO
// broadcast channels with intermittent perfect CSIT
// Copyright (C) 2026 the csit-dof authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <array>
#include <cerrno>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csitdof/bounds.hpp"
#include "csitdof/errors.hpp"
#include "csitdof/harness.hpp"
#include "csitdof/schedule.hpp"

namespace {

using namespace csitdof;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitAudit = 2;
constexpr int kExitInternal = 3;

// Shortest round-trip decimal, matching the report serializers.
std::string round_trip(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

// Flag holders shared by the run and sweep subcommands. CLI11 option
// pointers record whether each flag was actually given, so defaults and
// config-file values survive unless explicitly overridden.
struct ConfigFlags {
    std::string config_path;
    int M = 0;
    int K = 0;
    std::string schedule;
    double lambda_cap = 0.0;
    std::vector<double> snr_db;
    int slots = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    bool tightened = false;
    bool no_box = false;
    std::string out;

    CLI::Option *opt_config = nullptr;
    CLI::Option *opt_M = nullptr;
    CLI::Option *opt_K = nullptr;
    CLI::Option *opt_schedule = nullptr;
    CLI::Option *opt_lambda_cap = nullptr;
    CLI::Option *opt_snr = nullptr;
    CLI::Option *opt_slots = nullptr;
    CLI::Option *opt_trials = nullptr;
    CLI::Option *opt_seed = nullptr;
    CLI::Option *opt_threads = nullptr;
    CLI::Option *opt_tightened = nullptr;
    CLI::Option *opt_no_box = nullptr;
    CLI::Option *opt_out = nullptr;
};

void add_config_flags(CLI::App *cmd, ConfigFlags &f) {
    f.opt_config = cmd->add_option("--config", f.config_path, "JSON config file");
    f.opt_M = cmd->add_option("--M", f.M, "Transmit antennas");
    f.opt_K = cmd->add_option("--K", f.K, "Users");
    f.opt_schedule = cmd->add_option(
        "--schedule", f.schedule, "cyclic_window | lee_heath | all_p | all_n | file:<path>");
    f.opt_lambda_cap =
        cmd->add_option("--lambda-cap", f.lambda_cap, "Per-user perfect-CSIT fraction cap");
    f.opt_snr = cmd->add_option("--snr", f.snr_db, "SNR grid in dB (comma separated)")
                    ->delimiter(',');
    f.opt_slots = cmd->add_option("--slots", f.slots, "Slots per trial");
    f.opt_trials = cmd->add_option("--trials", f.trials, "Monte Carlo trials per grid point");
    f.opt_seed = cmd->add_option("--seed", f.seed, "Random seed");
    f.opt_threads = cmd->add_option("--threads", f.threads, "Worker threads");
    f.opt_tightened = cmd->add_flag("--tightened", f.tightened,
                                    "Tightened bound (leading coefficient min(M,K))");
    f.opt_no_box = cmd->add_flag("--no-box", f.no_box, "Drop the per-user unit box");
    f.opt_out = cmd->add_option("--out", f.out, "Output path prefix");
}

// Precedence for the seed: --seed flag, then CSIT_DOF_SEED, then the
// config file, then the built-in default. Everything else: flag over file.
ExperimentConfig build_config(const ConfigFlags &f) {
    ExperimentConfig config;
    if (f.opt_config->count() > 0)
        config = config_from_json_file(f.config_path);

    if (const char *env = std::getenv("CSIT_DOF_SEED")) {
        errno = 0;
        char *end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (errno != 0 || end == env || *end != '\0')
            throw ConfigError("CSIT_DOF_SEED must be an unsigned integer");
        config.seed = static_cast<std::uint64_t>(value);
    }

    if (f.opt_M->count() > 0)
        config.M = f.M;
    if (f.opt_K->count() > 0)
        config.K = f.K;
    if (f.opt_schedule->count() > 0)
        config.schedule = f.schedule;
    if (f.opt_lambda_cap->count() > 0)
        config.lambda_cap = f.lambda_cap;
    if (f.opt_snr->count() > 0)
        config.snr_db = f.snr_db;
    if (f.opt_slots->count() > 0)
        config.slots = f.slots;
    if (f.opt_trials->count() > 0)
        config.trials = f.trials;
    if (f.opt_seed->count() > 0)
        config.seed = f.seed;
    if (f.opt_threads->count() > 0)
        config.threads = f.threads;
    if (f.opt_tightened->count() > 0)
        config.bounds.tightened = f.tightened;
    if (f.opt_no_box->count() > 0)
        config.bounds.box = !f.no_box;
    if (f.opt_out->count() > 0)
        config.output = f.out;
    return config;
}

int cmd_run(const ConfigFlags &f) {
    const ExperimentConfig config = build_config(f);
    const RunResult result = run(config);
    std::cout << "wrote " << result.json_path << " and " << result.csv_path << "\n"
              << "dof_slope: " << round_trip(result.sim.dof_slope) << " +/- "
              << round_trip(result.sim.slope_stderr) << "\n"
              << "bound_raw: " << round_trip(result.bound.raw_max_sum) << "\n"
              << "bound_capped: " << round_trip(result.bound.capped_max_sum) << "\n"
              << "lambda_star: " << round_trip(result.lambda_star_value) << "\n";
    return kExitOk;
}

int cmd_sweep(const ConfigFlags &f, const std::vector<double> &lambdas, bool no_sim) {
    ExperimentConfig config = build_config(f);
    if (f.opt_M->count() > 0)
        config.M = f.M;
    if (f.opt_K->count() > 0)
        config.K = f.K;
    const SweepResult sweep = sweep_lambda(config.M, config.K, lambdas, !no_sim, config);
    const std::string path = config.output + "_sweep.csv";
    write_text_file(path, sweep.csv_text);
    std::cout << sweep.csv_text << "wrote " << path << "\n";
    return kExitOk;
}

int cmd_bound(int M, int K, double lambda, bool lambda_given, bool tightened, bool no_box,
              const std::string &export_path) {
    if (!lambda_given)
        lambda = lambda_star(M, K);
    const BoundReport report = max_weighted_sum(M, K, lambda, tightened, !no_box);
    std::cout << "lambda: " << round_trip(lambda) << "\n"
              << "raw: " << round_trip(report.raw_max_sum) << "\n"
              << "capped: " << round_trip(report.capped_max_sum) << "\n"
              << "summed: " << round_trip(summed_bound(M, K, lambda)) << "\n"
              << "lambda_star: " << round_trip(lambda_star(M, K)) << "\n";
    if (!export_path.empty()) {
        write_text_file(export_path, polytope_to_json(build_polytope(M, K, lambda, tightened,
                                                                     !no_box)));
        std::cout << "wrote " << export_path << "\n";
    }
    return kExitOk;
}

int cmd_schedule(const std::string &kind, int M, int K, int slots, const std::string &out) {
    ExperimentConfig config;
    config.M = M;
    config.K = K;
    config.slots = slots;
    config.schedule = kind;
    validate(config);
    const CsitSchedule s = make_schedule(config);
    schedule_to_file(s, out);
    std::cout << "wrote " << out << " (" << s.users() << " users x " << s.slots()
              << " slots)\n";
    return kExitOk;
}

int cmd_lambda_star(int M, int K) {
    std::cout << round_trip(lambda_star(M, K)) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"MISO broadcast DoF toolkit: link simulation and outer bounds "
                 "under intermittent perfect CSIT"};
    app.require_subcommand(1);

    ConfigFlags run_flags;
    CLI::App *run_cmd = app.add_subcommand("run", "Simulate one experiment and write reports");
    add_config_flags(run_cmd, run_flags);

    ConfigFlags sweep_flags;
    std::vector<double> lambdas;
    bool no_sim = false;
    CLI::App *sweep_cmd =
        app.add_subcommand("sweep", "Outer bound (and optional simulation) over a lambda list");
    add_config_flags(sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--lambdas", lambdas, "Lambda values in [0,1] (comma separated)")
        ->delimiter(',')
        ->required();
    sweep_cmd->add_flag("--no-sim", no_sim, "Bounds only, skip simulation");

    int bound_M = 2;
    int bound_K = 3;
    double bound_lambda = 0.0;
    bool bound_tightened = false;
    bool bound_no_box = false;
    std::string bound_export;
    CLI::App *bound_cmd = app.add_subcommand("bound", "Outer bound only, no simulation");
    bound_cmd->add_option("--M", bound_M, "Transmit antennas")->required();
    bound_cmd->add_option("--K", bound_K, "Users")->required();
    CLI::Option *bound_lambda_opt =
        bound_cmd->add_option("--lambda", bound_lambda, "CSIT fraction (default: lambda star)");
    bound_cmd->add_flag("--tightened", bound_tightened,
                        "Tightened bound (leading coefficient min(M,K))");
    bound_cmd->add_flag("--no-box", bound_no_box, "Drop the per-user unit box");
    bound_cmd->add_option("--export", bound_export, "Write the polytope as JSON to this path");

    std::string sched_kind = "cyclic_window";
    int sched_M = 2;
    int sched_K = 3;
    int sched_slots = 0;
    std::string sched_out = "schedule.txt";
    CLI::App *sched_cmd = app.add_subcommand("schedule", "Emit a schedule file");
    sched_cmd->add_option("--kind", sched_kind, "cyclic_window | lee_heath | all_p | all_n");
    sched_cmd->add_option("--M", sched_M, "Transmit antennas (cyclic_window width input)");
    sched_cmd->add_option("--K", sched_K, "Users")->required();
    sched_cmd->add_option("--slots", sched_slots, "Slots (multiple of K)")->required();
    sched_cmd->add_option("--out", sched_out, "Schedule file path");

    int star_M = 0;
    int star_K = 0;
    CLI::App *star_cmd =
        app.add_subcommand("lambda-star", "Print the critical CSIT fraction for M K");
    star_cmd->add_option("M", star_M, "Transmit antennas")->required();
    star_cmd->add_option("K", star_K, "Users")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(run_flags);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_flags, lambdas, no_sim);
        if (bound_cmd->parsed())
            return cmd_bound(bound_M, bound_K, bound_lambda, bound_lambda_opt->count() > 0,
                             bound_tightened, bound_no_box, bound_export);
        if (sched_cmd->parsed())
            return cmd_schedule(sched_kind, sched_M, sched_K, sched_slots, sched_out);
        if (star_cmd->parsed())
            return cmd_lambda_star(star_M, star_K);
    } catch (const AuditFailureError &e) {
        std::cerr << "audit failure: " << e.what() << "\n";
        return kExitAudit;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitConfig;
}

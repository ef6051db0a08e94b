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

#ifndef CSITDOF_HARNESS_HPP
#define CSITDOF_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csitdof/bounds.hpp"
#include "csitdof/schedule.hpp"
#include "csitdof/simulator.hpp"

namespace csitdof {

struct BoundsOptions {
    bool tightened = false;
    bool box = true;
};

/**
 * One experiment: a schedule for (M, K), a CSIT budget cap, an SNR grid,
 * and Monte Carlo sizes. `schedule` is one of cyclic_window, lee_heath,
 * all_p, all_n, or file:<path>. `lambda_cap` left unset defaults to the
 * generated schedule's own maximum per-user fraction, so default runs
 * always pass their own audit.
 *
 * `threads` and `output` steer execution and are excluded from the
 * serialized config echo: reports depend only on the semantic fields,
 * which is what makes serial and parallel runs byte-identical.
 */
struct ExperimentConfig {
    int M = 2;
    int K = 3;
    std::string schedule = "cyclic_window";
    std::optional<double> lambda_cap;
    std::vector<double> snr_db = {30.0, 40.0, 50.0, 60.0};
    int slots = 3000;
    int trials = 10;
    std::uint64_t seed = 12345;
    BoundsOptions bounds;
    std::string output = "report";
    unsigned threads = 1;
};

/// Parse a JSON config object. Unknown keys are ConfigError (typo guard);
/// missing keys keep their defaults. Malformed JSON is ParseError.
ExperimentConfig config_from_json_text(const std::string &text);
ExperimentConfig config_from_json_file(const std::string &path);

/// Throws ConfigError on any invariant violation: positive sizes, strictly
/// increasing snr_db with at least two points, lambda_cap in [0,1], known
/// schedule kind, slots a multiple of K for generated schedules.
void validate(const ExperimentConfig &config);

/// Build the schedule named by the config (generated kinds use config.K
/// and config.slots; file:<path> loads and checks the user count).
CsitSchedule make_schedule(const ExperimentConfig &config);

struct RunResult {
    SimReport sim;
    BoundReport bound;
    double lambda_star_value = 0.0;
    double lambda_used = 0.0; // cap the bound was evaluated at
    FractionAudit audit_result;
    std::string json_path;
    std::string csv_path;
    std::string json_text; // exact bytes written to json_path
};

/**
 * Run one experiment end to end: audit the schedule against the cap
 * (AuditFailureError if it exceeds it), simulate, evaluate the outer
 * bound at the cap, and write <output>.json plus <output>.csv. The JSON
 * is canonical (sorted keys, no timestamps): identical config and seed
 * give byte-identical files.
 */
RunResult run(const ExperimentConfig &config);

struct SweepRow {
    double lambda = 0.0;
    bool simulated = false;
    double achieved_slope = 0.0; // meaningful only when simulated
    double bound_capped = 0.0;
    std::string schedule_name; // empty when not simulated
};

struct SweepResult {
    int M = 0;
    int K = 0;
    std::vector<SweepRow> rows; // input order
    std::string csv_text;
};

/**
 * Outer bound at every λ, plus an achievability point wherever sim_on and
 * λK is (within 1e-9) an integer w: width-min(w, min(M,K)) cyclic window,
 * or the no-CSIT fallback for w = 0. Windows narrower than min(M,K) are
 * labeled "heuristic" in schedule_name: they meet the budget but carry no
 * optimality claim below the critical fraction. Rows keep input order.
 * Throws ConfigError on an empty list or any λ outside [0,1].
 */
SweepResult sweep_lambda(int M, int K, const std::vector<double> &lambdas, bool sim_on,
                         const ExperimentConfig &config);

/// Canonical report JSON: top-level keys config, audit, per_snr,
/// dof_slope, slope_stderr, bound; two-space indent, sorted keys,
/// trailing newline.
std::string report_json(const ExperimentConfig &config, const FractionAudit &aud,
                        const SimReport &sim, const BoundReport &bound,
                        double lambda_star_value, double lambda_used);

/// Rate table CSV: header snr_db,rate_1..rate_K,sum_rate; LF endings,
/// '.' decimal separator, shortest round-trip number formatting.
std::string report_csv(const SimReport &sim);

std::string sweep_csv(const SweepResult &sweep);

void write_text_file(const std::string &path, const std::string &text);

} // namespace csitdof

#endif // CSITDOF_HARNESS_HPP

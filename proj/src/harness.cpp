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

#include "csitdof/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "csitdof/errors.hpp"

namespace csitdof {

namespace {

using nlohmann::json;

constexpr const char *kFilePrefix = "file:";

bool is_generated(const std::string &schedule) {
    return schedule.rfind(kFilePrefix, 0) != 0;
}

/// Shortest round-trip decimal form, locale independent.
std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), result.ptr);
}

json audit_to_json(const FractionAudit &aud) {
    json j;
    j["per_user"] = aud.per_user;
    j["max_fraction"] = aud.max_fraction;
    j["lambda_cap"] = aud.lambda_cap;
    j["pass"] = aud.pass;
    return j;
}

// Only the semantic fields: threads and output change where and how the
// work runs, never the numbers, and echoing them would break byte
// identity between serial and parallel runs of the same experiment.
json config_to_json(const ExperimentConfig &config, double lambda_used) {
    json j;
    j["M"] = config.M;
    j["K"] = config.K;
    j["schedule"] = config.schedule;
    j["lambda_cap"] = lambda_used;
    j["snr_db"] = config.snr_db;
    j["slots"] = config.slots;
    j["trials"] = config.trials;
    j["seed"] = config.seed;
    j["bounds"] = json{{"tightened", config.bounds.tightened}, {"box", config.bounds.box}};
    return j;
}

} // namespace

ExperimentConfig config_from_json_text(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config root must be a JSON object");

    ExperimentConfig config;
    try {
        for (const auto &[key, value] : j.items()) {
            if (key == "M") {
                config.M = value.get<int>();
            } else if (key == "K") {
                config.K = value.get<int>();
            } else if (key == "schedule") {
                config.schedule = value.get<std::string>();
            } else if (key == "lambda_cap") {
                config.lambda_cap = value.get<double>();
            } else if (key == "snr_db") {
                config.snr_db = value.get<std::vector<double>>();
            } else if (key == "slots") {
                config.slots = value.get<int>();
            } else if (key == "trials") {
                config.trials = value.get<int>();
            } else if (key == "seed") {
                config.seed = value.get<std::uint64_t>();
            } else if (key == "bounds") {
                if (!value.is_object())
                    throw ConfigError("bounds must be an object");
                for (const auto &[bkey, bvalue] : value.items()) {
                    if (bkey == "tightened")
                        config.bounds.tightened = bvalue.get<bool>();
                    else if (bkey == "box")
                        config.bounds.box = bvalue.get<bool>();
                    else
                        throw ConfigError("unknown bounds key: " + bkey);
                }
            } else if (key == "output") {
                config.output = value.get<std::string>();
            } else if (key == "threads") {
                config.threads = value.get<unsigned>();
            } else {
                throw ConfigError("unknown config key: " + key);
            }
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("config field has the wrong type: ") + e.what());
    }
    return config;
}

ExperimentConfig config_from_json_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return config_from_json_text(text.str());
}

void validate(const ExperimentConfig &config) {
    if (config.M < 1)
        throw ConfigError("M must be a positive integer");
    if (config.K < 1)
        throw ConfigError("K must be a positive integer");
    if (config.slots < 1)
        throw ConfigError("slots must be a positive integer");
    if (config.trials < 1)
        throw ConfigError("trials must be a positive integer");
    if (config.threads < 1)
        throw ConfigError("threads must be a positive integer");
    if (config.snr_db.size() < 2)
        throw ConfigError("snr_db needs at least two points to fit a slope");
    for (std::size_t i = 1; i < config.snr_db.size(); ++i)
        if (!(config.snr_db[i - 1] < config.snr_db[i]))
            throw ConfigError("snr_db must be strictly increasing");
    if (config.lambda_cap && (*config.lambda_cap < 0.0 || *config.lambda_cap > 1.0))
        throw ConfigError("lambda_cap must lie in [0, 1]");
    if (is_generated(config.schedule)) {
        if (config.schedule != "cyclic_window" && config.schedule != "lee_heath" &&
            config.schedule != "all_p" && config.schedule != "all_n")
            throw ConfigError("unknown schedule kind: " + config.schedule);
        if (config.slots % config.K != 0)
            throw ConfigError("slots must be a multiple of K for generated schedules");
    } else if (config.schedule.size() <= std::string(kFilePrefix).size()) {
        throw ConfigError("file: schedule needs a path");
    }
}

CsitSchedule make_schedule(const ExperimentConfig &config) {
    if (config.schedule == "cyclic_window")
        return cyclic_window(config.M, config.K, config.slots);
    if (config.schedule == "lee_heath")
        return lee_heath_block(config.K, config.slots);
    if (config.schedule == "all_p")
        return CsitSchedule::uniform(config.K, config.slots, CsitState::P);
    if (config.schedule == "all_n")
        return CsitSchedule::uniform(config.K, config.slots, CsitState::N);
    if (!is_generated(config.schedule)) {
        const std::string path = config.schedule.substr(std::string(kFilePrefix).size());
        CsitSchedule s = schedule_from_file(path);
        if (s.users() != config.K)
            throw ConfigError("schedule file has " + std::to_string(s.users()) +
                              " users but config.K is " + std::to_string(config.K));
        return s;
    }
    throw ConfigError("unknown schedule kind: " + config.schedule);
}

std::string report_json(const ExperimentConfig &config, const FractionAudit &aud,
                        const SimReport &sim, const BoundReport &bound,
                        double lambda_star_value, double lambda_used) {
    json j;
    j["config"] = config_to_json(config, lambda_used);
    j["audit"] = audit_to_json(aud);
    json per_snr = json::array();
    for (const PerSnrResult &res : sim.per_snr) {
        json row;
        row["snr_db"] = res.snr_db;
        row["rates"] = res.per_user_rate;
        row["sum"] = res.sum_rate;
        per_snr.push_back(std::move(row));
    }
    j["per_snr"] = std::move(per_snr);
    j["dof_slope"] = sim.dof_slope;
    j["slope_stderr"] = sim.slope_stderr;
    j["bound"] = json{{"raw", bound.raw_max_sum},
                      {"capped", bound.capped_max_sum},
                      {"lambda_star", lambda_star_value}};
    return j.dump(2) + "\n";
}

std::string report_csv(const SimReport &sim) {
    std::string csv = "snr_db";
    for (int k = 1; k <= sim.config_echo.K; ++k)
        csv += ",rate_" + std::to_string(k);
    csv += ",sum_rate\n";
    for (const PerSnrResult &res : sim.per_snr) {
        csv += format_double(res.snr_db);
        for (double r : res.per_user_rate)
            csv += "," + format_double(r);
        csv += "," + format_double(res.sum_rate) + "\n";
    }
    return csv;
}

std::string sweep_csv(const SweepResult &sweep) {
    std::string csv = "lambda,achieved_slope,outer_bound_capped,schedule_name\n";
    for (const SweepRow &row : sweep.rows) {
        csv += format_double(row.lambda) + ",";
        if (row.simulated)
            csv += format_double(row.achieved_slope);
        csv += "," + format_double(row.bound_capped) + "," + row.schedule_name + "\n";
    }
    return csv;
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open output file for writing: " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw ConfigError("failed writing output file: " + path);
}

RunResult run(const ExperimentConfig &config) {
    validate(config);
    const CsitSchedule schedule = make_schedule(config);

    double natural = 0.0;
    for (int k = 0; k < schedule.users(); ++k)
        natural = std::max(natural, schedule.per_user_fraction(k));
    const double cap = config.lambda_cap.value_or(natural);

    RunResult result;
    result.lambda_used = cap;
    result.audit_result = audit(schedule, cap);
    if (!result.audit_result.pass)
        throw AuditFailureError("schedule perfect-CSIT fraction " +
                                format_double(result.audit_result.max_fraction) +
                                " exceeds the per-user cap " + format_double(cap));

    const SnrGrid grid = SnrGrid::from_db(config.snr_db);
    result.sim = simulate(schedule, config.M, grid, config.trials, config.seed, config.threads);
    result.bound =
        max_weighted_sum(config.M, config.K, cap, config.bounds.tightened, config.bounds.box);
    result.lambda_star_value = lambda_star(config.M, config.K);

    result.json_text = report_json(config, result.audit_result, result.sim, result.bound,
                                   result.lambda_star_value, cap);
    result.json_path = config.output + ".json";
    result.csv_path = config.output + ".csv";
    write_text_file(result.json_path, result.json_text);
    write_text_file(result.csv_path, report_csv(result.sim));
    return result;
}

SweepResult sweep_lambda(int M, int K, const std::vector<double> &lambdas, bool sim_on,
                         const ExperimentConfig &config) {
    if (M < 1 || K < 1)
        throw ConfigError("M and K must be positive integers");
    if (lambdas.empty())
        throw ConfigError("sweep needs at least one lambda");
    for (double l : lambdas)
        if (!(l >= 0.0 && l <= 1.0))
            throw ConfigError("every sweep lambda must lie in [0, 1]");
    if (config.slots < 1 || config.slots % K != 0)
        throw ConfigError("slots must be a positive multiple of K");
    if (config.snr_db.size() < 2)
        throw ConfigError("snr_db needs at least two points to fit a slope");

    const int width_cap = std::min(M, K);
    SweepResult sweep;
    sweep.M = M;
    sweep.K = K;
    sweep.rows.reserve(lambdas.size());

    for (double l : lambdas) {
        SweepRow row;
        row.lambda = l;
        row.bound_capped =
            max_weighted_sum(M, K, l, config.bounds.tightened, config.bounds.box).capped_max_sum;

        const double scaled = l * static_cast<double>(K);
        const double rounded = std::round(scaled);
        if (sim_on && std::abs(scaled - rounded) <= 1e-9) {
            // Serving more than min(M,K) users per slot is never useful,
            // so wider budgets reuse the full window.
            const int w = std::min(static_cast<int>(rounded), width_cap);
            CsitSchedule schedule = (w == 0)
                                        ? CsitSchedule::uniform(K, config.slots, CsitState::N)
                                        : cyclic_window(w, K, config.slots);
            if (w == 0)
                row.schedule_name = "all_n";
            else if (w == width_cap)
                row.schedule_name = "cyclic_window";
            else
                row.schedule_name = "cyclic_window_w" + std::to_string(w) + "_heuristic";

            const SnrGrid grid = SnrGrid::from_db(config.snr_db);
            const SimReport sim =
                simulate(schedule, M, grid, config.trials, config.seed, config.threads);
            row.simulated = true;
            row.achieved_slope = sim.dof_slope;
        }
        sweep.rows.push_back(std::move(row));
    }
    sweep.csv_text = sweep_csv(sweep);
    return sweep;
}

} // namespace csitdof

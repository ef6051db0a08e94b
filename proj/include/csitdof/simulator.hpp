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

#ifndef CSITDOF_SIMULATOR_HPP
#define CSITDOF_SIMULATOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "csitdof/schedule.hpp"

namespace csitdof {

/// Transmit power grid (linear scale; noise power is 1, so these are SNRs).
struct SnrGrid {
    std::vector<double> points;

    static SnrGrid from_db(const std::vector<double> &db);
    std::vector<double> points_db() const;
};

/// Average rates at one grid point.
struct PerSnrResult {
    double snr_linear = 0.0;
    double snr_db = 0.0;
    std::vector<double> per_user_rate; // bits/slot
    double sum_rate = 0.0;
};

struct SlopeFit {
    double slope = 0.0;
    double std_error = 0.0;
};

/// Parameters echoed into every report so results are self-describing.
struct SimConfigEcho {
    int M = 0;
    int K = 0;
    int slots = 0;
    int trials = 0;
    std::uint64_t seed = 0;
};

struct SimReport {
    std::vector<PerSnrResult> per_snr;
    double dof_slope = 0.0;
    double slope_stderr = 0.0;
    std::vector<double> per_user_slopes;
    double avg_served_per_slot = 0.0;
    FractionAudit schedule_audit; // fractions of the schedule actually run
    SimConfigEcho config_echo;
};

/**
 * Run `schedule` for `trials` independent Monte Carlo trials at every grid
 * point. Each slot draws a fresh i.i.d. channel, picks served users from
 * the slot's CSIT column, zero-forces on perfect CSIT (or falls back to a
 * CSIT-free single stream), and scores served users log2(1 + sinr) bits,
 * unserved users 0. The sum-DoF slope is the least-squares slope of mean
 * sum rate against log2(P).
 *
 * Work units are (grid point, trial) pairs with their own random streams
 * and are reduced in fixed index order, so results are identical for any
 * `threads` value and across re-runs with the same seed.
 */
SimReport simulate(const CsitSchedule &schedule, int M, const SnrGrid &grid, int trials,
                   std::uint64_t seed, unsigned threads = 1);

/**
 * Ordinary least squares of rate against log2-power points. std_error is the
 * standard error of the slope (0 for a two-point fit). Throws
 * DegenerateGridError given fewer than two points or coincident abscissae.
 */
SlopeFit fit_slope(const std::vector<std::pair<double, double>> &points);

} // namespace csitdof

#endif // CSITDOF_SIMULATOR_HPP

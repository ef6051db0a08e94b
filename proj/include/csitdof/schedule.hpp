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

#ifndef CSITDOF_SCHEDULE_HPP
#define CSITDOF_SCHEDULE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace csitdof {

/// Per-user per-slot CSIT availability: perfect, delayed, or none.
enum class CsitState : unsigned char { P, D, N };

char to_char(CsitState s);
CsitState csit_state_from_char(char c);

/**
 * A K x n grid of CSIT availability states, one row per user, one column
 * per slot. Users are 1-based in files and reports, 0-based through this
 * API. Immutable after construction.
 */
class CsitSchedule {
  public:
    CsitSchedule(int users, int slots, std::vector<CsitState> grid);

    /// All-`fill` schedule (used for the all-P and all-N baselines).
    static CsitSchedule uniform(int users, int slots, CsitState fill);

    int users() const { return users_; }
    int slots() const { return slots_; }

    CsitState state(int user, int slot) const;
    std::vector<CsitState> slot_states(int slot) const;

    /// Number of P entries in user k's row.
    int perfect_count(int user) const;

    /// perfect_count(user) / slots, the per-user perfect-CSIT fraction.
    double per_user_fraction(int user) const;

    bool operator==(const CsitSchedule &other) const = default;

  private:
    int users_ = 0;
    int slots_ = 0;
    std::vector<CsitState> grid_; // row-major, user * slots + slot
};

/// Per-user fraction accounting against a cap on the perfect-CSIT share.
struct FractionAudit {
    std::vector<double> per_user;
    double max_fraction = 0.0;
    double lambda_cap = 0.0;
    bool pass = false;
};

/**
 * The cyclic-window schedule: a contiguous window of min(M,K) users gets
 * perfect CSIT each slot, and the window advances by one user per slot.
 * Every slot has exactly min(M,K) P states and every user's P fraction is
 * exactly min(M,K)/K. Requires n to be a positive multiple of K so the
 * fractions are exact.
 */
CsitSchedule cyclic_window(int M, int K, int n);

/**
 * Block pattern of one all-delayed slot followed by K-1 all-perfect slots
 * (the K=3 case is the alternating delayed/perfect pattern from the
 * literature; larger K extrapolates the same block rule). Per-user perfect
 * fraction (K-1)/K. Requires n to be a positive multiple of K.
 */
CsitSchedule lee_heath_block(int K, int n);

/// Parse a schedule file (see to_string for the format).
CsitSchedule schedule_from_file(const std::string &path);
CsitSchedule schedule_from_string(const std::string &text);

/// Canonical text form: one row per user, one char per slot from {P,D,N},
/// each row newline-terminated. Round-trips byte-identically.
std::string to_string(const CsitSchedule &s);
void schedule_to_file(const CsitSchedule &s, const std::string &path);

/**
 * Per-user fraction audit against lambda_cap. Fractions are exact slot
 * counts over n; the audit passes iff every fraction <= lambda_cap + 1e-12.
 */
FractionAudit audit(const CsitSchedule &s, double lambda_cap);

} // namespace csitdof

#endif // CSITDOF_SCHEDULE_HPP

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

#ifndef CSITDOF_PRECODING_HPP
#define CSITDOF_PRECODING_HPP

#include <cstdint>
#include <vector>

#include "csitdof/complex_matrix.hpp"
#include "csitdof/random.hpp"
#include "csitdof/schedule.hpp"

namespace csitdof {

/**
 * Transmit design for one slot: which users are served, the unit-norm
 * beamforming columns (M x s), and the per-stream power split. The power
 * entries always sum to at most the total budget.
 */
struct PrecodingPlan {
    std::size_t slot_index = 0;
    std::vector<int> served;   // 0-based user ids, in serving order
    ComplexMatrix beam_matrix; // M x s, unit-norm columns
    std::vector<double> powers;
};

/// Post-processing SINR per served user (linear scale, unit noise power),
/// aligned with PrecodingPlan::served.
struct SlotSinr {
    std::vector<double> sinr;
};

/**
 * Users to serve this slot. With perfect CSIT available from at least one
 * user, serve the first min(M, #P) P-state users in increasing id order.
 * With no perfect CSIT anywhere, fall back to the single user
 * rr_counter mod K (round-robin over no-CSIT slots). Delayed CSIT counts
 * as no CSIT here: the transmitter never precodes on outdated state.
 */
std::vector<int> select_served(const std::vector<CsitState> &states, int M,
                               std::uint64_t rr_counter);

/**
 * Zero-forcing beamformer for the served users: the right pseudo-inverse
 * of the s x M served channel submatrix (the exact channel inverse when
 * s = M), computed via a thin QR factorization and renormalized to
 * unit-norm columns, with the total power split equally across streams.
 * For distinct served users k != j the normalized cross-gain
 * |h_k . b_j| / ||h_k|| stays below 1e-9.
 *
 * Throws SingularMatrixError when the served submatrix's Gram condition
 * number exceeds 1e10 (a degenerate draw; callers resample the slot).
 */
PrecodingPlan zf_beamformer(const ChannelRealization &h, const std::vector<int> &served,
                            double total_power);

/**
 * CSIT-free single-user plan for slots where no perfect CSIT is available:
 * the full budget on antenna 1 for one user. Keeps the no-CSIT slots
 * honest (the transmitter uses nothing it does not have) while still
 * giving the served user a full-rate stream, since its first channel
 * entry is almost surely nonzero.
 */
PrecodingPlan fallback_plan(int M, int user, double total_power, std::size_t slot_index = 0);

/**
 * Per-served-user SINR under plan:
 *   sinr_k = p_k |h_k . b_k|^2 / (1 + sum_{j != k} p_j |h_k . b_j|^2).
 * With exact zero-forcing the interference sum is numerically negligible.
 */
SlotSinr slot_sinr(const ChannelRealization &h, const PrecodingPlan &plan);

} // namespace csitdof

#endif // CSITDOF_PRECODING_HPP

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

#include "csitdof/precoding.hpp"

#include <cmath>
#include <stdexcept>

#include "csitdof/errors.hpp"

namespace csitdof {

std::vector<int> select_served(const std::vector<CsitState> &states, int M,
                               std::uint64_t rr_counter) {
    if (states.empty())
        throw std::invalid_argument("select_served: empty state column");
    if (M < 1)
        throw std::invalid_argument("select_served: M must be positive");

    const int K = static_cast<int>(states.size());
    std::vector<int> served;
    for (int k = 0; k < K && static_cast<int>(served.size()) < M; ++k)
        if (states[static_cast<std::size_t>(k)] == CsitState::P)
            served.push_back(k);
    if (!served.empty())
        return served;

    // No perfect CSIT anywhere this slot: round-robin single user.
    return {static_cast<int>(rr_counter % static_cast<std::uint64_t>(K))};
}

namespace {

// Thin QR of an M x s matrix (s <= M) by modified Gram-Schmidt with one
// reorthogonalization pass. Returns false when a column is numerically
// dependent on its predecessors.
bool thin_qr(const ComplexMatrix &a, ComplexMatrix &q, ComplexMatrix &r) {
    const std::size_t m = a.rows();
    const std::size_t s = a.cols();
    q = ComplexMatrix(m, s);
    r = ComplexMatrix(s, s);

    for (std::size_t j = 0; j < s; ++j) {
        std::vector<cplx> v = a.column(j);
        const double initial_norm = vector_norm(v);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                const std::vector<cplx> qi = q.column(i);
                const cplx proj = dot_conjugated(qi, v);
                r.at(i, j) += proj;
                for (std::size_t k = 0; k < m; ++k)
                    v[k] -= proj * qi[k];
            }
        }
        const double nv = vector_norm(v);
        if (nv <= initial_norm * 1e-14 || nv == 0.0)
            return false;
        r.at(j, j) = cplx(nv, 0.0);
        for (std::size_t k = 0; k < m; ++k)
            q.at(k, j) = v[k] / nv;
    }
    return true;
}

// Columns of R^-H (R upper triangular s x s), by forward substitution on
// R^H y = e_j.
ComplexMatrix inverse_hermitian_of_upper(const ComplexMatrix &r) {
    const std::size_t s = r.rows();
    ComplexMatrix y(s, s);
    for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t i = 0; i < s; ++i) {
            cplx rhs = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            for (std::size_t k = 0; k < i; ++k)
                rhs -= std::conj(r.at(k, i)) * y.at(k, j);
            y.at(i, j) = rhs / std::conj(r.at(i, i));
        }
    }
    return y;
}

} // namespace

PrecodingPlan zf_beamformer(const ChannelRealization &h, const std::vector<int> &served,
                            double total_power) {
    const std::size_t M = h.matrix.cols();
    const std::size_t s = served.size();
    if (s == 0)
        throw std::invalid_argument("zf_beamformer: empty served set");
    if (s > M)
        throw std::invalid_argument("zf_beamformer: more streams than antennas");
    if (total_power < 0.0)
        throw std::invalid_argument("zf_beamformer: negative power budget");

    const ComplexMatrix hs = h.matrix.select_rows(served); // s x M
    const ComplexMatrix gram = hs * hs.hermitian();        // s x s
    const double gram_cond = condition_number(gram);
    if (!(gram_cond <= kSingularConditionThreshold))
        throw SingularMatrixError("zf_beamformer: served submatrix Gram condition number " +
                                  std::to_string(gram_cond) + " exceeds threshold");

    // Right pseudo-inverse of hs: with hs^H = Q R, pinv(hs) = Q R^-H.
    ComplexMatrix q, r;
    if (!thin_qr(hs.hermitian(), q, r))
        throw SingularMatrixError("zf_beamformer: served channel rows numerically dependent");
    ComplexMatrix beams = q * inverse_hermitian_of_upper(r); // M x s

    // Unit-norm columns, phase-aligned so each direct gain h_k . b_k is
    // real and positive.
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<cplx> col = beams.column(j);
        const double nc = vector_norm(col);
        if (nc == 0.0)
            throw SingularMatrixError("zf_beamformer: zero beam column");
        const cplx direct = dot_unconjugated(hs.row(j), col);
        const double dmag = std::abs(direct);
        const cplx phase = (dmag > 0.0) ? direct / dmag : cplx(1.0, 0.0);
        for (std::size_t k = 0; k < beams.rows(); ++k)
            beams.at(k, j) = beams.at(k, j) / (nc * phase);
    }

    PrecodingPlan plan;
    plan.slot_index = h.slot_index;
    plan.served = served;
    plan.beam_matrix = std::move(beams);
    plan.powers.assign(s, total_power / static_cast<double>(s));
    return plan;
}

PrecodingPlan fallback_plan(int M, int user, double total_power, std::size_t slot_index) {
    if (M < 1)
        throw std::invalid_argument("fallback_plan: M must be positive");
    if (user < 0)
        throw std::invalid_argument("fallback_plan: negative user id");
    PrecodingPlan plan;
    plan.slot_index = slot_index;
    plan.served = {user};
    plan.beam_matrix = ComplexMatrix(static_cast<std::size_t>(M), 1);
    plan.beam_matrix.at(0, 0) = cplx(1.0, 0.0); // antenna 1 only, no CSIT consumed
    plan.powers = {total_power};
    return plan;
}

SlotSinr slot_sinr(const ChannelRealization &h, const PrecodingPlan &plan) {
    const std::size_t s = plan.served.size();
    if (plan.powers.size() != s || plan.beam_matrix.cols() != s)
        throw std::invalid_argument("slot_sinr: inconsistent plan");

    SlotSinr out;
    out.sinr.resize(s);
    for (std::size_t i = 0; i < s; ++i) {
        const std::vector<cplx> hk = h.matrix.row(static_cast<std::size_t>(plan.served[i]));
        double signal = 0.0;
        double interference = 0.0;
        for (std::size_t j = 0; j < s; ++j) {
            const cplx gain = dot_unconjugated(hk, plan.beam_matrix.column(j));
            const double p = plan.powers[j] * std::norm(gain);
            if (j == i)
                signal = p;
            else
                interference += p;
        }
        out.sinr[i] = signal / (1.0 + interference);
    }
    return out;
}

} // namespace csitdof

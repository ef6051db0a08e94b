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

#ifndef CSITDOF_RANDOM_HPP
#define CSITDOF_RANDOM_HPP

#include <cstdint>
#include <vector>

#include "csitdof/complex_matrix.hpp"

namespace csitdof {

/**
 * Identifies one reproducible random stream. A stream is a value, not a
 * stateful generator: every draw below is a pure function of
 * (seed, stream_id, purpose, slot), so identical identifiers reproduce
 * identical values regardless of call order, thread, or host process.
 * Simulations allocate one stream per Monte Carlo work unit.
 */
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// Channel matrix for one slot: row k is the M-entry vector of user k.
struct ChannelRealization {
    std::size_t slot_index = 0;
    ComplexMatrix matrix; // K x M
};

/**
 * K x M matrix of i.i.d. CN(0,1) entries (real/imaginary parts independent
 * N(0, 1/2)) for the given slot. Entries are independent across slots and
 * across streams. `resample` selects an alternative draw for the same slot
 * and is used when a degenerate realization must be replaced.
 */
ChannelRealization sample_channel(const RngStream &rng, int K, int M, std::size_t slot,
                                  std::uint64_t resample = 0);

/// K i.i.d. CN(0,1) receiver noise draws.
std::vector<cplx> sample_noise(const RngStream &rng, int K);

} // namespace csitdof

#endif // CSITDOF_RANDOM_HPP

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

#include "csitdof/random.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace csitdof {

namespace {

enum class DrawPurpose : std::uint64_t { channel = 1, noise = 2 };

// SplitMix64 finalizer; used to fold the stream identifiers into one
// 64-bit engine seed.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::mt19937_64 make_engine(const RngStream &rng, DrawPurpose purpose, std::uint64_t slot,
                            std::uint64_t resample) {
    std::uint64_t s = 0x243F6A8885A308D3ull; // first 64 bits of pi, arbitrary domain tag
    s = mix64(s ^ rng.seed);
    s = mix64(s ^ rng.stream_id);
    s = mix64(s ^ static_cast<std::uint64_t>(purpose));
    s = mix64(s ^ slot);
    s = mix64(s ^ resample);
    return std::mt19937_64(s);
}

// CN(0,1) draw via the polar form of Box-Muller: |h|^2 ~ Exp(1), phase
// uniform. Uniforms are built from raw engine words, not from
// std::*_distribution, so the byte stream does not depend on the standard
// library implementation.
cplx draw_cn01(std::mt19937_64 &eng) {
    const double u1 = (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
    const double u2 = static_cast<double>(eng() >> 11) * 0x1.0p-53;         // [0, 1)
    const double r = std::sqrt(-std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

} // namespace

ChannelRealization sample_channel(const RngStream &rng, int K, int M, std::size_t slot,
                                  std::uint64_t resample) {
    if (K < 1 || M < 1)
        throw std::invalid_argument("sample_channel requires K >= 1 and M >= 1");
    std::mt19937_64 eng =
        make_engine(rng, DrawPurpose::channel, static_cast<std::uint64_t>(slot), resample);
    ComplexMatrix h(static_cast<std::size_t>(K), static_cast<std::size_t>(M));
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            h.at(i, j) = draw_cn01(eng);
    return {slot, std::move(h)};
}

std::vector<cplx> sample_noise(const RngStream &rng, int K) {
    if (K < 1)
        throw std::invalid_argument("sample_noise requires K >= 1");
    std::mt19937_64 eng = make_engine(rng, DrawPurpose::noise, 0, 0);
    std::vector<cplx> n(static_cast<std::size_t>(K));
    for (cplx &v : n)
        v = draw_cn01(eng);
    return n;
}

} // namespace csitdof

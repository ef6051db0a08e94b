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

#include "csitdof/schedule.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "csitdof/errors.hpp"

namespace csitdof {

char to_char(CsitState s) {
    switch (s) {
    case CsitState::P:
        return 'P';
    case CsitState::D:
        return 'D';
    case CsitState::N:
        return 'N';
    }
    throw std::logic_error("invalid CsitState");
}

CsitState csit_state_from_char(char c) {
    switch (c) {
    case 'P':
        return CsitState::P;
    case 'D':
        return CsitState::D;
    case 'N':
        return CsitState::N;
    default:
        throw ParseError(std::string("invalid CSIT state character '") + c + "'");
    }
}

CsitSchedule::CsitSchedule(int users, int slots, std::vector<CsitState> grid)
    : users_(users), slots_(slots), grid_(std::move(grid)) {
    if (users_ < 1 || slots_ < 1)
        throw ConfigError("schedule dimensions must be positive");
    if (grid_.size() != static_cast<std::size_t>(users_) * static_cast<std::size_t>(slots_))
        throw BadLengthError("schedule grid size does not match K x n");
}

CsitSchedule CsitSchedule::uniform(int users, int slots, CsitState fill) {
    return CsitSchedule(
        users, slots,
        std::vector<CsitState>(static_cast<std::size_t>(users) * static_cast<std::size_t>(slots),
                               fill));
}

CsitState CsitSchedule::state(int user, int slot) const {
    if (user < 0 || user >= users_ || slot < 0 || slot >= slots_)
        throw std::out_of_range("schedule index out of range");
    return grid_[static_cast<std::size_t>(user) * static_cast<std::size_t>(slots_) +
                 static_cast<std::size_t>(slot)];
}

std::vector<CsitState> CsitSchedule::slot_states(int slot) const {
    std::vector<CsitState> col(static_cast<std::size_t>(users_));
    for (int k = 0; k < users_; ++k)
        col[static_cast<std::size_t>(k)] = state(k, slot);
    return col;
}

int CsitSchedule::perfect_count(int user) const {
    int count = 0;
    for (int t = 0; t < slots_; ++t)
        if (state(user, t) == CsitState::P)
            ++count;
    return count;
}

double CsitSchedule::per_user_fraction(int user) const {
    return static_cast<double>(perfect_count(user)) / static_cast<double>(slots_);
}

CsitSchedule cyclic_window(int M, int K, int n) {
    if (M < 1 || K < 1 || n < 1)
        throw ConfigError("cyclic_window requires positive M, K, n");
    if (n % K != 0)
        throw BadLengthError("cyclic_window: n = " + std::to_string(n) +
                             " is not a multiple of K = " + std::to_string(K));
    const int width = std::min(M, K);
    std::vector<CsitState> grid(static_cast<std::size_t>(K) * static_cast<std::size_t>(n),
                                CsitState::N);
    for (int t = 0; t < n; ++t)
        for (int j = 0; j < width; ++j) {
            const int user = (t + j) % K;
            grid[static_cast<std::size_t>(user) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(t)] = CsitState::P;
        }
    return CsitSchedule(K, n, std::move(grid));
}

CsitSchedule lee_heath_block(int K, int n) {
    if (K < 1 || n < 1)
        throw ConfigError("lee_heath_block requires positive K, n");
    if (n % K != 0)
        throw BadLengthError("lee_heath_block: n = " + std::to_string(n) +
                             " is not a multiple of K = " + std::to_string(K));
    std::vector<CsitState> grid(static_cast<std::size_t>(K) * static_cast<std::size_t>(n));
    for (int k = 0; k < K; ++k)
        for (int t = 0; t < n; ++t)
            grid[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(t)] = (t % K == 0) ? CsitState::D : CsitState::P;
    return CsitSchedule(K, n, std::move(grid));
}

CsitSchedule schedule_from_string(const std::string &text) {
    std::vector<std::string> rows;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            rows.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty())
        rows.push_back(current); // tolerate a missing final newline
    if (rows.empty())
        throw EmptyScheduleError("schedule file has no rows");
    const std::size_t n = rows.front().size();
    if (n == 0)
        throw EmptyScheduleError("schedule file has an empty row");

    std::vector<CsitState> grid;
    grid.reserve(rows.size() * n);
    for (const std::string &row : rows) {
        if (row.size() != n)
            throw ParseError("ragged schedule rows: expected " + std::to_string(n) +
                             " slots, got " + std::to_string(row.size()));
        for (char c : row)
            grid.push_back(csit_state_from_char(c));
    }
    return CsitSchedule(static_cast<int>(rows.size()), static_cast<int>(n), std::move(grid));
}

CsitSchedule schedule_from_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open schedule file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return schedule_from_string(buf.str());
}

std::string to_string(const CsitSchedule &s) {
    std::string out;
    out.reserve(static_cast<std::size_t>(s.users()) *
                (static_cast<std::size_t>(s.slots()) + 1));
    for (int k = 0; k < s.users(); ++k) {
        for (int t = 0; t < s.slots(); ++t)
            out.push_back(to_char(s.state(k, t)));
        out.push_back('\n');
    }
    return out;
}

void schedule_to_file(const CsitSchedule &s, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write schedule file: " + path);
    out << to_string(s);
}

FractionAudit audit(const CsitSchedule &s, double lambda_cap) {
    FractionAudit fa;
    fa.lambda_cap = lambda_cap;
    fa.per_user.resize(static_cast<std::size_t>(s.users()));
    fa.max_fraction = 0.0;
    for (int k = 0; k < s.users(); ++k) {
        const double f = s.per_user_fraction(k);
        fa.per_user[static_cast<std::size_t>(k)] = f;
        fa.max_fraction = std::max(fa.max_fraction, f);
    }
    fa.pass = fa.max_fraction <= lambda_cap + 1e-12;
    return fa;
}

} // namespace csitdof

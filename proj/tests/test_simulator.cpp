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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "csitdof/errors.hpp"
#include "csitdof/schedule.hpp"
#include "csitdof/simulator.hpp"

using namespace csitdof;

namespace {

bool reports_identical(const SimReport &a, const SimReport &b) {
    if (a.per_snr.size() != b.per_snr.size())
        return false;
    for (std::size_t i = 0; i < a.per_snr.size(); ++i) {
        if (a.per_snr[i].snr_linear != b.per_snr[i].snr_linear)
            return false;
        if (a.per_snr[i].per_user_rate != b.per_snr[i].per_user_rate)
            return false;
        if (a.per_snr[i].sum_rate != b.per_snr[i].sum_rate)
            return false;
    }
    return a.dof_slope == b.dof_slope && a.slope_stderr == b.slope_stderr &&
           a.per_user_slopes == b.per_user_slopes &&
           a.avg_served_per_slot == b.avg_served_per_slot;
}

} // namespace

TEST_CASE("SnrGrid converts dB to linear and back") {
    SnrGrid g = SnrGrid::from_db({30.0, 40.0});
    CHECK(g.points[0] == doctest::Approx(1000.0).epsilon(1e-12));
    CHECK(g.points[1] == doctest::Approx(10000.0).epsilon(1e-12));
    const std::vector<double> db = g.points_db();
    CHECK(db[0] == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(db[1] == doctest::Approx(40.0).epsilon(1e-12));
}

TEST_CASE("fit_slope: exact line gives exact slope and zero stderr") {
    const std::vector<std::pair<double, double>> pts{{1.0, 5.0}, {2.0, 7.0}, {3.0, 9.0}};
    SlopeFit fit = fit_slope(pts);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(fit.std_error == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("fit_slope: two points have a slope but no error estimate") {
    SlopeFit fit = fit_slope({{0.0, 1.0}, {2.0, 2.0}});
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(fit.std_error == 0.0);
}

TEST_CASE("fit_slope: rounded synthetic rate points from the rate oracle") {
    // y-values are two-stream zero-forcing sum rates computed from the
    // closed form 2 E[log2(1 + (P/2) X)], X ~ Exp(1), rounded to 0.1.
    SlopeFit fit = fit_slope({{10.0, 20.3}, {13.3, 26.9}, {16.6, 33.6}});
    CHECK(fit.slope == doctest::Approx(2.0151515151515147).epsilon(1e-12));
    CHECK(fit.std_error == doctest::Approx(0.008747731351348898).epsilon(1e-9));
    CHECK(std::abs(fit.slope - 2.01) <= 0.01);
}

TEST_CASE("fit_slope: full-precision oracle points reproduce the frozen fit") {
    // (log2 P, 2 E[log2(1+(P/2)X)]) for P = 1e3, 1e4, 1e5 with
    // E[log2(1+aX)] = exp(1/a) E1(1/a) / ln 2, X ~ Exp(1); slope and
    // standard error frozen from an independent least-squares evaluation.
    const std::vector<std::pair<double, double>> pts{
        {9.965784284662087, 16.304420364442347},
        {13.287712379549449, 22.915092013840386},
        {16.609640474436812, 29.554437384669832}};
    SlopeFit fit = fit_slope(pts);
    CHECK(fit.slope == doctest::Approx(1.9943262830733783).epsilon(1e-12));
    CHECK(fit.std_error == doctest::Approx(0.0024917427942148453).epsilon(1e-9));
}

TEST_CASE("fit_slope rejects degenerate inputs") {
    CHECK_THROWS_AS((void)fit_slope({}), DegenerateGridError);
    CHECK_THROWS_AS((void)fit_slope({{1.0, 2.0}}), DegenerateGridError);
    CHECK_THROWS_AS((void)fit_slope({{1.0, 2.0}, {1.0, 3.0}, {1.0, 4.0}}),
                    DegenerateGridError);
}

TEST_CASE("simulate rejects grids that cannot support a slope") {
    CsitSchedule s = cyclic_window(2, 2, 4);
    CHECK_THROWS_AS((void)simulate(s, 2, SnrGrid{{1000.0}}, 1, 1), DegenerateGridError);
    CHECK_THROWS_AS((void)simulate(s, 2, SnrGrid{{}}, 1, 1), DegenerateGridError);
}

TEST_CASE("simulate rejects nonpositive sizes") {
    CsitSchedule s = cyclic_window(2, 2, 4);
    const SnrGrid grid = SnrGrid::from_db({30.0, 40.0});
    CHECK_THROWS_AS((void)simulate(s, 0, grid, 1, 1), ConfigError);
    CHECK_THROWS_AS((void)simulate(s, 2, grid, 0, 1), ConfigError);
}

TEST_CASE("simulate is deterministic for a fixed seed") {
    CsitSchedule s = cyclic_window(2, 3, 30);
    const SnrGrid grid = SnrGrid::from_db({30.0, 40.0});
    SimReport a = simulate(s, 2, grid, 3, 99);
    SimReport b = simulate(s, 2, grid, 3, 99);
    CHECK(reports_identical(a, b));
    SimReport c = simulate(s, 2, grid, 3, 100);
    CHECK_FALSE(reports_identical(a, c));
}

TEST_CASE("simulate: thread count never changes the numbers") {
    CsitSchedule s = cyclic_window(2, 3, 60);
    const SnrGrid grid = SnrGrid::from_db({30.0, 40.0, 50.0});
    SimReport serial = simulate(s, 2, grid, 4, 7, 1);
    SimReport parallel = simulate(s, 2, grid, 4, 7, 4);
    SimReport oversubscribed = simulate(s, 2, grid, 4, 7, 64);
    CHECK(reports_identical(serial, parallel));
    CHECK(reports_identical(serial, oversubscribed));
}

TEST_CASE("simulate: served stream count per slot is exact") {
    const SnrGrid grid = SnrGrid::from_db({30.0, 40.0});
    CHECK(simulate(cyclic_window(2, 3, 30), 2, grid, 2, 5).avg_served_per_slot == 2.0);
    CHECK(simulate(cyclic_window(3, 4, 40), 3, grid, 2, 5).avg_served_per_slot == 3.0);
    CHECK(simulate(CsitSchedule::uniform(3, 30, CsitState::N), 2, grid, 2, 5)
              .avg_served_per_slot == 1.0);
}

TEST_CASE("simulate: report bookkeeping is consistent") {
    CsitSchedule s = cyclic_window(2, 3, 60);
    const SnrGrid grid = SnrGrid::from_db({30.0, 40.0, 50.0});
    SimReport r = simulate(s, 2, grid, 3, 21);

    REQUIRE(r.per_snr.size() == 3);
    for (const PerSnrResult &res : r.per_snr) {
        double sum = 0.0;
        for (double rate : res.per_user_rate) {
            CHECK(rate >= 0.0);
            sum += rate;
        }
        CHECK(res.sum_rate == doctest::Approx(sum).epsilon(1e-12));
    }
    double slope_sum = 0.0;
    for (double sl : r.per_user_slopes)
        slope_sum += sl;
    CHECK(slope_sum == doctest::Approx(r.dof_slope).epsilon(1e-9));

    CHECK(r.config_echo.M == 2);
    CHECK(r.config_echo.K == 3);
    CHECK(r.config_echo.slots == 60);
    CHECK(r.config_echo.trials == 3);
    CHECK(r.config_echo.seed == 21);
    CHECK(r.schedule_audit.pass);
    CHECK(r.schedule_audit.max_fraction == 2.0 / 3.0);
}

TEST_CASE("simulate: sum rate is nondecreasing in power") {
    CsitSchedule s = cyclic_window(2, 3, 300);
    SimReport r = simulate(s, 2, SnrGrid::from_db({30.0, 40.0, 50.0, 60.0}), 5, 33);
    for (std::size_t i = 1; i < r.per_snr.size(); ++i)
        CHECK(r.per_snr[i].sum_rate >= r.per_snr[i - 1].sum_rate - 1e-6);
}

TEST_CASE("simulate: cyclic schedule is fair across users") {
    CsitSchedule s = cyclic_window(2, 3, 300);
    SimReport r = simulate(s, 2, SnrGrid::from_db({30.0, 60.0}), 10, 44);
    const std::vector<double> &rates = r.per_snr.back().per_user_rate;
    const double lo = *std::min_element(rates.begin(), rates.end());
    const double hi = *std::max_element(rates.begin(), rates.end());
    CHECK(hi / lo <= 1.05);
}

TEST_CASE("simulate: mean sum rate matches the ergodic ZF oracle") {
    // Two-stream ZF on a square served submatrix has per-stream gain
    // |h_k b_k|^2 ~ Exp(1), so the expected sum rate at power P is
    // 2 E[log2(1+(P/2)X)] = 2 exp(2/P) E1(2/P) / ln 2: 16.3044 at 30 dB,
    // 22.9151 at 40 dB (frozen from the closed form).
    CsitSchedule s = cyclic_window(2, 3, 3000);
    SimReport r = simulate(s, 2, SnrGrid::from_db({30.0, 40.0}), 10, 2718, 4);
    CHECK(r.per_snr[0].sum_rate == doctest::Approx(16.304420364442347).epsilon(0.01));
    CHECK(r.per_snr[1].sum_rate == doctest::Approx(22.915092013840386).epsilon(0.01));
}

TEST_CASE("simulate: no-CSIT fallback matches the single-stream oracle") {
    // Antenna-1 fallback rate law: log2(1+P|h|^2), |h|^2 ~ Exp(1); the
    // expected sum rate at 30 dB is exp(1e-3) E1(1e-3) / ln 2 = 9.1436.
    CsitSchedule s = CsitSchedule::uniform(3, 3000, CsitState::N);
    SimReport r = simulate(s, 2, SnrGrid::from_db({30.0, 40.0}), 10, 314, 4);
    CHECK(r.per_snr[0].sum_rate == doctest::Approx(9.143619491037331).epsilon(0.02));
}

TEST_CASE("simulate: desk-scale slopes land on the stream counts") {
    const SnrGrid grid = SnrGrid::from_db({30.0, 40.0, 50.0, 60.0});
    SimReport window = simulate(cyclic_window(2, 3, 600), 2, grid, 5, 11, 4);
    CHECK(std::abs(window.dof_slope - 2.0) <= 0.05);
    SimReport none = simulate(CsitSchedule::uniform(3, 600, CsitState::N), 2, grid, 5, 11, 4);
    CHECK(std::abs(none.dof_slope - 1.0) <= 0.05);
    SimReport full = simulate(CsitSchedule::uniform(2, 600, CsitState::P), 2, grid, 5, 11, 4);
    CHECK(std::abs(full.dof_slope - 2.0) <= 0.05);
}

TEST_CASE("simulate: delayed slots transmit without CSIT") {
    // The block pattern's all-D slots use the fallback, so the average
    // served count is 1 on those slots and min(M,K) elsewhere.
    CsitSchedule s = lee_heath_block(3, 300);
    SimReport r = simulate(s, 3, SnrGrid::from_db({30.0, 40.0}), 2, 8);
    CHECK(r.avg_served_per_slot == doctest::Approx((1.0 + 2 * 3.0) / 3.0).epsilon(1e-12));
}

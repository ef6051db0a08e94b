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
#include <string>
#include <vector>

#include "csitdof/bounds.hpp"
#include "csitdof/errors.hpp"

using namespace csitdof;

namespace {

bool feasible(const DofPolytope &poly, const std::vector<double> &x, double slack) {
    for (const LinearInequality &ineq : poly.inequalities) {
        double lhs = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            lhs += ineq.a[i] * x[i];
        if (lhs > ineq.b + slack)
            return false;
    }
    return true;
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace

TEST_CASE("build_polytope: cyclic rows carry the budget right-hand side") {
    DofPolytope poly = build_polytope(2, 3, 2.0 / 3.0);
    REQUIRE(poly.K == 3);
    // 3 cyclic + 3 nonnegativity + 3 box rows.
    REQUIRE(poly.inequalities.size() == 9);
    for (int k = 0; k < 3; ++k) {
        const LinearInequality &row = poly.inequalities[static_cast<std::size_t>(k)];
        CHECK(row.b == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
        for (int j = 0; j < 3; ++j)
            CHECK(row.a[static_cast<std::size_t>(j)] == (j == k ? 2.0 : 1.0));
    }
    for (int k = 0; k < 3; ++k) {
        const LinearInequality &row = poly.inequalities[static_cast<std::size_t>(3 + k)];
        CHECK(row.b == 0.0);
        for (int j = 0; j < 3; ++j)
            CHECK(row.a[static_cast<std::size_t>(j)] == (j == k ? -1.0 : 0.0));
    }
    for (int k = 0; k < 3; ++k) {
        const LinearInequality &row = poly.inequalities[static_cast<std::size_t>(6 + k)];
        CHECK(row.b == 1.0);
        for (int j = 0; j < 3; ++j)
            CHECK(row.a[static_cast<std::size_t>(j)] == (j == k ? 1.0 : 0.0));
    }
}

TEST_CASE("build_polytope: tightened mode is a no-op when M <= K") {
    DofPolytope plain = build_polytope(2, 3, 2.0 / 3.0, false);
    DofPolytope tight = build_polytope(2, 3, 2.0 / 3.0, true);
    REQUIRE(plain.inequalities.size() == tight.inequalities.size());
    for (std::size_t i = 0; i < plain.inequalities.size(); ++i) {
        CHECK(plain.inequalities[i].a == tight.inequalities[i].a);
        CHECK(plain.inequalities[i].b == tight.inequalities[i].b);
    }
}

TEST_CASE("build_polytope: tightened mode lowers the lead coefficient when M > K") {
    DofPolytope plain = build_polytope(4, 2, 1.0, false);
    DofPolytope tight = build_polytope(4, 2, 1.0, true);
    CHECK(plain.inequalities[0].a == std::vector<double>{4.0, 1.0});
    CHECK(plain.inequalities[0].b == 5.0);
    CHECK(tight.inequalities[0].a == std::vector<double>{2.0, 1.0});
    CHECK(tight.inequalities[0].b == 3.0);
}

TEST_CASE("build_polytope: box flag controls the unit-box rows") {
    CHECK(build_polytope(2, 3, 0.5, false, true).inequalities.size() == 9);
    CHECK(build_polytope(2, 3, 0.5, false, false).inequalities.size() == 6);
    CHECK(build_polytope(2, 3, 0.5, false, false).box == false);
}

TEST_CASE("origin is always feasible") {
    for (int M = 1; M <= 6; ++M)
        for (int K = 1; K <= 6; ++K)
            for (double lambda : {0.0, 0.5, 1.0})
                CHECK(feasible(build_polytope(M, K, lambda), std::vector<double>(K, 0.0), 0.0));
}

TEST_CASE("max_weighted_sum: critical fraction attains the cap exactly") {
    BoundReport r = max_weighted_sum(2, 3, 2.0 / 3.0);
    CHECK(r.raw_max_sum == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.capped_max_sum == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(r.argmax_point.size() == 3);
    for (double d : r.argmax_point)
        CHECK(d == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("max_weighted_sum: no CSIT collapses to the interference-limited value") {
    BoundReport r = max_weighted_sum(2, 3, 0.0);
    CHECK(r.raw_max_sum == doctest::Approx(1.5).epsilon(1e-12));
    for (double d : r.argmax_point)
        CHECK(d == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("max_weighted_sum: full CSIT is capped at min(M,K)") {
    BoundReport r = max_weighted_sum(2, 3, 1.0);
    CHECK(r.raw_max_sum == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(r.capped_max_sum == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("max_weighted: argmax is feasible and consistent with the value") {
    DofPolytope poly = build_polytope(3, 4, 0.4);
    const std::vector<double> weights{1.0, 1.0, 1.0, 1.0};
    BoundReport r = max_weighted(poly, weights, 3.0);
    CHECK(feasible(poly, r.argmax_point, 1e-9));
    CHECK(dot(weights, r.argmax_point) == doctest::Approx(r.raw_max_sum).epsilon(1e-12));
    for (int idx : r.tight_constraints) {
        const LinearInequality &row = poly.inequalities[static_cast<std::size_t>(idx)];
        CHECK(std::abs(dot(row.a, r.argmax_point) - row.b) <= 1e-9);
    }
}

TEST_CASE("max_weighted rejects bad weights") {
    DofPolytope poly = build_polytope(2, 2, 0.5);
    CHECK_THROWS_AS((void)max_weighted(poly, {1.0}, 2.0), BadLengthError);
    CHECK_THROWS_AS((void)max_weighted(poly, {0.0, 0.0}, 2.0), ConfigError);
    CHECK_THROWS_AS((void)max_weighted(poly, {1.0, -1.0}, 2.0), ConfigError);
}

TEST_CASE("summed_bound reproduces the closed form exactly") {
    CHECK(summed_bound(2, 3, 2.0 / 3.0) == 2.0);
    CHECK(summed_bound(2, 2, 1.0) == 2.0);
    CHECK(summed_bound(3, 3, 0.5) == doctest::Approx(2.4).epsilon(1e-15));
    CHECK(summed_bound(2, 3, 0.0) == 1.5);
    CHECK(summed_bound(2, 3, 1.0) == 2.25);
}

TEST_CASE("vertex enumeration agrees with the symmetric closed form") {
    for (int M = 1; M <= 6; ++M)
        for (int K = 1; K <= 6; ++K)
            for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const double sym = static_cast<double>(K) *
                                   (M + (std::min(M, K) - 1) * lambda) /
                                   static_cast<double>(M + K - 1);
                BoundReport r = max_weighted_sum(M, K, lambda);
                CHECK(std::abs(r.raw_max_sum - sym) <= 1e-9);
            }
}

TEST_CASE("raw bound is nondecreasing in lambda") {
    for (int M : {2, 3, 5})
        for (int K : {2, 4, 6}) {
            double prev = -1.0;
            for (double lambda : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
                const double value = max_weighted_sum(M, K, lambda).raw_max_sum;
                CHECK(value >= prev - 1e-12);
                prev = value;
            }
        }
}

TEST_CASE("tightened bound never exceeds the untightened bound") {
    for (int M = 1; M <= 6; ++M)
        for (int K = 1; K <= 6; ++K)
            for (double lambda : {0.0, 0.5, 1.0}) {
                const double plain = max_weighted_sum(M, K, lambda, false).raw_max_sum;
                const double tight = max_weighted_sum(M, K, lambda, true).raw_max_sum;
                CHECK(tight <= plain + 1e-12);
            }
}

TEST_CASE("permuting the weights permutes the optimum") {
    DofPolytope poly = build_polytope(3, 3, 0.3);
    const std::vector<double> weights{0.7, 1.1, 1.9};
    const std::vector<double> permuted{1.9, 0.7, 1.1};
    BoundReport r1 = max_weighted(poly, weights, 3.0);
    BoundReport r2 = max_weighted(poly, permuted, 3.0);
    CHECK(r1.raw_max_sum == doctest::Approx(r2.raw_max_sum).epsilon(1e-9));
    // The cyclically shifted argmax of the first problem solves the second.
    const std::vector<double> shifted{r1.argmax_point[2], r1.argmax_point[0],
                                      r1.argmax_point[1]};
    CHECK(feasible(poly, shifted, 1e-9));
    CHECK(dot(permuted, shifted) == doctest::Approx(r2.raw_max_sum).epsilon(1e-9));
}

TEST_CASE("lambda_star matches the closed form") {
    CHECK(lambda_star(2, 3) == 2.0 / 3.0);
    CHECK(lambda_star(1, 5) == 0.0);
    CHECK(lambda_star(5, 1) == 0.0);
    CHECK(lambda_star(3, 3) == 1.0);
    CHECK(lambda_star(4, 2) == 1.0);
    CHECK(lambda_star(3, 4) == 0.75);
}

TEST_CASE("lambda_star_via_lp agrees with the closed form") {
    CHECK(std::abs(lambda_star_via_lp(2, 3, 1e-9) - 2.0 / 3.0) <= 1e-9);
    CHECK(std::abs(lambda_star_via_lp(4, 2, 1e-9) - 1.0) <= 1e-9);
    CHECK(lambda_star_via_lp(1, 4, 1e-9) == 0.0);
    for (int M = 1; M <= 8; ++M)
        for (int K = 1; K <= 8; ++K)
            CHECK(std::abs(lambda_star_via_lp(M, K, 1e-9) - lambda_star(M, K)) <= 1e-9);
}

TEST_CASE("capped bound reaches min(M,K) exactly at and above the threshold") {
    for (int M = 2; M <= 5; ++M)
        for (int K = 2; K <= 5; ++K) {
            const double cap = std::min(M, K);
            const double star = lambda_star(M, K);
            CHECK(max_weighted_sum(M, K, star).capped_max_sum ==
                  doctest::Approx(cap).epsilon(1e-9));
            if (star > 0.011)
                CHECK(max_weighted_sum(M, K, star - 0.01).capped_max_sum < cap - 1e-6);
        }
}

TEST_CASE("unit box binds skewed objectives but never the symmetric one") {
    // Maximizing d_1 alone: the cyclic row allows 1.5, the box stops at 1.
    const std::vector<double> w{1.0, 0.0, 0.0};
    BoundReport boxed = max_weighted(build_polytope(2, 3, 1.0, false, true), w, 2.0);
    BoundReport open = max_weighted(build_polytope(2, 3, 1.0, false, false), w, 2.0);
    CHECK(boxed.raw_max_sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(open.raw_max_sum == doctest::Approx(1.5).epsilon(1e-9));
    // All-ones objectives land on the symmetric vertex, inside the box.
    for (int M = 1; M <= 6; ++M)
        for (int K = 1; K <= 6; ++K)
            CHECK(max_weighted_sum(M, K, 1.0, false, false).raw_max_sum ==
                  doctest::Approx(max_weighted_sum(M, K, 1.0, false, true).raw_max_sum)
                      .epsilon(1e-9));
}

TEST_CASE("polytope JSON export carries the full inequality list") {
    const std::string text = polytope_to_json(build_polytope(2, 2, 0.5, true, true));
    CHECK(text.find("\"K\": 2") != std::string::npos);
    CHECK(text.find("\"tightened\": true") != std::string::npos);
    CHECK(text.find("\"box\": true") != std::string::npos);
    CHECK(text.find("\"inequalities\"") != std::string::npos);
    CHECK(text.back() == '\n');
}

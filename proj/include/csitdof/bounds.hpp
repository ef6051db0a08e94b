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

#ifndef CSITDOF_BOUNDS_HPP
#define CSITDOF_BOUNDS_HPP

#include <string>
#include <vector>

namespace csitdof {

/// One halfspace a . d <= b over the DoF vector (d_1, ..., d_K).
struct LinearInequality {
    std::vector<double> a;
    double b = 0.0;
};

/**
 * Outer-bound polytope on achievable DoF vectors for an (M, K, lambda)
 * MISO broadcast configuration. The inequality list always starts with the
 * K cyclic bounds
 *
 *     c d_k + sum_{j != k} d_j <= c + (min(M,K) - 1) lambda
 *
 * with leading coefficient c = M (or c = min(M,K) in tightened mode, valid
 * when all users share one coherence pattern), followed by the K
 * nonnegativity constraints -d_k <= 0 and, when box is set, the K
 * single-antenna-receiver caps d_k <= 1.
 */
struct DofPolytope {
    int K = 0;
    std::vector<LinearInequality> inequalities;
    bool box = true;
    bool tightened = false;
};

/// Optimum of one weighted-sum LP over a DofPolytope.
struct BoundReport {
    double raw_max_sum = 0.0;
    double capped_max_sum = 0.0; // min(raw, min(M,K)) when a cap is known
    std::vector<double> argmax_point;
    std::vector<int> tight_constraints;
};

DofPolytope build_polytope(int M, int K, double lambda, bool tightened = false,
                           bool box = true);

/**
 * Exact LP maximum of weights . d over the polytope by exhaustive vertex
 * enumeration: every K-subset of constraints is intersected, feasible
 * intersection points are kept (1e-9 slack), and the best objective wins,
 * ties broken toward the lexicographically smallest point. Subsets whose
 * K x K system has condition number above 1e10 are skipped as degenerate.
 *
 * `cap` bounds capped_max_sum (pass min(M,K); defaults to no cap). The
 * polytope must be bounded, which every build_polytope output is. Throws
 * InfeasibleError when no vertex exists.
 */
BoundReport max_weighted(const DofPolytope &poly, const std::vector<double> &weights,
                         double cap);

/// max_weighted with cap = min(M,K) inferred impossible; explicit overload
/// for polytopes built by build_polytope.
BoundReport max_weighted_sum(int M, int K, double lambda, bool tightened = false,
                             bool box = true);

/**
 * The summed outer bound on total DoF,
 *     d_1 + ... + d_K <= K [M + (min(M,K) - 1) lambda] / (M + K - 1),
 * obtained by adding all K cyclic inequalities.
 */
double summed_bound(int M, int K, double lambda);

/// Minimum perfect-CSIT fraction per user that still allows sum DoF
/// min(M,K): zero when min(M,K) = 1, otherwise min(M,K)/K.
double lambda_star(int M, int K);

/**
 * Converse-side oracle for lambda_star: bisection over lambda in [0,1] for
 * the smallest value whose summed bound reaches min(M,K) (up to 1e-12).
 * Agrees with the closed form within tol.
 */
double lambda_star_via_lp(int M, int K, double tol);

/// JSON form {K, inequalities:[{a:[...], b}], box, tightened} for external
/// verification tools.
std::string polytope_to_json(const DofPolytope &poly);

} // namespace csitdof

#endif // CSITDOF_BOUNDS_HPP

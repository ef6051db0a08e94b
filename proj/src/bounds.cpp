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

#include "csitdof/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "csitdof/complex_matrix.hpp"
#include "csitdof/errors.hpp"

namespace csitdof {

namespace {

constexpr double kFeasibilitySlack = 1e-9;
constexpr double kObjectiveTie = 1e-12;

// Solve the K x K real system A x = b by elimination with partial
// pivoting. Near-zero pivots signal a degenerate (or parallel) constraint
// subset; those return nullopt and the subset is skipped.
std::optional<std::vector<double>> solve_real(std::vector<double> a, std::vector<double> b,
                                              int n) {
    const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
    double scale = 1.0;
    for (double v : a)
        scale = std::max(scale, std::abs(v));

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a[idx(col, col)]);
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(a[idx(r, col)]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best <= scale * 1e-13)
            return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a[idx(pivot, j)], a[idx(col, j)]);
            std::swap(b[static_cast<std::size_t>(pivot)], b[static_cast<std::size_t>(col)]);
        }
        const double p = a[idx(col, col)];
        for (int r = col + 1; r < n; ++r) {
            const double f = a[idx(r, col)] / p;
            if (f == 0.0)
                continue;
            for (int j = col; j < n; ++j)
                a[idx(r, j)] -= f * a[idx(col, j)];
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
        }
    }
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        double v = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            v -= a[idx(i, j)] * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = v / a[idx(i, i)];
    }
    return x;
}

double basis_condition_number(const std::vector<double> &a, int n) {
    ComplexMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                cplx(a[static_cast<std::size_t>(i * n + j)], 0.0);
    return condition_number(m);
}

bool feasible(const DofPolytope &poly, const std::vector<double> &x) {
    for (const LinearInequality &ineq : poly.inequalities) {
        double lhs = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            lhs += ineq.a[i] * x[i];
        if (lhs > ineq.b + kFeasibilitySlack)
            return false;
    }
    return true;
}

bool nearly_same_point(const std::vector<double> &x, const std::vector<double> &y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i] - y[i]) > 1e-12)
            return false;
    return true;
}

bool lex_less(const std::vector<double> &x, const std::vector<double> &y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < y[i])
            return true;
        if (x[i] > y[i])
            return false;
    }
    return false;
}

} // namespace

DofPolytope build_polytope(int M, int K, double lambda, bool tightened, bool box) {
    if (M < 1 || K < 1)
        throw ConfigError("build_polytope requires M >= 1 and K >= 1");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw ConfigError("build_polytope requires lambda in [0, 1]");

    const int w = std::min(M, K);
    const double lead = tightened ? static_cast<double>(w) : static_cast<double>(M);
    const double rhs = lead + static_cast<double>(w - 1) * lambda;

    DofPolytope poly;
    poly.K = K;
    poly.box = box;
    poly.tightened = tightened;
    poly.inequalities.reserve(static_cast<std::size_t>(box ? 3 * K : 2 * K));

    for (int k = 0; k < K; ++k) {
        LinearInequality ineq;
        ineq.a.assign(static_cast<std::size_t>(K), 1.0);
        ineq.a[static_cast<std::size_t>(k)] = lead;
        ineq.b = rhs;
        poly.inequalities.push_back(std::move(ineq));
    }
    for (int k = 0; k < K; ++k) {
        LinearInequality ineq;
        ineq.a.assign(static_cast<std::size_t>(K), 0.0);
        ineq.a[static_cast<std::size_t>(k)] = -1.0;
        ineq.b = 0.0;
        poly.inequalities.push_back(std::move(ineq));
    }
    if (box) {
        for (int k = 0; k < K; ++k) {
            LinearInequality ineq;
            ineq.a.assign(static_cast<std::size_t>(K), 0.0);
            ineq.a[static_cast<std::size_t>(k)] = 1.0;
            ineq.b = 1.0;
            poly.inequalities.push_back(std::move(ineq));
        }
    }
    return poly;
}

BoundReport max_weighted(const DofPolytope &poly, const std::vector<double> &weights,
                         double cap) {
    const int K = poly.K;
    if (K < 1)
        throw ConfigError("max_weighted: empty polytope");
    if (static_cast<int>(weights.size()) != K)
        throw BadLengthError("max_weighted: weight vector length must equal K");
    bool any_positive = false;
    for (double w : weights) {
        if (w < 0.0)
            throw ConfigError("max_weighted: weights must be nonnegative");
        if (w > 0.0)
            any_positive = true;
    }
    if (!any_positive)
        throw ConfigError("max_weighted: weights must not be all zero");
    for (const LinearInequality &ineq : poly.inequalities)
        if (static_cast<int>(ineq.a.size()) != K)
            throw BadLengthError("max_weighted: inequality arity mismatch");

    const int n_ineq = static_cast<int>(poly.inequalities.size());
    if (n_ineq < K)
        throw InfeasibleError("max_weighted: fewer constraints than dimensions, no vertex");

    bool found = false;
    double best_obj = -std::numeric_limits<double>::infinity();
    std::vector<double> best_x;

    // Walk every K-subset of constraint indices in lexicographic order.
    std::vector<int> pick(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i)
        pick[static_cast<std::size_t>(i)] = i;

    std::vector<double> basis(static_cast<std::size_t>(K * K));
    std::vector<double> rhs(static_cast<std::size_t>(K));

    while (true) {
        for (int i = 0; i < K; ++i) {
            const LinearInequality &ineq =
                poly.inequalities[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
            for (int j = 0; j < K; ++j)
                basis[static_cast<std::size_t>(i * K + j)] = ineq.a[static_cast<std::size_t>(j)];
            rhs[static_cast<std::size_t>(i)] = ineq.b;
        }

        if (auto x = solve_real(basis, rhs, K); x && feasible(poly, *x)) {
            double obj = 0.0;
            for (int j = 0; j < K; ++j)
                obj += weights[static_cast<std::size_t>(j)] * (*x)[static_cast<std::size_t>(j)];

            bool candidate = false;
            if (!found || obj > best_obj + kObjectiveTie) {
                candidate = true;
            } else if (obj >= best_obj - kObjectiveTie && !nearly_same_point(*x, best_x) &&
                       lex_less(*x, best_x)) {
                candidate = true;
            }
            // Exact conditioning gate, applied only to candidates so the
            // expensive check stays off the hot path.
            if (candidate && basis_condition_number(basis, K) <= 1e10) {
                found = true;
                best_obj = obj;
                best_x = *x;
            }
        }

        // next combination
        int i = K - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n_ineq - K + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < K; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }

    if (!found)
        throw InfeasibleError("max_weighted: no feasible vertex");

    BoundReport report;
    report.raw_max_sum = best_obj;
    report.capped_max_sum = std::min(best_obj, cap);
    report.argmax_point = best_x;
    for (int i = 0; i < n_ineq; ++i) {
        const LinearInequality &ineq = poly.inequalities[static_cast<std::size_t>(i)];
        double lhs = 0.0;
        for (int j = 0; j < K; ++j)
            lhs += ineq.a[static_cast<std::size_t>(j)] * best_x[static_cast<std::size_t>(j)];
        if (std::abs(lhs - ineq.b) <= kFeasibilitySlack)
            report.tight_constraints.push_back(i);
    }
    return report;
}

BoundReport max_weighted_sum(int M, int K, double lambda, bool tightened, bool box) {
    const DofPolytope poly = build_polytope(M, K, lambda, tightened, box);
    const std::vector<double> ones(static_cast<std::size_t>(K), 1.0);
    return max_weighted(poly, ones, static_cast<double>(std::min(M, K)));
}

double summed_bound(int M, int K, double lambda) {
    if (M < 1 || K < 1)
        throw ConfigError("summed_bound requires M >= 1 and K >= 1");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw ConfigError("summed_bound requires lambda in [0, 1]");
    const double w = static_cast<double>(std::min(M, K));
    return static_cast<double>(K) * (static_cast<double>(M) + (w - 1.0) * lambda) /
           static_cast<double>(M + K - 1);
}

double lambda_star(int M, int K) {
    if (M < 1 || K < 1)
        throw ConfigError("lambda_star requires M >= 1 and K >= 1");
    const int w = std::min(M, K);
    if (w == 1)
        return 0.0;
    return static_cast<double>(w) / static_cast<double>(K);
}

double lambda_star_via_lp(int M, int K, double tol) {
    if (tol <= 0.0)
        throw ConfigError("lambda_star_via_lp requires tol > 0");
    const double target = static_cast<double>(std::min(M, K)) - 1e-12;
    const auto reaches_max = [&](double lam) { return summed_bound(M, K, lam) >= target; };

    if (reaches_max(0.0))
        return 0.0;
    double lo = 0.0;
    double hi = 1.0;
    const double width = std::max(tol * 0.25, 1e-15);
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (reaches_max(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::string polytope_to_json(const DofPolytope &poly) {
    nlohmann::json j;
    j["K"] = poly.K;
    j["box"] = poly.box;
    j["tightened"] = poly.tightened;
    nlohmann::json rows = nlohmann::json::array();
    for (const LinearInequality &ineq : poly.inequalities) {
        nlohmann::json row;
        row["a"] = ineq.a;
        row["b"] = ineq.b;
        rows.push_back(std::move(row));
    }
    j["inequalities"] = std::move(rows);
    return j.dump(2) + "\n";
}

} // namespace csitdof

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

#include "csitdof/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "csitdof/errors.hpp"

namespace csitdof {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != rows * cols)
        throw std::invalid_argument("entry count does not match rows * cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = cplx(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx v = at(i, k);
            if (v == cplx(0.0, 0.0))
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += v * rhs.at(k, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::hermitian() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = std::conj(at(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::select_rows(const std::vector<int> &which) const {
    if (which.empty())
        throw std::invalid_argument("row selection must be nonempty");
    ComplexMatrix out(which.size(), cols_);
    for (std::size_t i = 0; i < which.size(); ++i) {
        const int r = which[i];
        if (r < 0 || static_cast<std::size_t>(r) >= rows_)
            throw std::out_of_range("row selection out of range");
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(i, j) = at(static_cast<std::size_t>(r), j);
    }
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx &v : entries_)
        m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx &v : entries_)
        s += std::norm(v);
    return std::sqrt(s);
}

std::vector<cplx> ComplexMatrix::column(std::size_t c) const {
    std::vector<cplx> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = at(i, c);
    return out;
}

std::vector<cplx> ComplexMatrix::row(std::size_t r) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

cplx dot_unconjugated(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    if (a.size() != b.size())
        throw BadLengthError("dot product length mismatch");
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

cplx dot_conjugated(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    if (a.size() != b.size())
        throw BadLengthError("dot product length mismatch");
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::conj(a[i]) * b[i];
    return s;
}

double vector_norm(const std::vector<cplx> &v) {
    double s = 0.0;
    for (const cplx &x : v)
        s += std::norm(x);
    return std::sqrt(s);
}

namespace {

// Gauss-Jordan with partial pivoting on [m | I]. Returns nullopt on an
// exactly zero pivot (rank deficiency visible at working precision).
std::optional<ComplexMatrix> raw_inverse(const ComplexMatrix &m) {
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix inv = ComplexMatrix::identity(n);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(a.at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(a.at(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0)
            return std::nullopt;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const cplx p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const cplx f = a.at(r, col);
            if (f == cplx(0.0, 0.0))
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    const int max_sweeps = 64;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off += a[idx(i, j)] * a[idx(i, j)];
        double diag = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            diag += a[idx(i, i)] * a[idx(i, i)];
        if (off <= (diag + 1.0) * 1e-30)
            break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[idx(p, q)];
                if (apq == 0.0)
                    continue;
                const double app = a[idx(p, p)];
                const double aqq = a[idx(q, q)];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[idx(k, p)];
                    const double akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[idx(p, k)];
                    const double aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i)
        eig[i] = a[idx(i, i)];
    return eig;
}

// Largest singular value via the eigenvalues of the Gram matrix m^H m,
// embedded as the real symmetric 2n x 2n matrix [[Re,-Im],[Im,Re]].
double sigma_max(const ComplexMatrix &m) {
    const std::size_t n = m.cols();
    const ComplexMatrix gram = m.hermitian() * m;
    const std::size_t d = 2 * n;
    std::vector<double> real_embed(d * d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx g = gram.at(i, j);
            real_embed[i * d + j] = g.real();
            real_embed[i * d + (n + j)] = -g.imag();
            real_embed[(n + i) * d + j] = g.imag();
            real_embed[(n + i) * d + (n + j)] = g.real();
        }
    }
    const std::vector<double> eig = jacobi_eigenvalues(std::move(real_embed), d);
    double lambda_max = 0.0;
    for (double e : eig)
        lambda_max = std::max(lambda_max, e);
    return std::sqrt(std::max(lambda_max, 0.0));
}

} // namespace

double condition_number(const ComplexMatrix &m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("condition number requires a square matrix");
    const double smax = sigma_max(m);
    if (smax == 0.0)
        return std::numeric_limits<double>::infinity();
    const std::optional<ComplexMatrix> inv = raw_inverse(m);
    if (!inv)
        return std::numeric_limits<double>::infinity();
    // sigma_min(m) = 1 / sigma_max(m^-1)
    const double kappa = smax * sigma_max(*inv);
    return std::max(kappa, 1.0);
}

ComplexMatrix invert(const ComplexMatrix &m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse requires a square matrix");
    const double kappa = condition_number(m);
    if (!(kappa <= kSingularConditionThreshold))
        throw SingularMatrixError("matrix condition number " + std::to_string(kappa) +
                                  " exceeds inversion threshold");
    std::optional<ComplexMatrix> inv = raw_inverse(m);
    if (!inv)
        throw SingularMatrixError("exactly singular matrix");
    return std::move(*inv);
}

} // namespace csitdof

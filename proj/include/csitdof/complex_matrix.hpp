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

#ifndef CSITDOF_COMPLEX_MATRIX_HPP
#define CSITDOF_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace csitdof {

using cplx = std::complex<double>;

/**
 * Dense row-major complex matrix for the small systems this project needs
 * (channel matrices, beamformers, constraint bases; sizes stay <= 8).
 * Plain O(n^3) dense kernels, no external linear-algebra dependency.
 */
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx &at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<cplx> &entries() const { return entries_; }

    ComplexMatrix operator*(const ComplexMatrix &rhs) const;

    /// Conjugate transpose.
    ComplexMatrix hermitian() const;

    /// Rows `which` of this matrix, in the given order.
    ComplexMatrix select_rows(const std::vector<int> &which) const;

    /// Largest entry magnitude (the max-norm used by residual checks).
    double max_abs() const;

    double frobenius_norm() const;

    /// Column c as a vector; row r likewise.
    std::vector<cplx> column(std::size_t c) const;
    std::vector<cplx> row(std::size_t r) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

/// a . b without conjugation (matches the row-vector channel convention
/// y_k = h_k x, so inner products against beams take no conjugate).
cplx dot_unconjugated(const std::vector<cplx> &a, const std::vector<cplx> &b);

/// <a, b> = sum conj(a_i) b_i.
cplx dot_conjugated(const std::vector<cplx> &a, const std::vector<cplx> &b);

double vector_norm(const std::vector<cplx> &v);

/**
 * Inverse of a square matrix via Gauss-Jordan elimination with partial
 * pivoting. Throws SingularMatrixError when condition_number(m) exceeds
 * 1e10; below that the residual ||m * inv - I||_max stays under 1e-9 for
 * condition numbers up to 1e8.
 */
ComplexMatrix invert(const ComplexMatrix &m);

/**
 * Ratio of largest to smallest singular value of a square matrix,
 * computed as sigma_max(m) * sigma_max(m^-1). Returns +infinity for
 * exactly singular input (zero pivot during elimination).
 */
double condition_number(const ComplexMatrix &m);

/// Threshold above which invert() refuses to proceed.
inline constexpr double kSingularConditionThreshold = 1e10;

} // namespace csitdof

#endif // CSITDOF_COMPLEX_MATRIX_HPP

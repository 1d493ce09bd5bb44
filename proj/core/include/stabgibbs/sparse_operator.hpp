// Copyright 2026 The stabgibbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABGIBBS_SPARSE_OPERATOR_HPP
#define STABGIBBS_SPARSE_OPERATOR_HPP

#include "stabgibbs/pauli.hpp"
#include "stabgibbs/types.hpp"

namespace stabgibbs {

/// Complex sparse operator on a 2^N Hilbert space. Exact zeros are never stored.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(SpMat m);

  static SparseOperator identity(Index dim);
  static SparseOperator zero(Index dim);
  static SparseOperator diagonal(const DVecR& diag);
  static SparseOperator from_pauli(const PauliString& p);
  // Entries with |a_ij| <= drop_tol are discarded.
  static SparseOperator from_dense(const DMat& m, double drop_tol = 0.0);

  Index dim() const { return m_.rows(); }
  const SpMat& matrix() const { return m_; }
  Index nnz() const { return m_.nonZeros(); }

  SparseOperator adjoint() const;
  SparseOperator operator*(const SparseOperator& rhs) const;
  SparseOperator operator+(const SparseOperator& rhs) const;
  SparseOperator operator-(const SparseOperator& rhs) const;
  SparseOperator scaled(cplx s) const;

  DVec apply(const DVec& v) const { return m_ * v; }
  DMat to_dense() const { return DMat(m_); }

  double max_abs() const;
  // max_ij |A_ij - conj(A_ji)|
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }
  bool is_diagonal() const;
  DVec diagonal_entries() const { return m_.diagonal(); }

 private:
  SpMat m_;
};

// Largest entrywise |a - b| between two sparse matrices of equal shape.
double max_abs_diff(const SpMat& a, const SpMat& b);

}  // namespace stabgibbs

#endif  // STABGIBBS_SPARSE_OPERATOR_HPP

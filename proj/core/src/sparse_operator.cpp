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

#include "stabgibbs/sparse_operator.hpp"

#include <algorithm>
#include <cmath>

namespace stabgibbs {

SparseOperator::SparseOperator(SpMat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw InvalidArgument("SparseOperator: matrix must be square");
  m_.prune(cplx(0.0, 0.0), 0.0);
  m_.makeCompressed();
}

SparseOperator SparseOperator::identity(Index dim) {
  SpMat m(dim, dim);
  m.setIdentity();
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::zero(Index dim) { return SparseOperator(SpMat(dim, dim)); }

SparseOperator SparseOperator::diagonal(const DVecR& diag) {
  const Index dim = diag.size();
  SpMat m(dim, dim);
  m.reserve(Eigen::VectorX<Index>::Constant(dim, 1));
  for (Index i = 0; i < dim; ++i) {
    if (diag[i] != 0.0) m.insert(i, i) = diag[i];
  }
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::from_pauli(const PauliString& p) {
  return SparseOperator(p.to_sparse());
}

SparseOperator SparseOperator::from_dense(const DMat& m, double drop_tol) {
  if (m.rows() != m.cols()) throw InvalidArgument("SparseOperator::from_dense: not square");
  std::vector<Triplet> t;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (std::abs(m(i, j)) > drop_tol) t.emplace_back(i, j, m(i, j));
    }
  }
  SpMat s(m.rows(), m.cols());
  s.setFromTriplets(t.begin(), t.end());
  return SparseOperator(std::move(s));
}

SparseOperator SparseOperator::adjoint() const { return SparseOperator(SpMat(m_.adjoint())); }

SparseOperator SparseOperator::operator*(const SparseOperator& rhs) const {
  return SparseOperator(SpMat(m_ * rhs.m_));
}

SparseOperator SparseOperator::operator+(const SparseOperator& rhs) const {
  return SparseOperator(SpMat(m_ + rhs.m_));
}

SparseOperator SparseOperator::operator-(const SparseOperator& rhs) const {
  return SparseOperator(SpMat(m_ - rhs.m_));
}

SparseOperator SparseOperator::scaled(cplx s) const { return SparseOperator(SpMat(m_ * s)); }

double SparseOperator::max_abs() const {
  double best = 0.0;
  for (Index k = 0; k < m_.outerSize(); ++k) {
    for (SpMat::InnerIterator it(m_, k); it; ++it) best = std::max(best, std::abs(it.value()));
  }
  return best;
}

double SparseOperator::hermiticity_defect() const {
  return max_abs_diff(m_, SpMat(m_.adjoint()));
}

bool SparseOperator::is_diagonal() const {
  for (Index k = 0; k < m_.outerSize(); ++k) {
    for (SpMat::InnerIterator it(m_, k); it; ++it) {
      if (it.row() != it.col()) return false;
    }
  }
  return true;
}

double max_abs_diff(const SpMat& a, const SpMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("max_abs_diff: shape mismatch");
  }
  const SpMat d = a - b;
  double best = 0.0;
  for (Index k = 0; k < d.outerSize(); ++k) {
    for (SpMat::InnerIterator it(d, k); it; ++it) best = std::max(best, std::abs(it.value()));
  }
  return best;
}

}  // namespace stabgibbs

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


#include "stabgibbs/gibbs.hpp"

#include <cmath>
#include <limits>

namespace stabgibbs {

const char* basis_name(BasisKind b) {
  switch (b) {
    case BasisKind::computational: return "computational";
    case BasisKind::stabilizer_frame: return "stabilizer_frame";
    default: return "eigenbasis";
  }
}

namespace {

double log_sum_exp_neg(const DVecR& energies, double beta) {
  const double e0 = energies.minCoeff();
  double s = 0.0;
  for (Index i = 0; i < energies.size(); ++i) s += std::exp(-beta * (energies[i] - e0));
  return -beta * e0 + std::log(s);
}

void check_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InvalidArgument("gibbs_state: beta must be finite and >= 0");
}

}  // namespace

DVecR GibbsModel::log_weights() const {
  return (-beta * energies.array() - log_partition).matrix();
}

DVecR GibbsModel::weights() const { return log_weights().array().exp().matrix(); }

SparseOperator GibbsModel::state() const { return SparseOperator::diagonal(weights()); }

SparseOperator GibbsModel::operator_in_basis(const PauliString& p) const {
  switch (basis) {
    case BasisKind::computational:
      return SparseOperator::from_pauli(p);
    case BasisKind::stabilizer_frame: {
      const FrameAction a = stabilizer->frame.action(p);
      const Index d = dim();
      std::vector<Triplet> t;
      t.reserve(static_cast<std::size_t>(d));
      for (Index s = 0; s < d; ++s) {
        const auto u = static_cast<std::uint64_t>(s);
        t.emplace_back(static_cast<Index>(u ^ a.flip), s, a.coeff(u));
      }
      SpMat m(d, d);
      m.setFromTriplets(t.begin(), t.end());
      return SparseOperator(std::move(m));
    }
    default:
      return SparseOperator::from_dense(eigenvectors.adjoint() * p.to_dense() * eigenvectors, 1e-14);
  }
}

DMat GibbsModel::to_working_basis(const DMat& a) const {
  switch (basis) {
    case BasisKind::computational: return a;
    case BasisKind::stabilizer_frame: {
      const DMat u = stabilizer->frame.basis_matrix();
      return u.adjoint() * a * u;
    }
    default: return eigenvectors.adjoint() * a * eigenvectors;
  }
}

nlohmann::json GibbsModel::to_json() const {
  nlohmann::json j = {{"beta", beta},
                      {"J", coupling_J},
                      {"log_partition", log_partition},
                      {"dim", dim()},
                      {"basis", basis_name(basis)}};
  if (stabilizer) j["model"] = stabilizer->name();
  return j;
}

GibbsModel gibbs_state(const SparseOperator& hamiltonian, double beta, double coupling_J) {
  check_beta(beta);
  const double scale = std::max(1.0, hamiltonian.max_abs());
  if (!hamiltonian.is_hermitian(1e-12 * scale)) throw InvalidArgument("gibbs_state: hamiltonian is not hermitian");
  GibbsModel g;
  g.hamiltonian = hamiltonian;
  g.beta = beta;
  g.coupling_J = coupling_J;
  if (hamiltonian.is_diagonal()) {
    g.basis = BasisKind::computational;
    g.energies = hamiltonian.diagonal_entries().real();
  } else {
    if (hamiltonian.dim() > 4096) throw InvalidArgument("gibbs_state: non-diagonal H above dim 4096");
    Eigen::SelfAdjointEigenSolver<DMat> es(hamiltonian.to_dense());
    g.basis = BasisKind::eigenbasis;
    g.energies = es.eigenvalues();
    g.eigenvectors = es.eigenvectors();
  }
  g.log_partition = log_sum_exp_neg(g.energies, beta);
  return g;
}

GibbsModel gibbs_state(std::shared_ptr<const StabilizerModel> model, double beta) {
  check_beta(beta);
  if (!model) throw InvalidArgument("gibbs_state: null model");
  if (model->num_qubits() > 24) throw InvalidArgument("gibbs_state: frame too large to enumerate");
  GibbsModel g;
  g.beta = beta;
  g.coupling_J = model->ring ? model->ring->coupling : 0.0;
  g.basis = BasisKind::stabilizer_frame;
  g.stabilizer = model;
  g.energies = model->energies();
  if (model->num_qubits() <= 14) g.hamiltonian = model->hamiltonian.to_sparse();
  g.log_partition = log_sum_exp_neg(g.energies, beta);
  return g;
}

double glauber_rate(double omega, double beta) {
  if (omega == 0.0 || beta == 0.0) return 1.0;
  if (std::isinf(beta)) return omega > 0.0 ? 0.0 : 2.0;
  const double x = beta * omega;
  if (x > 0.0) {
    const double e = std::exp(-x);
    return 2.0 * e / (1.0 + e);
  }
  return 2.0 / (std::exp(x) + 1.0);
}

cplx gns_inner(const DMat& y, const DMat& x, const GibbsModel& model) {
  if (y.rows() != model.dim() || x.rows() != model.dim() || y.cols() != x.cols() || y.rows() != y.cols()) {
    throw InvalidArgument("gns_inner: shape mismatch");
  }
  const DVecR w = model.weights();
  cplx acc{0.0, 0.0};
  for (Index j = 0; j < x.cols(); ++j) acc += y.col(j).dot(x.col(j)) * w[j];
  return acc;
}

}  // namespace stabgibbs

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


#ifndef STABGIBBS_GIBBS_HPP
#define STABGIBBS_GIBBS_HPP

#include <memory>

#include <nlohmann/json.hpp>

#include "stabgibbs/frame.hpp"
#include "stabgibbs/sparse_operator.hpp"

namespace stabgibbs {

// Basis in which a GibbsModel stores energies and every derived operator.
enum class BasisKind { computational, stabilizer_frame, eigenbasis };

const char* basis_name(BasisKind b);

/// Thermal state sigma = exp(-beta H)/Z, diagonal in the working basis.
struct GibbsModel {
  SparseOperator hamiltonian;  // computational basis; empty for very large frame models
  double beta = 0.0;
  double coupling_J = 0.0;
  double log_partition = 0.0;
  DVecR energies;  // working basis
  BasisKind basis = BasisKind::computational;
  std::shared_ptr<const StabilizerModel> stabilizer;
  DMat eigenvectors;  // eigenbasis only: columns in the computational basis

  Index dim() const { return energies.size(); }
  DVecR log_weights() const;
  DVecR weights() const;
  SparseOperator state() const;
  // Pauli string expressed in the working basis.
  SparseOperator operator_in_basis(const PauliString& p) const;
  // Computational-basis matrix moved into the working basis.
  DMat to_working_basis(const DMat& a) const;
  nlohmann::json to_json() const;
};

GibbsModel gibbs_state(const SparseOperator& hamiltonian, double beta, double coupling_J = 0.0);
GibbsModel gibbs_state(std::shared_ptr<const StabilizerModel> model, double beta);

// 2 / (exp(beta omega) + 1), evaluated without overflow; beta may be +inf.
double glauber_rate(double omega, double beta);

// <Y, X>_sigma = Tr(Y^dag X sigma) for matrices in the working basis.
cplx gns_inner(const DMat& y, const DMat& x, const GibbsModel& model);

}  // namespace stabgibbs

#endif  // STABGIBBS_GIBBS_HPP

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


#ifndef STABGIBBS_BOHR_HPP
#define STABGIBBS_BOHR_HPP

#include <vector>

#include "stabgibbs/frame.hpp"
#include "stabgibbs/hamiltonians.hpp"
#include "stabgibbs/sparse_operator.hpp"

namespace stabgibbs {

/// Fourier component S(omega) of a coupling; S(omega) raises the energy by omega.
struct BohrComponent {
  double omega;
  SparseOperator jump;
};

/// Dense eigendecomposition with eigenvalues grouped into levels.
struct Eigensystem {
  DVecR values;
  DMat vectors;
  std::vector<Index> level_start;  // sorted; level k spans [start_k, start_{k+1})
  std::vector<double> level_energy;
  double tolerance = 0.0;
};

// Frequencies closer than tol_scale * max(1, |H|) are merged; a cluster wider
// than that is reported as a NumericalError.
Eigensystem eigensystem(const SparseOperator& hamiltonian, double tol_scale = 1e-9);

std::vector<BohrComponent> bohr_decompose_generic(const SparseOperator& hamiltonian,
                                                  const SparseOperator& coupling,
                                                  double tol_scale = 1e-9);
std::vector<BohrComponent> bohr_decompose_generic(const Eigensystem& eig, const SparseOperator& coupling);

// Computational basis, from products of eigenprojections (I + c T)/2 of the
// terms anticommuting with the coupling; at most 8 such terms.
std::vector<BohrComponent> bohr_decompose_stabilizer(const PauliSum& hamiltonian,
                                                     const PauliString& coupling);

// Same components expressed in the model's frame basis.
std::vector<BohrComponent> bohr_decompose_frame(const StabilizerModel& model, const PauliString& coupling);

// Largest entrywise difference after matching components by frequency.
double component_mismatch(const std::vector<BohrComponent>& a, const std::vector<BohrComponent>& b,
                          double omega_tol = 1e-9);

SparseOperator sum_components(const std::vector<BohrComponent>& comps);

}  // namespace stabgibbs

#endif  // STABGIBBS_BOHR_HPP

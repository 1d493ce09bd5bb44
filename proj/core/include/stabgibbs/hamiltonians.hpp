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


#ifndef STABGIBBS_HAMILTONIANS_HPP
#define STABGIBBS_HAMILTONIANS_HPP

#include <vector>

#include "stabgibbs/lattice.hpp"
#include "stabgibbs/pauli.hpp"
#include "stabgibbs/sparse_operator.hpp"

namespace stabgibbs {

struct PauliTerm {
  double coefficient;
  PauliString pauli;
};

/// Real linear combination of hermitian Pauli strings.
struct PauliSum {
  std::size_t n_qubits = 0;
  std::vector<PauliTerm> terms;

  SparseOperator to_sparse() const;
  // Sum of |coefficients|; bounds the operator norm.
  double norm_bound() const;
};

PauliString star_operator(const TorusLattice& lattice, std::size_t star);
PauliString plaquette_operator(const TorusLattice& lattice, std::size_t plaquette);

// -J sum_j Z_j Z_{j+1}; for N = 2 both bonds are the same operator.
PauliSum ising_terms(const RingLattice& lattice);
// -sum_s X_s - sum_p Z_p, stars first.
PauliSum toric_terms(const TorusLattice& lattice);

SparseOperator build_ising_hamiltonian(const RingLattice& lattice);
SparseOperator build_toric_hamiltonian(const TorusLattice& lattice);

struct ParityReport {
  bool stars_multiply_to_identity = false;
  bool plaquettes_multiply_to_identity = false;
  bool terms_commute = false;
};

ParityReport check_parity(const TorusLattice& lattice);

}  // namespace stabgibbs

#endif  // STABGIBBS_HAMILTONIANS_HPP

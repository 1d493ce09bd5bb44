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


#include "stabgibbs/hamiltonians.hpp"

#include <cmath>

namespace stabgibbs {

SparseOperator PauliSum::to_sparse() const {
  const Index dim = Index{1} << n_qubits;
  SpMat acc(dim, dim);
  for (const auto& t : terms) acc += t.coefficient * t.pauli.to_sparse();
  return SparseOperator(std::move(acc));
}

double PauliSum::norm_bound() const {
  double s = 0.0;
  for (const auto& t : terms) s += std::abs(t.coefficient);
  return s;
}

PauliString star_operator(const TorusLattice& lattice, std::size_t star) {
  const auto& sup = lattice.star_supports().at(star);
  return PauliString::on(lattice.num_qubits(), {sup.begin(), sup.end()}, 'X');
}

PauliString plaquette_operator(const TorusLattice& lattice, std::size_t plaquette) {
  const auto& sup = lattice.plaquette_supports().at(plaquette);
  return PauliString::on(lattice.num_qubits(), {sup.begin(), sup.end()}, 'Z');
}

PauliSum ising_terms(const RingLattice& lattice) {
  if (lattice.n_sites < 2) throw InvalidArgument("ising_terms: need N >= 2");
  PauliSum h{lattice.n_sites, {}};
  for (std::size_t j = 0; j < lattice.num_bonds(); ++j) {
    auto [a, b] = lattice.bond(j);
    h.terms.push_back({-lattice.coupling, PauliString::on(lattice.n_sites, {a, b}, 'Z')});
  }
  return h;
}

PauliSum toric_terms(const TorusLattice& lattice) {
  PauliSum h{lattice.num_qubits(), {}};
  for (std::size_t s = 0; s < lattice.num_stars(); ++s) h.terms.push_back({-1.0, star_operator(lattice, s)});
  for (std::size_t p = 0; p < lattice.num_plaquettes(); ++p) {
    h.terms.push_back({-1.0, plaquette_operator(lattice, p)});
  }
  return h;
}

SparseOperator build_ising_hamiltonian(const RingLattice& lattice) {
  const PauliSum h = ising_terms(lattice);
  if (h.n_qubits > 26) throw InvalidArgument("build_ising_hamiltonian: N too large for a dense basis");
  const Index dim = Index{1} << h.n_qubits;
  DVecR diag = DVecR::Zero(dim);
  for (Index b = 0; b < dim; ++b) {
    for (const auto& t : h.terms) diag[b] += t.coefficient * t.pauli.coeff(static_cast<std::uint64_t>(b)).real();
  }
  return SparseOperator::diagonal(diag);
}

SparseOperator build_toric_hamiltonian(const TorusLattice& lattice) {
  if (lattice.num_qubits() > 26) throw InvalidArgument("build_toric_hamiltonian: L too large");
  return toric_terms(lattice).to_sparse();
}

ParityReport check_parity(const TorusLattice& lattice) {
  const std::size_t n = lattice.num_qubits();
  PauliString xs = PauliString::identity(n), zs = PauliString::identity(n);
  for (std::size_t s = 0; s < lattice.num_stars(); ++s) xs *= star_operator(lattice, s);
  for (std::size_t p = 0; p < lattice.num_plaquettes(); ++p) zs *= plaquette_operator(lattice, p);
  ParityReport rep;
  rep.stars_multiply_to_identity = xs == PauliString::identity(n);
  rep.plaquettes_multiply_to_identity = zs == PauliString::identity(n);
  const PauliSum h = toric_terms(lattice);
  rep.terms_commute = true;
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    for (std::size_t j = i + 1; j < h.terms.size(); ++j) {
      rep.terms_commute = rep.terms_commute && h.terms[i].pauli.commutes(h.terms[j].pauli);
    }
  }
  return rep;
}

}  // namespace stabgibbs

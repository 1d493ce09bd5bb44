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


#include "stabgibbs/ground_states.hpp"

#include <algorithm>
#include <set>

#include "stabgibbs/hamiltonians.hpp"

namespace stabgibbs {

PauliString LogicalOperators::ybar1() const { return (zbar1 * xbar1).mul_phase(3); }
PauliString LogicalOperators::ybar2() const { return (zbar2 * xbar2).mul_phase(3); }

LogicalOperators logical_operators(const TorusLattice& lattice) {
  const std::size_t n = lattice.num_qubits();
  return {PauliString::on(n, lattice.xbar1_support(), 'X'), PauliString::on(n, lattice.zbar1_support(), 'Z'),
          PauliString::on(n, lattice.xbar2_support(), 'X'), PauliString::on(n, lattice.zbar2_support(), 'Z')};
}

PauliString ising_xbar(std::size_t n_sites) {
  std::vector<std::size_t> all(n_sites);
  for (std::size_t i = 0; i < n_sites; ++i) all[i] = i;
  return PauliString::on(n_sites, all, 'X');
}

PauliString ising_zbar(std::size_t n_sites) { return PauliString::single(n_sites, 0, 'Z'); }

GroundLabel parse_ground_label(std::string_view text) {
  if (text == "o") return GroundLabel::o;
  if (text == "|") return GroundLabel::vertical;
  if (text == "-") return GroundLabel::horizontal;
  if (text == "+") return GroundLabel::plus;
  throw InvalidArgument("ground label must be one of o | - +");
}

const char* ground_label_name(GroundLabel label) {
  switch (label) {
    case GroundLabel::o: return "o";
    case GroundLabel::vertical: return "|";
    case GroundLabel::horizontal: return "-";
    default: return "+";
  }
}

DVec apply_pauli(const PauliString& p, const DVec& psi) {
  const Index dim = psi.size();
  if (dim != (Index{1} << p.num_qubits())) throw InvalidArgument("apply_pauli: dimension mismatch");
  const std::uint64_t xm = p.x_mask();
  DVec out(dim);
  for (Index b = 0; b < dim; ++b) {
    const auto u = static_cast<std::uint64_t>(b);
    out[static_cast<Index>(u ^ xm)] = p.coeff(u) * psi[b];
  }
  return out;
}

double pauli_expectation(const PauliString& p, const DVec& psi) {
  return psi.dot(apply_pauli(p, psi)).real();
}

DVec ground_state(const TorusLattice& lattice, GroundLabel label) {
  if (lattice.side() > 3) throw InvalidArgument("ground_state: only L <= 3 is supported");
  const std::size_t n = lattice.num_qubits();
  const LogicalOperators logic = logical_operators(lattice);
  DVec phi = DVec::Zero(Index{1} << n);
  phi[0] = 1.0;
  if (label == GroundLabel::vertical || label == GroundLabel::plus) phi = apply_pauli(logic.xbar1, phi);
  if (label == GroundLabel::horizontal || label == GroundLabel::plus) phi = apply_pauli(logic.xbar2, phi);

  DVec psi;
  if (lattice.side() == 2) {
    // Explicit sum over star subsets of prod X_s^{alpha_s}.
    psi = DVec::Zero(phi.size());
    const std::size_t ns = lattice.num_stars();
    for (std::uint64_t alpha = 0; alpha < (std::uint64_t{1} << ns); ++alpha) {
      PauliString prod = PauliString::identity(n);
      for (std::size_t s = 0; s < ns; ++s) {
        if ((alpha >> s) & 1u) prod *= star_operator(lattice, s);
      }
      psi += apply_pauli(prod, phi);
    }
  } else {
    psi = phi;
    for (std::size_t s = 0; s < lattice.num_stars(); ++s) psi += apply_pauli(star_operator(lattice, s), psi);
  }
  const double norm = psi.norm();
  if (norm == 0.0) throw NumericalError("ground_state: projection vanished");
  return psi / norm;
}

PauliString excitation_path_operator(const TorusLattice& lattice, ExcitationKind kind,
                                     const std::vector<std::size_t>& path) {
  const auto allowed_list = kind == ExcitationKind::magnetic ? lattice.snake_spins() : lattice.comb_spins();
  const std::set<std::size_t> allowed(allowed_list.begin(), allowed_list.end());
  for (std::size_t e : path) {
    if (!allowed.count(e)) {
      throw InvalidArgument(kind == ExcitationKind::magnetic ? "excitation path leaves the snake"
                                                             : "excitation path leaves the comb");
    }
  }
  PauliString out = PauliString::identity(lattice.num_qubits());
  const char letter = kind == ExcitationKind::magnetic ? 'X' : 'Z';
  for (std::size_t e : path) out *= PauliString::single(lattice.num_qubits(), e, letter);
  return out;
}

}  // namespace stabgibbs

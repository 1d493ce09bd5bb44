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


#ifndef STABGIBBS_GROUND_STATES_HPP
#define STABGIBBS_GROUND_STATES_HPP

#include <string_view>
#include <vector>

#include "stabgibbs/lattice.hpp"
#include "stabgibbs/pauli.hpp"
#include "stabgibbs/types.hpp"

namespace stabgibbs {

struct LogicalOperators {
  PauliString xbar1, zbar1, xbar2, zbar2;

  // -i Zbar Xbar, hermitian.
  PauliString ybar1() const;
  PauliString ybar2() const;
};

LogicalOperators logical_operators(const TorusLattice& lattice);

// Ring logicals: product of all sigma^x, and sigma^z on site 0.
PauliString ising_xbar(std::size_t n_sites);
PauliString ising_zbar(std::size_t n_sites);

// Logical content |00>, |10>, |01>, |11> respectively.
enum class GroundLabel { o, vertical, horizontal, plus };

GroundLabel parse_ground_label(std::string_view text);
const char* ground_label_name(GroundLabel label);

// Normalized star-symmetrized ground state; L <= 3.
DVec ground_state(const TorusLattice& lattice, GroundLabel label);

enum class ExcitationKind { magnetic, electric };

// Product of sigma^x (magnetic, snake edges) or sigma^z (electric, comb edges).
PauliString excitation_path_operator(const TorusLattice& lattice, ExcitationKind kind,
                                     const std::vector<std::size_t>& path);

// Applies a Pauli string to a state vector in the computational basis.
DVec apply_pauli(const PauliString& p, const DVec& psi);
// <psi|H|psi> for H = sum of Pauli terms with real coefficients.
double pauli_expectation(const PauliString& p, const DVec& psi);

}  // namespace stabgibbs

#endif  // STABGIBBS_GROUND_STATES_HPP

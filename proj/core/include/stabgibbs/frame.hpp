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


#ifndef STABGIBBS_FRAME_HPP
#define STABGIBBS_FRAME_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stabgibbs/hamiltonians.hpp"
#include "stabgibbs/lattice.hpp"
#include "stabgibbs/pauli.hpp"
#include "stabgibbs/types.hpp"

namespace stabgibbs {

/// P|s> = phase * (-1)^{|sign & (s ^ flip)|} |s ^ flip> in a frame basis.
struct FrameAction {
  std::uint64_t flip = 0;
  std::uint64_t sign = 0;
  cplx phase{1.0, 0.0};

  cplx coeff(std::uint64_t s) const;
};

/// Joint eigenbasis of n independent commuting Pauli generators.
///
/// Basis vector |s> = prod_{k in s} d_k |ref>, where d_k anticommutes with
/// g_k only and the d_k commute among themselves; g_k |s> = (-1)^{s_k} |s>.
class StabilizerFrame {
 public:
  StabilizerFrame() = default;
  // `reference` may be empty when the Hilbert space is too large to store.
  StabilizerFrame(std::vector<PauliString> generators, std::vector<PauliString> destabilizers,
                  DVec reference);

  std::size_t num_qubits() const { return gens_.size(); }
  const std::vector<PauliString>& generators() const { return gens_; }
  const std::vector<PauliString>& destabilizers() const { return destabs_; }
  const DVec& reference() const { return ref_; }

  FrameAction action(const PauliString& p) const;
  // Columns are the frame vectors in the computational basis; n <= 12.
  DMat basis_matrix() const;
  // Frame vector |s> in the computational basis.
  DVec basis_vector(std::uint64_t s) const;

 private:
  std::vector<PauliString> gens_;
  std::vector<PauliString> destabs_;
  DVec ref_;
};

/// Commuting-Pauli Hamiltonian together with its diagonalizing frame.
struct StabilizerModel {
  enum class Kind { ising, toric };

  Kind kind = Kind::ising;
  PauliSum hamiltonian;
  StabilizerFrame frame;
  // Per term: frame sign mask and h_T times the frame phase.
  std::vector<std::uint64_t> term_masks;
  std::vector<double> term_weights;
  // Frame bits holding the logical (non-syndrome) labels.
  std::uint64_t logical_mask = 0;
  std::optional<RingLattice> ring;
  std::optional<TorusLattice> torus;

  std::size_t num_qubits() const { return hamiltonian.n_qubits; }
  Index dim() const { return Index{1} << num_qubits(); }
  const char* name() const { return kind == Kind::ising ? "ising" : "toric"; }
  double energy(std::uint64_t s) const;
  DVecR energies() const;
  // E(s ^ flip) - E(s) summed over the terms a flip changes, so equal
  // transitions give bitwise-equal frequencies.
  double transition_energy(std::uint64_t s, std::uint64_t flip) const;
};

StabilizerModel make_ising_model(const RingLattice& lattice);
StabilizerModel make_toric_model(const TorusLattice& lattice);

}  // namespace stabgibbs

#endif  // STABGIBBS_FRAME_HPP

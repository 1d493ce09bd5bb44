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

#ifndef STABGIBBS_PAULI_HPP
#define STABGIBBS_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stabgibbs/types.hpp"

namespace stabgibbs {

/// N-qubit Pauli operator with an exact fourth-root-of-unity phase.
///
/// Stored as i^k X^x Z^z over packed 64-bit words. Qubit q is bit q of the
/// computational basis index.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);

  static PauliString identity(std::size_t n_qubits) { return PauliString(n_qubits); }
  static PauliString single(std::size_t n_qubits, std::size_t q, char letter);
  // Product of `letter` over the listed qubits.
  static PauliString on(std::size_t n_qubits, const std::vector<std::size_t>& qubits, char letter);
  // Parses "+XIZY", "-iXX", "YZ" (leading sign optional). Character q is qubit q.
  static PauliString parse(std::string_view text);

  std::size_t num_qubits() const { return n_; }
  bool x(std::size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1u; }
  bool z(std::size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1u; }
  void set_x(std::size_t q, bool v);
  void set_z(std::size_t q, bool v);
  char letter(std::size_t q) const;

  // Power of i in front of the letter form (Y counted as the Pauli matrix Y).
  int phase() const;
  // Multiplies by i^k.
  PauliString& mul_phase(int k);

  bool hermitian() const { return (phase() & 1) == 0; }
  bool commutes(const PauliString& other) const;
  bool is_identity() const;  // letters all I, any phase
  std::size_t weight() const;
  std::vector<std::size_t> support() const;

  PauliString operator*(const PauliString& rhs) const;
  PauliString& operator*=(const PauliString& rhs);
  bool operator==(const PauliString& rhs) const;
  bool operator!=(const PauliString& rhs) const { return !(*this == rhs); }

  // Masks over the low 64 qubits; valid for n <= 64.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;
  // P|b> = coeff(b) |b ^ x_mask>.
  cplx coeff(std::uint64_t basis_index) const;

  std::string str() const;

  DMat to_dense() const;
  SpMat to_sparse() const;

 private:
  void check_same_size(const PauliString& rhs) const;

  std::size_t n_ = 0;
  int xz_phase_ = 0;  // power of i multiplying X^x Z^z
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
};

// i^k for integer k.
cplx ipow(int k);

}  // namespace stabgibbs

#endif  // STABGIBBS_PAULI_HPP

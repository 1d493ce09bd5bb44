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


#ifndef STABGIBBS_SECTORS_HPP
#define STABGIBBS_SECTORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stabgibbs/davies.hpp"
#include "stabgibbs/ground_states.hpp"

namespace stabgibbs {

enum class LogicalTag { one, x, y, z };

/// Tag (B1, B2) of the logical factor; (one, one) is the syndrome sector.
struct SectorLabel {
  LogicalTag b1 = LogicalTag::one;
  LogicalTag b2 = LogicalTag::one;

  std::string str() const;
  static std::vector<SectorLabel> all();
};

/// Generators of the four mutually commuting subalgebras of the torus.
struct LogicSyndromeSplit {
  std::vector<PauliString> logical1, logical2, magnetic, electric;
  std::size_t syndrome_dim_log2 = 0;

  // Random products drawn from two different subalgebras always commute.
  bool verify_commutation(std::mt19937_64& rng, int samples) const;
};

LogicSyndromeSplit logic_syndrome_split(const TorusLattice& lattice);

enum class PairClass { flip, ab, interaction };

/// Bonds kept diagonal (Lambda) versus flipped between ket and bra.
class LambdaSector {
 public:
  LambdaSector(std::size_t n_bonds, std::uint64_t lambda_mask);
  static LambdaSector from_list(std::size_t n_bonds, const std::vector<std::size_t>& lambda);

  std::size_t n_bonds() const { return n_; }
  std::uint64_t mask() const { return lambda_; }
  std::uint64_t flip_mask() const { return ~lambda_ & ((std::uint64_t{1} << n_) - 1); }
  bool contains(std::size_t bond) const { return (lambda_ >> bond) & 1u; }
  std::vector<std::size_t> bonds() const;

  // Class of the bond pair (j-1, j), j = 1 .. n-1.
  PairClass pair_class(std::size_t j) const;
  // Interaction pair whose Lambda bond is the left one.
  bool mirrored(std::size_t j) const { return pair_class(j) == PairClass::interaction && contains(j - 1); }
  std::vector<std::size_t> gamma(PairClass c) const;

 private:
  std::size_t n_;
  std::uint64_t lambda_;
};

// Every admissible Lambda (|complement| even) over n bonds.
std::vector<LambdaSector> all_lambda_sectors(std::size_t n_bonds);

enum class BlockCase { ab, flip, interaction };

const char* block_case_name(BlockCase c);

// 4x4 master-Hamiltonian block of one sigma^x jump, rows and columns indexed
// by the ket pair (++, +-, -+, --). beta may be +inf.
DMatR local_block_matrix(BlockCase c, double beta, bool mirrored = false);

// Sum of local blocks over the open bond chain, on parity-even ket
// configurations in increasing bit order.
DMatR tensor_sector_matrix(const LambdaSector& sector, double beta);

/// Operators spanning a sector, stored as vec columns in the working basis.
struct SectorBasis {
  Index hilbert_dim = 0;
  SpMat vectors;   // op_dim x k
  DVecR metric;    // GNS weights per vec index: sigma of the bra label
  std::vector<std::uint64_t> labels;
};

// Ring model: |e'><e| with e_0 = e'_0 = 0, ket bonds m', bra bonds m' ^ flips.
SectorBasis lambda_sector_basis(const GibbsModel& ising, const LambdaSector& sector);
// Matrix units whose frame labels vanish on the logical bits.
SectorBasis syndrome_sector_basis(const GibbsModel& model);
// B1 (x) B2 (x) |x'><x| over syndrome labels; torus frame models only.
SectorBasis logical_sector_basis(const GibbsModel& toric, SectorLabel label);

struct Restriction {
  SpMat matrix;
  double leakage = 0.0;

  DMat dense() const { return DMat(matrix); }
};

// <e_k, L e_l>_sigma on a GNS-orthonormal basis, with the weighted norm of
// the part of L e_l outside the span. A non-negative invariant_tol turns
// excess leakage into a NumericalError.
Restriction restrict_superoperator(const Superoperator& l, const SectorBasis& basis, double invariant_tol = -1.0);

/// Diagonal matrix units |s><s| / sqrt(sigma_s) of a frame model.
struct DiagonalSector {
  std::vector<std::uint64_t> labels;
  SpMatR generator;            // GNS-normalised restriction of the Heisenberg generator
  bool logical_fixed = false;  // labels carry logical bits zero
};

// Built from label arithmetic without the full superoperator; the logical
// bits are held at zero when no coupling flips them.
DiagonalSector diagonal_sector_generator(const GibbsModel& model, const std::vector<PauliString>& couplings);
// Unit kernel vector sqrt(sigma_s) over the sector labels, renormalised.
DVecR diagonal_sector_kernel(const GibbsModel& model, const DiagonalSector& sector);
// Same span as a SectorBasis, for comparison with restrict_superoperator.
SectorBasis diagonal_sector_basis(const GibbsModel& model, const DiagonalSector& sector);

// Abelian identification |i><i| <-> |i>.
Index abelian_vec_index(Index state, Index hilbert_dim);
std::optional<Index> abelian_state(Index vec_index, Index hilbert_dim);

// Ring spin configuration (bit j = spin j) from bond bits with spin 0 fixed to 0.
std::uint64_t spins_from_bonds(std::uint64_t bonds, std::size_t n_sites);
std::uint64_t bonds_from_spins(std::uint64_t spins, std::size_t n_sites);

}  // namespace stabgibbs

#endif  // STABGIBBS_SECTORS_HPP

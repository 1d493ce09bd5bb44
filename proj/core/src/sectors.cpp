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


#include "stabgibbs/sectors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace stabgibbs {

namespace {

const char* tag_name(LogicalTag t) {
  switch (t) {
    case LogicalTag::one: return "1";
    case LogicalTag::x: return "X";
    case LogicalTag::y: return "Y";
    default: return "Z";
  }
}

// Action of a logical tag on one logical bit: |l> -> coeff |l ^ flip>.
std::pair<std::uint64_t, cplx> tag_action(LogicalTag t, std::uint64_t bit) {
  switch (t) {
    case LogicalTag::one: return {0, 1.0};
    case LogicalTag::x: return {1, 1.0};
    case LogicalTag::z: return {0, bit ? -1.0 : 1.0};
    default:  // Y = -i Z X
      return {1, bit ? cplx(0.0, -1.0) : cplx(0.0, 1.0)};
  }
}

PauliString random_product(const std::vector<PauliString>& gens, std::mt19937_64& rng) {
  PauliString p = PauliString::identity(gens.front().num_qubits());
  std::bernoulli_distribution coin(0.5);
  for (const auto& g : gens) {
    if (coin(rng)) p *= g;
  }
  return p;
}

}  // namespace

std::string SectorLabel::str() const { return std::string("(") + tag_name(b1) + "," + tag_name(b2) + ")"; }

std::vector<SectorLabel> SectorLabel::all() {
  std::vector<SectorLabel> out;
  for (auto a : {LogicalTag::one, LogicalTag::x, LogicalTag::y, LogicalTag::z}) {
    for (auto b : {LogicalTag::one, LogicalTag::x, LogicalTag::y, LogicalTag::z}) out.push_back({a, b});
  }
  return out;
}

LogicSyndromeSplit logic_syndrome_split(const TorusLattice& lattice) {
  const std::size_t n = lattice.num_qubits();
  const LogicalOperators l = logical_operators(lattice);
  LogicSyndromeSplit s;
  s.logical1 = {l.xbar1, l.zbar1};
  s.logical2 = {l.xbar2, l.zbar2};
  for (std::size_t p = 0; p < lattice.num_plaquettes(); ++p) s.magnetic.push_back(plaquette_operator(lattice, p));
  for (std::size_t e : lattice.snake_spins()) s.magnetic.push_back(PauliString::single(n, e, 'X'));
  for (std::size_t v = 0; v < lattice.num_stars(); ++v) s.electric.push_back(star_operator(lattice, v));
  for (std::size_t e : lattice.comb_spins()) s.electric.push_back(PauliString::single(n, e, 'Z'));
  s.syndrome_dim_log2 = n - 2;
  return s;
}

bool LogicSyndromeSplit::verify_commutation(std::mt19937_64& rng, int samples) const {
  const std::vector<const std::vector<PauliString>*> algebras{&logical1, &logical2, &magnetic, &electric};
  for (std::size_t a = 0; a < algebras.size(); ++a) {
    for (std::size_t b = a + 1; b < algebras.size(); ++b) {
      for (const auto& g : *algebras[a]) {
        for (const auto& h : *algebras[b]) {
          if (!g.commutes(h)) return false;
        }
      }
      for (int k = 0; k < samples; ++k) {
        if (!random_product(*algebras[a], rng).commutes(random_product(*algebras[b], rng))) return false;
      }
    }
  }
  return true;
}

LambdaSector::LambdaSector(std::size_t n_bonds, std::uint64_t lambda_mask) : n_(n_bonds), lambda_(lambda_mask) {
  if (n_bonds < 2 || n_bonds > 62) throw InvalidArgument("LambdaSector: need 2..62 bonds");
  if (lambda_mask >> n_bonds) throw InvalidArgument("LambdaSector: bond index out of range");
  if (std::popcount(flip_mask()) % 2 != 0) throw InvalidArgument("LambdaSector: complement of Lambda must be even");
}

LambdaSector LambdaSector::from_list(std::size_t n_bonds, const std::vector<std::size_t>& lambda) {
  std::uint64_t m = 0;
  for (std::size_t b : lambda) {
    if (b >= n_bonds) throw InvalidArgument("LambdaSector: bond index out of range");
    m |= std::uint64_t{1} << b;
  }
  return LambdaSector(n_bonds, m);
}

std::vector<std::size_t> LambdaSector::bonds() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < n_; ++b) {
    if (contains(b)) out.push_back(b);
  }
  return out;
}

PairClass LambdaSector::pair_class(std::size_t j) const {
  if (j == 0 || j >= n_) throw InvalidArgument("LambdaSector: pair index out of range");
  const bool left = contains(j - 1), right = contains(j);
  if (left && right) return PairClass::ab;
  if (!left && !right) return PairClass::flip;
  return PairClass::interaction;
}

std::vector<std::size_t> LambdaSector::gamma(PairClass c) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < n_; ++j) {
    if (pair_class(j) == c) out.push_back(j);
  }
  return out;
}

std::vector<LambdaSector> all_lambda_sectors(std::size_t n_bonds) {
  std::vector<LambdaSector> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n_bonds); ++m) {
    if ((n_bonds - static_cast<std::size_t>(std::popcount(m))) % 2 == 0) out.emplace_back(n_bonds, m);
  }
  return out;
}

const char* block_case_name(BlockCase c) {
  switch (c) {
    case BlockCase::ab: return "ab";
    case BlockCase::flip: return "flip";
    default: return "int";
  }
}

DMatR local_block_matrix(BlockCase c, double beta, bool mirrored) {
  if (!(beta >= 0.0)) throw InvalidArgument("local_block_matrix: beta must be >= 0");
  const double h_plus = glauber_rate(-4.0, beta);
  const double h_minus = glauber_rate(4.0, beta);
  const double eta = std::isinf(beta) ? 0.0 : std::exp(-2.0 * beta);
  DMatR m = DMatR::Zero(4, 4);
  switch (c) {
    case BlockCase::ab:
      m(0, 0) = -2.0 * eta * eta / (eta * eta + 1.0);
      m(0, 3) = m(3, 0) = 2.0 * eta / (eta * eta + 1.0);
      m(3, 3) = -2.0 / (eta * eta + 1.0);
      m(1, 1) = m(2, 2) = -1.0;
      m(1, 2) = m(2, 1) = 1.0;
      break;
    case BlockCase::flip:
      m(0, 0) = m(3, 3) = -(h_plus + h_minus) / 2.0;
      m(1, 1) = m(2, 2) = -1.0;
      m(1, 2) = m(2, 1) = 1.0;
      break;
    case BlockCase::interaction:
      m(0, 0) = -(h_minus + 1.0) / 2.0;
      m(1, 1) = -(h_plus + 1.0) / 2.0;
      m(2, 2) = -(h_minus + 1.0) / 2.0;
      m(3, 3) = -(h_plus + 1.0) / 2.0;
      if (mirrored) std::swap(m(1, 1), m(2, 2));
      break;
  }
  return m;
}

DMatR tensor_sector_matrix(const LambdaSector& sector, double beta) {
  const std::size_t n = sector.n_bonds();
  std::vector<std::uint64_t> states;
  std::vector<Index> pos(std::size_t{1} << n, -1);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) % 2 == 0) {
      pos[m] = static_cast<Index>(states.size());
      states.push_back(m);
    }
  }
  const Index k = static_cast<Index>(states.size());
  DMatR out = DMatR::Zero(k, k);
  for (std::size_t j = 1; j < n; ++j) {
    const PairClass pc = sector.pair_class(j);
    const BlockCase bc = pc == PairClass::ab ? BlockCase::ab : pc == PairClass::flip ? BlockCase::flip
                                                                                       : BlockCase::interaction;
    const DMatR blk = local_block_matrix(bc, beta, sector.mirrored(j));
    const std::uint64_t pair = (std::uint64_t{1} << (j - 1)) | (std::uint64_t{1} << j);
    for (Index a = 0; a < k; ++a) {
      const std::uint64_t s = states[a];
      const int la = static_cast<int>(2 * ((s >> (j - 1)) & 1u) + ((s >> j) & 1u));
      for (int lb = 0; lb < 4; ++lb) {
        if (blk(lb, la) == 0.0) continue;
        const std::uint64_t t = (s & ~pair) | (std::uint64_t((lb >> 1) & 1) << (j - 1)) |
                                (std::uint64_t(lb & 1) << j);
        if (pos[t] < 0) throw NumericalError("tensor_sector_matrix: block leaves the parity sector");
        out(pos[t], a) += blk(lb, la);
      }
    }
  }
  return out;
}

std::uint64_t spins_from_bonds(std::uint64_t bonds, std::size_t n_sites) {
  std::uint64_t spins = 0;
  for (std::size_t j = 0; j + 1 < n_sites; ++j) {
    const std::uint64_t next = ((spins >> j) ^ (bonds >> j)) & 1u;
    spins |= next << (j + 1);
  }
  return spins;
}

std::uint64_t bonds_from_spins(std::uint64_t spins, std::size_t n_sites) {
  std::uint64_t bonds = 0;
  for (std::size_t j = 0; j < n_sites; ++j) {
    const std::uint64_t b = ((spins >> j) ^ (spins >> ((j + 1) % n_sites))) & 1u;
    bonds |= b << j;
  }
  return bonds;
}

namespace {

SectorBasis make_basis(const GibbsModel& model) {
  SectorBasis b;
  b.hilbert_dim = model.dim();
  const DVecR w = model.weights();
  b.metric.resize(model.dim() * model.dim());
  for (Index j = 0; j < model.dim(); ++j) b.metric.segment(j * model.dim(), model.dim()).setConstant(w[j]);
  return b;
}

}  // namespace

SectorBasis lambda_sector_basis(const GibbsModel& ising, const LambdaSector& sector) {
  const std::size_t n = sector.n_bonds();
  const Index d = ising.dim();
  if (d != (Index{1} << n)) throw InvalidArgument("lambda_sector_basis: model size does not match the bonds");
  if (ising.basis == BasisKind::eigenbasis) throw InvalidArgument("lambda_sector_basis: needs the spin basis");
  SectorBasis b = make_basis(ising);
  const DVecR w = ising.weights();
  std::vector<Triplet> t;
  for (std::uint64_t ket = 0; ket < (std::uint64_t{1} << n); ++ket) {
    if (std::popcount(ket) % 2 != 0) continue;
    const std::uint64_t bra = ket ^ sector.flip_mask();
    const auto ks = static_cast<Index>(spins_from_bonds(ket, n));
    const auto bs = static_cast<Index>(spins_from_bonds(bra, n));
    t.emplace_back(ks + d * bs, static_cast<Index>(b.labels.size()), 1.0 / std::sqrt(w[bs]));
    b.labels.push_back(ket);
  }
  b.vectors.resize(d * d, static_cast<Index>(b.labels.size()));
  b.vectors.setFromTriplets(t.begin(), t.end());
  return b;
}

SectorBasis syndrome_sector_basis(const GibbsModel& model) {
  if (!model.stabilizer) throw InvalidArgument("syndrome_sector_basis: needs a frame model");
  const std::uint64_t lm = model.stabilizer->logical_mask;
  const Index d = model.dim();
  SectorBasis b = make_basis(model);
  const DVecR w = model.weights();
  std::vector<std::uint64_t> labels;
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(d); ++s) {
    if (!(s & lm)) labels.push_back(s);
  }
  std::vector<Triplet> t;
  for (std::uint64_t bra : labels) {
    for (std::uint64_t ket : labels) {
      const Index col = static_cast<Index>(b.labels.size());
      t.emplace_back(static_cast<Index>(ket) + d * static_cast<Index>(bra), col, 1.0 / std::sqrt(w[bra]));
      b.labels.push_back(ket | (bra << 32));
    }
  }
  b.vectors.resize(d * d, static_cast<Index>(b.labels.size()));
  b.vectors.setFromTriplets(t.begin(), t.end());
  return b;
}

SectorBasis logical_sector_basis(const GibbsModel& toric, SectorLabel label) {
  if (!toric.stabilizer || toric.stabilizer->kind != StabilizerModel::Kind::toric) {
    throw InvalidArgument("logical_sector_basis: needs a torus frame model");
  }
  const StabilizerModel& m = *toric.stabilizer;
  const std::size_t n = m.num_qubits();
  const Index d = toric.dim();
  const std::uint64_t lm = m.logical_mask;
  SectorBasis b = make_basis(toric);
  const DVecR w = toric.weights();
  std::vector<std::uint64_t> syn;
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(d); ++s) {
    if (!(s & lm)) syn.push_back(s);
  }
  std::vector<Triplet> t;
  for (std::uint64_t bra : syn) {
    for (std::uint64_t ket : syn) {
      const Index col = static_cast<Index>(b.labels.size());
      std::vector<std::pair<Index, cplx>> entries;
      double norm2 = 0.0;
      for (std::uint64_t l = 0; l < 4; ++l) {
        auto [f1, c1] = tag_action(label.b1, l & 1u);
        auto [f2, c2] = tag_action(label.b2, (l >> 1) & 1u);
        const std::uint64_t lt = l ^ (f1 | (f2 << 1));
        const std::uint64_t k = ket | (lt << (n - 2));
        const std::uint64_t br = bra | (l << (n - 2));
        entries.emplace_back(static_cast<Index>(k) + d * static_cast<Index>(br), c1 * c2);
        norm2 += w[static_cast<Index>(br)];
      }
      for (auto& [row, v] : entries) t.emplace_back(row, col, v / std::sqrt(norm2));
      b.labels.push_back(ket | (bra << 32));
    }
  }
  b.vectors.resize(d * d, static_cast<Index>(b.labels.size()));
  b.vectors.setFromTriplets(t.begin(), t.end());
  return b;
}

Restriction restrict_superoperator(const Superoperator& l, const SectorBasis& basis, double invariant_tol) {
  if (basis.vectors.rows() != l.op_dim()) throw InvalidArgument("restrict_superoperator: dimension mismatch");
  const SpMat lv = l.matrix * basis.vectors;
  SpMat wv = basis.vectors;
  for (Index c = 0; c < wv.outerSize(); ++c) {
    for (SpMat::InnerIterator it(wv, c); it; ++it) it.valueRef() *= basis.metric[it.row()];
  }
  Restriction r;
  r.matrix = SpMat(wv.adjoint() * lv);
  r.matrix.prune(cplx(0.0, 0.0), 0.0);
  const SpMat z = lv - basis.vectors * r.matrix;
  for (Index c = 0; c < z.outerSize(); ++c) {
    double s = 0.0;
    for (SpMat::InnerIterator it(z, c); it; ++it) s += basis.metric[it.row()] * std::norm(it.value());
    r.leakage = std::max(r.leakage, std::sqrt(s));
  }
  if (invariant_tol >= 0.0 && r.leakage > invariant_tol) {
    throw NumericalError("restrict_superoperator: sector is not invariant (leakage " + std::to_string(r.leakage) + ")");
  }
  return r;
}

DiagonalSector diagonal_sector_generator(const GibbsModel& model, const std::vector<PauliString>& couplings) {
  if (!model.stabilizer) throw InvalidArgument("diagonal_sector_generator: needs a frame model");
  const StabilizerModel& m = *model.stabilizer;
  std::vector<std::uint64_t> flips;
  for (const auto& p : couplings) flips.push_back(m.frame.action(p).flip);
  DiagonalSector out;
  out.logical_fixed = std::none_of(flips.begin(), flips.end(), [&m](std::uint64_t f) { return f & m.logical_mask; });
  const auto d = static_cast<std::uint64_t>(model.dim());
  std::vector<Index> pos(d, -1);
  for (std::uint64_t s = 0; s < d; ++s) {
    if (out.logical_fixed && (s & m.logical_mask)) continue;
    pos[s] = static_cast<Index>(out.labels.size());
    out.labels.push_back(s);
  }
  const double beta = model.beta;
  std::vector<TripletR> t;
  t.reserve(out.labels.size() * (flips.size() + 1));
  for (std::size_t c = 0; c < out.labels.size(); ++c) {
    const std::uint64_t s = out.labels[c];
    double diag = 0.0;
    for (std::uint64_t f : flips) {
      if (f == 0) continue;
      const double omega = m.transition_energy(s, f);
      diag -= glauber_rate(omega, beta);
      // gamma(omega) exp(-beta omega / 2) = 1 / cosh(beta omega / 2)
      const double x = 0.5 * std::abs(beta * omega);
      t.emplace_back(pos[s ^ f], static_cast<Index>(c), 2.0 * std::exp(-x) / (1.0 + std::exp(-2.0 * x)));
    }
    t.emplace_back(static_cast<Index>(c), static_cast<Index>(c), diag);
  }
  const auto k = static_cast<Index>(out.labels.size());
  out.generator.resize(k, k);
  out.generator.setFromTriplets(t.begin(), t.end());
  return out;
}

DVecR diagonal_sector_kernel(const GibbsModel& model, const DiagonalSector& sector) {
  const DVecR lw = model.log_weights();
  DVecR v(static_cast<Index>(sector.labels.size()));
  for (std::size_t i = 0; i < sector.labels.size(); ++i) v[static_cast<Index>(i)] = 0.5 * lw[static_cast<Index>(sector.labels[i])];
  v = (v.array() - v.maxCoeff()).exp();
  return v / v.norm();
}

SectorBasis diagonal_sector_basis(const GibbsModel& model, const DiagonalSector& sector) {
  const Index d = model.dim();
  if (d > 4096) throw InvalidArgument("diagonal_sector_basis: operator space too large");
  SectorBasis b = make_basis(model);
  const DVecR w = model.weights();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < sector.labels.size(); ++i) {
    const auto s = static_cast<Index>(sector.labels[i]);
    t.emplace_back(s + d * s, static_cast<Index>(i), 1.0 / std::sqrt(w[s]));
  }
  b.labels = sector.labels;
  b.vectors.resize(d * d, static_cast<Index>(sector.labels.size()));
  b.vectors.setFromTriplets(t.begin(), t.end());
  return b;
}

Index abelian_vec_index(Index state, Index hilbert_dim) {
  if (state < 0 || state >= hilbert_dim) throw InvalidArgument("abelian_vec_index: state out of range");
  return state + hilbert_dim * state;
}

std::optional<Index> abelian_state(Index vec_index, Index hilbert_dim) {
  const Index i = vec_index % hilbert_dim, j = vec_index / hilbert_dim;
  if (i != j || j >= hilbert_dim || vec_index < 0) return std::nullopt;
  return i;
}

}  // namespace stabgibbs

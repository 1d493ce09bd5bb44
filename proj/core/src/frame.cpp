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


#include "stabgibbs/frame.hpp"

#include <bit>

#include "stabgibbs/ground_states.hpp"

namespace stabgibbs {

cplx FrameAction::coeff(std::uint64_t s) const {
  return (std::popcount(sign & (s ^ flip)) & 1) ? -phase : phase;
}

StabilizerFrame::StabilizerFrame(std::vector<PauliString> generators,
                                 std::vector<PauliString> destabilizers, DVec reference)
    : gens_(std::move(generators)), destabs_(std::move(destabilizers)), ref_(std::move(reference)) {
  const std::size_t n = gens_.size();
  if (n == 0 || n > 63) throw InvalidArgument("StabilizerFrame: need 1..63 generators");
  if (destabs_.size() != n) throw InvalidArgument("StabilizerFrame: one destabilizer per generator");
  for (std::size_t i = 0; i < n; ++i) {
    if (gens_[i].num_qubits() != n || destabs_[i].num_qubits() != n) {
      throw InvalidArgument("StabilizerFrame: generator count must equal qubit count");
    }
    if (!gens_[i].hermitian() || !destabs_[i].hermitian()) {
      throw InvalidArgument("StabilizerFrame: generators must be hermitian");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j && (!gens_[i].commutes(gens_[j]) || !destabs_[i].commutes(destabs_[j]))) {
        throw InvalidArgument("StabilizerFrame: generators or destabilizers do not commute");
      }
      if (gens_[i].commutes(destabs_[j]) != (i != j)) {
        throw InvalidArgument("StabilizerFrame: destabilizer pairing is broken");
      }
    }
  }
  if (ref_.size() != 0 && ref_.size() != (Index{1} << n)) {
    throw InvalidArgument("StabilizerFrame: reference has the wrong dimension");
  }
}

FrameAction StabilizerFrame::action(const PauliString& p) const {
  const std::size_t n = gens_.size();
  FrameAction act;
  PauliString q = PauliString::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!p.commutes(destabs_[k])) {
      act.sign |= std::uint64_t{1} << k;
      q *= gens_[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!p.commutes(gens_[k])) {
      act.flip |= std::uint64_t{1} << k;
      q *= destabs_[k];
    }
  }
  // p = c q with matching letters.
  PauliString probe = q;
  probe.mul_phase(p.phase() - q.phase());
  if (probe != p) throw NumericalError("StabilizerFrame::action: frame is incomplete");
  act.phase = ipow(p.phase() - q.phase());
  return act;
}

DVec StabilizerFrame::basis_vector(std::uint64_t s) const {
  if (ref_.size() == 0) throw InvalidArgument("StabilizerFrame: no reference state stored");
  DVec v = ref_;
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if ((s >> k) & 1u) v = apply_pauli(destabs_[k], v);
  }
  return v;
}

DMat StabilizerFrame::basis_matrix() const {
  const std::size_t n = gens_.size();
  if (n > 12) throw InvalidArgument("StabilizerFrame::basis_matrix: too many qubits");
  if (ref_.size() == 0) throw InvalidArgument("StabilizerFrame: no reference state stored");
  const Index dim = Index{1} << n;
  DMat u(dim, dim);
  u.col(0) = ref_;
  for (Index s = 1; s < dim; ++s) {
    const int top = std::bit_width(static_cast<std::uint64_t>(s)) - 1;
    u.col(s) = apply_pauli(destabs_[top], u.col(s ^ (Index{1} << top)));
  }
  return u;
}

double StabilizerModel::energy(std::uint64_t s) const {
  double e = 0.0;
  for (std::size_t t = 0; t < term_masks.size(); ++t) {
    e += (std::popcount(term_masks[t] & s) & 1) ? -term_weights[t] : term_weights[t];
  }
  return e;
}

DVecR StabilizerModel::energies() const {
  const Index d = dim();
  DVecR e(d);
  for (Index s = 0; s < d; ++s) e[s] = energy(static_cast<std::uint64_t>(s));
  return e;
}

double StabilizerModel::transition_energy(std::uint64_t s, std::uint64_t flip) const {
  double w = 0.0;
  for (std::size_t t = 0; t < term_masks.size(); ++t) {
    if (!(std::popcount(term_masks[t] & flip) & 1)) continue;
    const double before = (std::popcount(term_masks[t] & s) & 1) ? -term_weights[t] : term_weights[t];
    w -= 2.0 * before;
  }
  return w;
}

namespace {

void attach_terms(StabilizerModel& m) {
  for (const auto& t : m.hamiltonian.terms) {
    const FrameAction a = m.frame.action(t.pauli);
    if (a.flip != 0) throw InvalidArgument("StabilizerModel: term is not diagonal in the frame");
    m.term_masks.push_back(a.sign);
    m.term_weights.push_back(t.coefficient * a.phase.real());
  }
}

}  // namespace

StabilizerModel make_ising_model(const RingLattice& lattice) {
  StabilizerModel m;
  m.kind = StabilizerModel::Kind::ising;
  m.ring = lattice;
  m.hamiltonian = ising_terms(lattice);
  const std::size_t n = lattice.n_sites;
  std::vector<PauliString> g, d;
  for (std::size_t k = 0; k < n; ++k) {
    g.push_back(PauliString::single(n, k, 'Z'));
    d.push_back(PauliString::single(n, k, 'X'));
  }
  DVec ref;
  if (n <= 20) {
    ref = DVec::Zero(Index{1} << n);
    ref[0] = 1.0;
  }
  m.frame = StabilizerFrame(std::move(g), std::move(d), std::move(ref));
  m.logical_mask = 1;
  attach_terms(m);
  return m;
}

StabilizerModel make_toric_model(const TorusLattice& lattice) {
  StabilizerModel m;
  m.kind = StabilizerModel::Kind::toric;
  m.torus = lattice;
  m.hamiltonian = toric_terms(lattice);
  const std::size_t n = lattice.num_qubits();
  const std::size_t cells = lattice.num_plaquettes();
  std::vector<PauliString> g, d;

  // Plaquettes along the snake; the destabilizer walks the snake from its head.
  const auto& snake = lattice.snake_order();
  PauliString walk = PauliString::identity(n);
  for (std::size_t pos = 1; pos < cells; ++pos) {
    walk *= PauliString::single(n, snake[pos - 1].spin, 'X');
    g.push_back(plaquette_operator(lattice, lattice.snake_cells()[pos]));
    d.push_back(walk);
  }
  // Stars other than star 0; the destabilizer follows the comb from star 0.
  for (std::size_t s = 1; s < lattice.num_stars(); ++s) {
    g.push_back(star_operator(lattice, s));
    d.push_back(PauliString::on(n, lattice.comb_path(0, s), 'Z'));
  }
  const LogicalOperators logic = logical_operators(lattice);
  g.push_back(logic.zbar1);
  d.push_back(logic.xbar1);
  g.push_back(logic.zbar2);
  d.push_back(logic.xbar2);

  DVec ref;
  if (lattice.side() <= 3) ref = ground_state(lattice, GroundLabel::o);
  m.frame = StabilizerFrame(std::move(g), std::move(d), std::move(ref));
  m.logical_mask = (std::uint64_t{1} << (n - 2)) | (std::uint64_t{1} << (n - 1));
  attach_terms(m);
  return m;
}

}  // namespace stabgibbs

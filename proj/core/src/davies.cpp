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


#include "stabgibbs/davies.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace stabgibbs {

const char* gauge_name(Gauge g) {
  switch (g) {
    case Gauge::lindblad_heisenberg: return "lindblad_heisenberg";
    case Gauge::lindblad_schrodinger: return "lindblad_schrodinger";
    default: return "master_hamiltonian";
  }
}

DVec vectorize(const DMat& x) { return Eigen::Map<const DVec>(x.data(), x.size()); }

DMat unvectorize(const DVec& v, Index d) {
  if (v.size() != d * d) throw InvalidArgument("unvectorize: size mismatch");
  return Eigen::Map<const DMat>(v.data(), d, d);
}

DMat Superoperator::apply(const DMat& x) const {
  if (x.rows() != hilbert_dim || x.cols() != hilbert_dim) throw InvalidArgument("Superoperator::apply: shape");
  return unvectorize(matrix * vectorize(x), hilbert_dim);
}

namespace {

Superoperator davies_frame(const GibbsModel& model, const std::vector<PauliString>& couplings) {
  const StabilizerModel& sm = *model.stabilizer;
  const Index d = model.dim();
  const double tol = 1e-9 * std::max(1.0, sm.hamiltonian.norm_bound());
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(d * d) * (couplings.size() + 1));
  DVecR diag = DVecR::Zero(d * d);
  std::vector<double> omega(static_cast<std::size_t>(d)), rate(static_cast<std::size_t>(d));
  std::vector<cplx> phi(static_cast<std::size_t>(d));
  for (const auto& p : couplings) {
    if (p.num_qubits() != sm.num_qubits()) throw InvalidArgument("davies_lindbladian: coupling size mismatch");
    const FrameAction a = sm.frame.action(p);
    for (Index s = 0; s < d; ++s) {
      const auto u = static_cast<std::uint64_t>(s);
      omega[u] = sm.transition_energy(u, a.flip);
      rate[u] = glauber_rate(omega[u], model.beta);
      phi[u] = a.coeff(u);
    }
    for (Index l = 0; l < d; ++l) {
      const auto lb = static_cast<std::uint64_t>(l) ^ a.flip;
      for (Index k = 0; k < d; ++k) {
        const auto kb = static_cast<std::uint64_t>(k) ^ a.flip;
        diag[k + d * l] -= 0.5 * (rate[k] + rate[l]);
        if (std::abs(omega[kb] - omega[lb]) >= tol) continue;
        t.emplace_back(static_cast<Index>(kb) + d * static_cast<Index>(lb), k + d * l,
                       rate[kb] * std::conj(phi[kb]) * phi[lb]);
      }
    }
  }
  for (Index i = 0; i < d * d; ++i) t.emplace_back(i, i, diag[i]);
  SpMat m(d * d, d * d);
  m.setFromTriplets(t.begin(), t.end());
  return {d, SparseOperator(std::move(m)).matrix(), Gauge::lindblad_heisenberg, BasisKind::stabilizer_frame};
}

}  // namespace

Superoperator davies_from_components(const std::vector<std::vector<BohrComponent>>& components, double beta,
                                     Index hilbert_dim, BasisKind basis) {
  const Index d = hilbert_dim;
  SpMat id(d, d);
  id.setIdentity();
  SpMat acc(d * d, d * d);
  for (const auto& comps : components) {
    for (const auto& c : comps) {
      if (c.jump.dim() != d) throw InvalidArgument("davies_from_components: dimension mismatch");
      const double g = glauber_rate(c.omega, beta);
      const SpMat s = c.jump.matrix();
      const SpMat sd = s.adjoint();
      const SpMat sds = sd * s;
      const SpMat st = s.transpose();
      const SpMat sdst = sds.transpose();
      SpMat term = Eigen::kroneckerProduct(st, sd).eval();
      term -= 0.5 * SpMat(Eigen::kroneckerProduct(id, sds).eval());
      term -= 0.5 * SpMat(Eigen::kroneckerProduct(sdst, id).eval());
      acc += g * term;
    }
  }
  return {d, SparseOperator(std::move(acc)).matrix(), Gauge::lindblad_heisenberg, basis};
}

Superoperator davies_lindbladian(const GibbsModel& model, const std::vector<PauliString>& couplings) {
  if (model.basis == BasisKind::stabilizer_frame) return davies_frame(model, couplings);
  if (model.dim() > 256) throw InvalidArgument("davies_lindbladian: generic path limited to dim 256");
  const Eigensystem eig = eigensystem(model.hamiltonian);
  std::vector<std::vector<BohrComponent>> all;
  for (const auto& p : couplings) {
    auto comps = bohr_decompose_generic(eig, SparseOperator::from_pauli(p));
    if (model.basis == BasisKind::eigenbasis) {
      for (auto& c : comps) c.jump = SparseOperator::from_dense(model.to_working_basis(c.jump.to_dense()), 1e-14);
    }
    all.push_back(std::move(comps));
  }
  return davies_from_components(all, model.beta, model.dim(), model.basis);
}

Superoperator davies_lindbladian_oracle(const GibbsModel& model, const std::vector<PauliString>& couplings) {
  if (model.hamiltonian.dim() == 0 || model.dim() > 256) {
    throw InvalidArgument("davies_lindbladian_oracle: needs a stored hamiltonian with dim <= 256");
  }
  const Eigensystem eig = eigensystem(model.hamiltonian);
  std::vector<std::vector<BohrComponent>> all;
  for (const auto& p : couplings) {
    auto comps = bohr_decompose_generic(eig, SparseOperator::from_pauli(p));
    if (model.basis != BasisKind::computational) {
      for (auto& c : comps) c.jump = SparseOperator::from_dense(model.to_working_basis(c.jump.to_dense()), 1e-13);
    }
    all.push_back(std::move(comps));
  }
  return davies_from_components(all, model.beta, model.dim(), model.basis);
}

Superoperator dephasing_lindbladian(const GibbsModel& model, const PauliString& o) {
  if (!o.hermitian()) throw InvalidArgument("dephasing_lindbladian: operator must be hermitian");
  if (model.stabilizer) {
    for (const auto& t : model.stabilizer->hamiltonian.terms) {
      if (!t.pauli.commutes(o)) throw InvalidArgument("dephasing_lindbladian: operator does not commute with H");
    }
  } else {
    const SpMat h = model.hamiltonian.matrix();
    const SpMat om = o.to_sparse();
    const SpMat comm = om * h - h * om;
    if (SparseOperator(comm).max_abs() > 1e-12 * std::max(1.0, model.hamiltonian.max_abs())) {
      throw InvalidArgument("dephasing_lindbladian: operator does not commute with H");
    }
  }
  std::vector<std::vector<BohrComponent>> one{{{0.0, model.operator_in_basis(o)}}};
  return davies_from_components(one, model.beta, model.dim(), model.basis);
}

Superoperator schrodinger_adjoint(const Superoperator& l) {
  Superoperator out = l;
  out.matrix = SpMat(l.matrix.adjoint());
  if (l.gauge == Gauge::lindblad_heisenberg) out.gauge = Gauge::lindblad_schrodinger;
  else if (l.gauge == Gauge::lindblad_schrodinger) out.gauge = Gauge::lindblad_heisenberg;
  return out;
}

double hermiticity_defect(const Superoperator& m) {
  const double scale = SparseOperator(m.matrix).max_abs();
  if (scale == 0.0) return 0.0;
  return max_abs_diff(m.matrix, SpMat(m.matrix.adjoint())) / scale;
}

Superoperator master_hamiltonian(const Superoperator& l, const GibbsModel& model, double rel_tol) {
  if (l.gauge != Gauge::lindblad_heisenberg) throw InvalidArgument("master_hamiltonian: expects the Heisenberg gauge");
  const Index d = l.hilbert_dim;
  if (d != model.dim()) throw InvalidArgument("master_hamiltonian: dimension mismatch");
  Superoperator m = l;
  m.gauge = Gauge::master_hamiltonian;
  for (Index c = 0; c < m.matrix.outerSize(); ++c) {
    const Index bra_col = c / d;
    for (SpMat::InnerIterator it(m.matrix, c); it; ++it) {
      const Index bra_row = it.row() / d;
      it.valueRef() *= std::exp(-0.5 * model.beta * (model.energies[bra_row] - model.energies[bra_col]));
    }
  }
  if (hermiticity_defect(m) > rel_tol) {
    throw NumericalError("master_hamiltonian: generator violates detailed balance");
  }
  return m;
}

double stationarity_defect(const Superoperator& l, const GibbsModel& model) {
  const DVec sigma = vectorize(DMat(model.weights().cast<cplx>().asDiagonal()));
  const DVec out = l.matrix.adjoint() * sigma;
  return out.norm() / sigma.norm();
}

double unitality_defect(const Superoperator& l) {
  const DVec id = vectorize(DMat::Identity(l.hilbert_dim, l.hilbert_dim));
  return (l.matrix * id).norm();
}

DVec master_kernel_vector(const GibbsModel& model) {
  const Index d = model.dim();
  const DVecR lw = model.log_weights();
  DVec v = DVec::Zero(d * d);
  for (Index i = 0; i < d; ++i) v[i + d * i] = std::exp(0.5 * lw[i]);
  return v / v.norm();
}

Superoperator sum(const std::vector<Superoperator>& parts) {
  if (parts.empty()) throw InvalidArgument("sum: no superoperators");
  Superoperator out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].gauge != out.gauge || parts[i].basis != out.basis || parts[i].op_dim() != out.op_dim()) {
      throw InvalidArgument("sum: incompatible superoperators");
    }
    out.matrix += parts[i].matrix;
  }
  out.matrix = SparseOperator(out.matrix).matrix();
  return out;
}

}  // namespace stabgibbs

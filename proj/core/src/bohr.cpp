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


#include "stabgibbs/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace stabgibbs {

namespace {

// Groups sorted values into clusters of neighbours closer than tol.
std::vector<std::size_t> cluster_starts(const std::vector<double>& sorted, double tol, const char* what) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] - sorted[i - 1] >= tol) {
      starts.push_back(i);
    } else if (sorted[i] - sorted[starts.back()] >= tol) {
      throw NumericalError(std::string("ambiguous clustering of ") + what);
    }
  }
  return starts;
}

std::vector<BohrComponent> group_by_omega(std::vector<std::pair<double, SpMat>> pieces, double tol) {
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BohrComponent> out;
  for (auto& [w, m] : pieces) {
    if (!out.empty() && std::abs(out.back().omega - w) < tol) {
      out.back().jump = SparseOperator(SpMat(out.back().jump.matrix() + m));
    } else {
      out.push_back({w, SparseOperator(std::move(m))});
    }
  }
  std::erase_if(out, [](const BohrComponent& c) { return c.jump.nnz() == 0; });
  return out;
}

}  // namespace

Eigensystem eigensystem(const SparseOperator& hamiltonian, double tol_scale) {
  if (hamiltonian.dim() > 256) throw InvalidArgument("eigensystem: dense oracle limited to dim 256");
  Eigen::SelfAdjointEigenSolver<DMat> es(hamiltonian.to_dense());
  Eigensystem eig;
  eig.values = es.eigenvalues();
  eig.vectors = es.eigenvectors();
  eig.tolerance = tol_scale * std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  std::vector<double> v(eig.values.data(), eig.values.data() + eig.values.size());
  for (std::size_t s : cluster_starts(v, eig.tolerance, "eigenvalues")) {
    eig.level_start.push_back(static_cast<Index>(s));
    eig.level_energy.push_back(v[s]);
  }
  return eig;
}

std::vector<BohrComponent> bohr_decompose_generic(const SparseOperator& hamiltonian,
                                                  const SparseOperator& coupling, double tol_scale) {
  return bohr_decompose_generic(eigensystem(hamiltonian, tol_scale), coupling);
}

std::vector<BohrComponent> bohr_decompose_generic(const Eigensystem& eig, const SparseOperator& coupling) {
  const Index d = eig.values.size();
  if (coupling.dim() != d) throw InvalidArgument("bohr_decompose_generic: dimension mismatch");
  const std::size_t nl = eig.level_start.size();
  auto level_end = [&](std::size_t k) { return k + 1 < nl ? eig.level_start[k + 1] : d; };

  struct Pair { double omega; std::size_t to, from; };
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < nl; ++a) {
    for (std::size_t b = 0; b < nl; ++b) pairs.push_back({eig.level_energy[a] - eig.level_energy[b], a, b});
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.omega < y.omega; });
  std::vector<double> omegas;
  for (const auto& p : pairs) omegas.push_back(p.omega);
  const auto starts = cluster_starts(omegas, eig.tolerance, "Bohr frequencies");

  const DMat t = eig.vectors.adjoint() * coupling.to_dense() * eig.vectors;
  const double drop = 1e-14 * std::max(1.0, t.cwiseAbs().maxCoeff());
  std::vector<BohrComponent> out;
  for (std::size_t c = 0; c < starts.size(); ++c) {
    const std::size_t end = c + 1 < starts.size() ? starts[c + 1] : pairs.size();
    DMat masked = DMat::Zero(d, d);
    double mean = 0.0;
    for (std::size_t i = starts[c]; i < end; ++i) {
      const auto& p = pairs[i];
      const Index r0 = eig.level_start[p.to], c0 = eig.level_start[p.from];
      masked.block(r0, c0, level_end(p.to) - r0, level_end(p.from) - c0) =
          t.block(r0, c0, level_end(p.to) - r0, level_end(p.from) - c0);
      mean += p.omega;
    }
    if (masked.cwiseAbs().maxCoeff() <= drop) continue;
    mean /= static_cast<double>(end - starts[c]);
    out.push_back({mean, SparseOperator::from_dense(eig.vectors * masked * eig.vectors.adjoint(), drop)});
  }
  return out;
}

std::vector<BohrComponent> bohr_decompose_stabilizer(const PauliSum& hamiltonian, const PauliString& coupling) {
  std::vector<std::size_t> anti;
  for (std::size_t t = 0; t < hamiltonian.terms.size(); ++t) {
    if (!hamiltonian.terms[t].pauli.commutes(coupling)) anti.push_back(t);
  }
  if (anti.size() > 8) throw InvalidArgument("bohr_decompose_stabilizer: coupling anticommutes with > 8 terms");
  const Index dim = Index{1} << hamiltonian.n_qubits;
  SpMat id(dim, dim);
  id.setIdentity();
  const SpMat p = coupling.to_sparse();
  std::vector<SpMat> term_mats;
  for (std::size_t t : anti) term_mats.push_back(hamiltonian.terms[t].pauli.to_sparse());

  std::vector<std::pair<double, SpMat>> pieces;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << anti.size()); ++mask) {
    SpMat proj = id;
    double omega = 0.0;
    for (std::size_t k = 0; k < anti.size(); ++k) {
      const double c = ((mask >> k) & 1u) ? -1.0 : 1.0;
      proj = SpMat(0.5 * (id + c * term_mats[k]) * proj);
      omega -= 2.0 * hamiltonian.terms[anti[k]].coefficient * c;
    }
    proj.prune(cplx(0.0, 0.0), 0.0);
    if (proj.nonZeros() == 0) continue;
    pieces.emplace_back(omega, SpMat(p * proj));
  }
  return group_by_omega(std::move(pieces), 1e-9 * std::max(1.0, hamiltonian.norm_bound()));
}

std::vector<BohrComponent> bohr_decompose_frame(const StabilizerModel& model, const PauliString& coupling) {
  const FrameAction a = model.frame.action(coupling);
  const Index d = model.dim();
  std::map<double, std::vector<Triplet>> by_omega;
  for (Index s = 0; s < d; ++s) {
    const auto u = static_cast<std::uint64_t>(s);
    by_omega[model.transition_energy(u, a.flip)].emplace_back(static_cast<Index>(u ^ a.flip), s, a.coeff(u));
  }
  std::vector<std::pair<double, SpMat>> pieces;
  for (auto& [w, t] : by_omega) {
    SpMat m(d, d);
    m.setFromTriplets(t.begin(), t.end());
    pieces.emplace_back(w, std::move(m));
  }
  return group_by_omega(std::move(pieces), 1e-9 * std::max(1.0, model.hamiltonian.norm_bound()));
}

double component_mismatch(const std::vector<BohrComponent>& a, const std::vector<BohrComponent>& b,
                          double omega_tol) {
  double worst = 0.0;
  std::vector<bool> used(b.size(), false);
  for (const auto& ca : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && std::abs(b[j].omega - ca.omega) < omega_tol) {
        worst = std::max(worst, max_abs_diff(ca.jump.matrix(), b[j].jump.matrix()));
        used[j] = found = true;
        break;
      }
    }
    if (!found) worst = std::max(worst, ca.jump.max_abs());
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!used[j]) worst = std::max(worst, b[j].jump.max_abs());
  }
  return worst;
}

SparseOperator sum_components(const std::vector<BohrComponent>& comps) {
  if (comps.empty()) throw InvalidArgument("sum_components: empty list");
  SpMat acc = comps.front().jump.matrix();
  for (std::size_t i = 1; i < comps.size(); ++i) acc += comps[i].jump.matrix();
  return SparseOperator(std::move(acc));
}

}  // namespace stabgibbs

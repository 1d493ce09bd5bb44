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


#include "stabgibbs/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

#include "stabgibbs/spectral.hpp"

namespace stabgibbs {

void DensityState::validate(double tol) const {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) throw InvalidArgument("DensityState: not square");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tol) throw InvalidArgument("DensityState: not hermitian");
  if (std::abs(matrix.trace() - cplx(1.0, 0.0)) > tol) throw InvalidArgument("DensityState: trace is not one");
  if (min_eigenvalue() < -100.0 * tol) throw InvalidArgument("DensityState: negative eigenvalue");
}

double DensityState::min_eigenvalue() const {
  const DMat h = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<DMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

DensityState DensityState::maximally_mixed(Index dim) {
  return DensityState(DMat::Identity(dim, dim) / static_cast<double>(dim));
}

DensityState DensityState::pure(const DVec& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw InvalidArgument("DensityState::pure: zero vector");
  const DVec u = psi / n;
  return DensityState(u * u.adjoint());
}

DensityState DensityState::basis_state(Index dim, Index k) {
  if (k < 0 || k >= dim) throw InvalidArgument("DensityState::basis_state: index out of range");
  DMat m = DMat::Zero(dim, dim);
  m(k, k) = 1.0;
  return DensityState(std::move(m));
}

namespace {

DMat gaussian_matrix(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  DMat m(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) m(r, c) = cplx(g(rng), g(rng));
  }
  return m;
}

}  // namespace

DensityState random_pure_state(Index dim, std::mt19937_64& rng) {
  const DMat g = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<DMat> qr(g);
  const DMat q = qr.householderQ();
  return DensityState::pure(q.col(0));
}

DensityState random_mixed_state(Index dim, Index rank, std::mt19937_64& rng) {
  if (rank < 1 || rank > dim) throw InvalidArgument("random_mixed_state: rank out of range");
  const DMat g = gaussian_matrix(dim, rank, rng);
  DMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityState(std::move(rho));
}

DensityState gibbs_density(const GibbsModel& model) {
  return DensityState(DMat(model.weights().cast<cplx>().asDiagonal()));
}

DensityState ground_space_state(const GibbsModel& model, double tol) {
  const double e0 = model.energies.minCoeff();
  DVecR p = (model.energies.array() <= e0 + tol).cast<double>();
  p /= p.sum();
  return DensityState(DMat(p.cast<cplx>().asDiagonal()));
}

Evolver::Evolver(Superoperator l, EvolveOptions opt) : l_(std::move(l)), opt_(opt) {
  if (l_.gauge != Gauge::lindblad_schrodinger) throw InvalidArgument("Evolver: needs a Schroedinger-picture generator");
}

DVec Evolver::krylov(const DVec& v, double t) const {
  const Index n = v.size();
  const Index m = std::max<Index>(2, std::min(opt_.krylov_dim, n));
  const double lnorm = std::max(norm_bound(l_.matrix), 1e-300);
  DVec w = v;
  double done = 0.0, tau = t, worst = 0.0;
  DMat basis(n, m + 1);
  while (done < t) {
    tau = std::min(tau, t - done);
    const double beta = w.norm();
    if (beta == 0.0) break;
    DMat h = DMat::Zero(m + 1, m);
    basis.col(0) = w / beta;
    Index k = m;
    bool breakdown = false;
    for (Index j = 0; j < m; ++j) {
      DVec u = l_.matrix * basis.col(j);
      for (int pass = 0; pass < 2; ++pass) {
        const DVec c = basis.leftCols(j + 1).adjoint() * u;
        h.col(j).head(j + 1) += c;
        u -= basis.leftCols(j + 1) * c;
      }
      const double hn = u.norm();
      h(j + 1, j) = hn;
      if (hn <= 1e-13 * lnorm) {
        k = j + 1;
        breakdown = true;
        break;
      }
      basis.col(j + 1) = u / hn;
    }
    DMat f;
    double err = 0.0;
    for (;;) {
      const DMat hk = h.topLeftCorner(k, k) * tau;
      f = hk.exp();
      err = breakdown ? 0.0 : beta * std::abs(h(k, k - 1)) * tau * std::abs(f(k - 1, 0));
      if (err <= opt_.tol * beta * std::max(tau / t, 1e-3)) break;
      tau *= 0.5;
      if (tau < 1e-13 * t) {
        throw NumericalError("krylov: step control failed, achieved error " + std::to_string(err));
      }
    }
    worst = std::max(worst, err);
    w = beta * (basis.leftCols(k) * f.col(0));
    done += tau;
    if (err < 0.05 * opt_.tol * beta) tau *= 2.0;
  }
  last_error_ = worst;
  return w;
}

DensityState Evolver::operator()(const DensityState& rho, double t) const {
  if (!(t >= 0.0)) throw InvalidArgument("evolve: t must be >= 0");
  if (rho.dim() != l_.hilbert_dim) throw InvalidArgument("evolve: state dimension does not match the generator");
  if (t == 0.0) return rho;
  const DVec v = vectorize(rho.matrix);
  DVec out;
  if (l_.op_dim() <= opt_.dense_limit) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.lower_bound(t * (1.0 - 1e-13));
    if (it == cache_.end() || it->first > t * (1.0 + 1e-13)) {
      const DMat gen = DMat(l_.matrix) * t;
      it = cache_.emplace(t, gen.exp()).first;
      if (cache_.size() > 16) cache_.erase(cache_.begin() == it ? std::next(cache_.begin()) : cache_.begin());
    }
    out = it->second * v;
  } else {
    std::lock_guard<std::mutex> lock(mu_);
    out = krylov(v, t);
  }
  DMat m = unvectorize(out, rho.dim());
  return DensityState(0.5 * (m + m.adjoint()));
}

DensityState evolve(const Superoperator& l, const DensityState& rho0, double t, const EvolveOptions& opt) {
  return Evolver(l, opt)(rho0, t);
}

SpectralPropagator::SpectralPropagator(const Superoperator& master, const GibbsModel& model)
    : master_(master.matrix), d_(model.dim()) {
  if (master.gauge != Gauge::master_hamiltonian) throw InvalidArgument("SpectralPropagator: needs a master Hamiltonian");
  if (master.hilbert_dim != d_) throw InvalidArgument("SpectralPropagator: model dimension mismatch");
  const DVecR lw = model.log_weights();
  scale_.resize(d_ * d_);
  kernel_ = DVec::Zero(d_ * d_);
  for (Index j = 0; j < d_; ++j) {
    for (Index i = 0; i < d_; ++i) scale_[i + d_ * j] = std::exp(0.25 * (lw[i] + lw[j]));
    kernel_[j + d_ * j] = std::exp(0.5 * lw[j]);
  }
  groups_ = connected_components(master_);
  group_of_.assign(static_cast<std::size_t>(d_ * d_), 0);
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    for (Index i : groups_[g]) group_of_[i] = static_cast<Index>(g);
  }
}

const SpectralPropagator::Block& SpectralPropagator::block(std::size_t g) const {
  auto it = blocks_.find(g);
  if (it != blocks_.end()) return it->second;
  const auto& idx = groups_[g];
  const Index k = static_cast<Index>(idx.size());
  std::vector<Index> local(static_cast<std::size_t>(d_ * d_), -1);
  for (Index i = 0; i < k; ++i) local[idx[i]] = i;
  DMat a = DMat::Zero(k, k);
  for (Index i = 0; i < k; ++i) {
    for (SpMat::InnerIterator e(master_, idx[i]); e; ++e) a(local[e.row()], i) = e.value();
  }
  a = (0.5 * (a + a.adjoint())).eval();
  Block b;
  if (a.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<DMatR> es(a.real());
    b.values = es.eigenvalues();
    b.vectors = es.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<DMat> es(a);
    b.values = es.eigenvalues();
    b.vectors = es.eigenvectors();
  }
  return blocks_.emplace(g, std::move(b)).first->second;
}

DVec SpectralPropagator::evolve_scaled(const DVec& y, double t) const {
  std::vector<char> touched(groups_.size(), 0);
  for (Index i = 0; i < y.size(); ++i) {
    if (y[i] != cplx(0.0, 0.0)) touched[group_of_[i]] = 1;
  }
  DVec out = DVec::Zero(y.size());
  std::lock_guard<std::mutex> lock(mu_);
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (!touched[g]) continue;
    const auto& idx = groups_[g];
    const Block& b = block(g);
    DVec yg(static_cast<Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) yg[static_cast<Index>(i)] = y[idx[i]];
    const DVec coeff = b.vectors.adjoint() * yg;
    const DVec zg = b.vectors * (coeff.array() * (t * b.values.array()).exp().cast<cplx>()).matrix();
    for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = zg[static_cast<Index>(i)];
  }
  return out;
}

DensityState SpectralPropagator::operator()(const DensityState& rho, double t) const {
  if (!(t >= 0.0)) throw InvalidArgument("SpectralPropagator: t must be >= 0");
  if (rho.dim() != d_) throw InvalidArgument("SpectralPropagator: state dimension mismatch");
  const DVec y = vectorize(rho.matrix).cwiseQuotient(scale_.cast<cplx>());
  const DVec z = evolve_scaled(y, t).cwiseProduct(scale_.cast<cplx>());
  DMat m = unvectorize(z, d_);
  return DensityState(0.5 * (m + m.adjoint()));
}

double SpectralPropagator::chi2(const DensityState& rho, double t) const {
  const DVec y = vectorize(rho.matrix).cwiseQuotient(scale_.cast<cplx>());
  return (evolve_scaled(y, t) - kernel_).squaredNorm();
}

double chi2_divergence(const DensityState& rho, const GibbsModel& model) {
  const DVecR w = model.weights();
  if (rho.dim() != w.size()) throw InvalidArgument("chi2_divergence: dimension mismatch");
  if (w.minCoeff() <= 0.0) throw InvalidArgument("chi2_divergence: Gibbs state is singular");
  const DVecR rw = w.cwiseSqrt().cwiseSqrt();
  double s = 0.0;
  for (Index j = 0; j < w.size(); ++j) {
    for (Index i = 0; i < w.size(); ++i) {
      const cplx delta = rho.matrix(i, j) - (i == j ? cplx(w[i], 0.0) : cplx(0.0, 0.0));
      s += std::norm(delta / (rw[i] * rw[j]));
    }
  }
  return s;
}

double trace_distance(const DensityState& a, const DensityState& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("trace_distance: dimension mismatch");
  const DMat d = a.matrix - b.matrix;
  Eigen::SelfAdjointEigenSolver<DMat> es(0.5 * (d + d.adjoint()), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

CsvTable EvolutionTrace::table() const {
  CsvTable t({"t", "chi2", "trace_dist"});
  for (std::size_t k = 0; k < times.size(); ++k) t.add_row({times[k], chi2[k], trace_dist[k]});
  return t;
}

nlohmann::json EvolutionTrace::summary() const {
  return {{"alpha", alpha},
          {"fitted_rate", fitted_rate},
          {"two_alpha", 2.0 * alpha},
          {"chi2_initial", chi2_initial},
          {"log_worst_case_chi2", log_worst_case_chi2},
          {"max_bound_ratio", max_bound_ratio},
          {"bound_ok", bound_ok},
          {"monotone", monotone},
          {"points", times.size()}};
}

namespace {

template <class Step>
EvolutionTrace run_trace(const Step& step, const DensityState& rho0, const GibbsModel& model,
                         const std::vector<double>& grid, double alpha, const MixingOptions& opt) {
  if (grid.empty()) throw InvalidArgument("mixing_trace: empty time grid");
  if (!(alpha >= 0.0)) throw InvalidArgument("mixing_trace: alpha must be >= 0");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid[k] < 0.0 || (k && grid[k] < grid[k - 1])) throw InvalidArgument("mixing_trace: grid must be increasing");
  }
  const DensityState sigma = gibbs_density(model);
  EvolutionTrace tr;
  tr.alpha = alpha;
  tr.log_worst_case_chi2 =
      std::log(static_cast<double>(model.dim())) + model.beta * model.energies.cwiseAbs().maxCoeff();
  DensityState rho = step(rho0, grid[0]);
  double prev_t = grid[0];
  for (double t : grid) {
    if (t > prev_t) rho = step(rho, t - prev_t);
    prev_t = t;
    tr.times.push_back(t);
    tr.chi2.push_back(chi2_divergence(rho, model));
    tr.trace_dist.push_back(trace_distance(rho, sigma));
  }
  const double c0 = chi2_divergence(rho0, model);
  tr.chi2_initial = c0;
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const double envelope = c0 * std::exp(-2.0 * alpha * tr.times[k]);
    if (envelope > 0.0) tr.max_bound_ratio = std::max(tr.max_bound_ratio, tr.chi2[k] / envelope);
    if (tr.chi2[k] > envelope * (1.0 + opt.bound_slack) + opt.absolute_slack) tr.bound_ok = false;
    if (k) {
      if (tr.chi2[k] > tr.chi2[k - 1] + opt.monotone_slack * std::max(tr.chi2[0], 1e-300)) tr.monotone = false;
      if (tr.trace_dist[k] > tr.trace_dist[k - 1] + opt.monotone_slack) tr.monotone = false;
    }
  }
  // least squares of log chi2 on the second half of the grid
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = tr.times.size() / 2; k < tr.times.size(); ++k) {
    if (tr.chi2[k] > 1e-14 * c0 && tr.chi2[k] > 1e-28) pts.emplace_back(tr.times[k], std::log(tr.chi2[k]));
  }
  if (pts.size() >= 2) {
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (auto [t, y] : pts) {
      st += t;
      sy += y;
      stt += t * t;
      sty += t * y;
    }
    const double n = static_cast<double>(pts.size());
    const double den = n * stt - st * st;
    if (den > 0.0) tr.fitted_rate = -(n * sty - st * sy) / den;
  }
  if (!tr.bound_ok && opt.throw_on_violation) {
    throw NumericalError("mixing_trace: chi2 exceeds chi2(0) exp(-2 alpha t); worst ratio " +
                         std::to_string(tr.max_bound_ratio));
  }
  return tr;
}

}  // namespace

EvolutionTrace mixing_trace(const Evolver& evolver, const DensityState& rho0, const GibbsModel& model,
                            const std::vector<double>& grid, double alpha, const MixingOptions& opt) {
  return run_trace([&evolver](const DensityState& r, double dt) { return evolver(r, dt); }, rho0, model, grid, alpha,
                   opt);
}

EvolutionTrace mixing_trace(const SpectralPropagator& prop, const DensityState& rho0, const GibbsModel& model,
                            const std::vector<double>& grid, double alpha, const MixingOptions& opt) {
  return run_trace([&prop](const DensityState& r, double dt) { return prop(r, dt); }, rho0, model, grid, alpha, opt);
}

double mixing_time(const EvolutionTrace& trace, double eps) {
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    if (trace.trace_dist[k] <= eps) return trace.times[k];
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double mixing_time_bound(double chi2_initial, double eps, double alpha) {
  if (!(alpha > 0.0) || !(eps > 0.0)) throw InvalidArgument("mixing_time_bound: alpha and eps must be positive");
  return std::max(0.0, std::log(chi2_initial / (eps * eps))) / (2.0 * alpha);
}

std::vector<double> uniform_grid(double t_max, std::size_t points) {
  if (points < 2 || !(t_max > 0.0)) throw InvalidArgument("uniform_grid: need t_max > 0 and >= 2 points");
  std::vector<double> g(points);
  for (std::size_t k = 0; k < points; ++k) g[k] = t_max * static_cast<double>(k) / static_cast<double>(points - 1);
  return g;
}

}  // namespace stabgibbs

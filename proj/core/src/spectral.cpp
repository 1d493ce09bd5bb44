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


#include "stabgibbs/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/SparseCholesky>

namespace stabgibbs {

namespace {

template <class S>
using Sp = Eigen::SparseMatrix<S, Eigen::ColMajor, Index>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class S>
double max_abs(const Sp<S>& m) {
  double v = 0.0;
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (typename Sp<S>::InnerIterator it(m, c); it; ++it) v = std::max(v, std::abs(it.value()));
  }
  return v;
}

template <class S>
double sym_defect(const Sp<S>& m) {
  const double scale = max_abs(m);
  if (scale == 0.0) return 0.0;
  const Sp<S> d = m - Sp<S>(m.adjoint());
  return max_abs(d) / scale;
}

template <class S>
double norm_bd(const Sp<S>& m) {
  Eigen::VectorXd col = Eigen::VectorXd::Zero(m.cols());
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (typename Sp<S>::InnerIterator it(m, c); it; ++it) col[c] += std::abs(it.value());
  }
  return m.cols() ? col.maxCoeff() : 0.0;
}

template <class S>
double mean_diag(const Sp<S>& m) {
  double t = 0.0;
  for (Index i = 0; i < m.rows(); ++i) t += std::real(m.coeff(i, i));
  return m.rows() ? t / static_cast<double>(m.rows()) : 0.0;
}

template <class S>
std::vector<Vec<S>> orthonormalize(const std::vector<Vec<S>>& in, Index dim) {
  std::vector<Vec<S>> out;
  for (const auto& v : in) {
    if (v.size() != dim) throw InvalidArgument("spectral_gap: kernel vector has wrong length");
    Vec<S> w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out) w -= q * q.dot(w);
    }
    const double n = w.norm();
    if (n > 1e-10 * std::max(1.0, v.norm())) out.push_back(w / n);
  }
  return out;
}

template <class S>
void deflate(Vec<S>& v, const std::vector<Vec<S>>& k) {
  for (const auto& q : k) v -= q * q.dot(v);
}

template <class S>
Vec<S> random_vector(Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec<S> v(dim);
  for (Index i = 0; i < dim; ++i) {
    if constexpr (std::is_same_v<S, double>) {
      v[i] = g(rng);
    } else {
      v[i] = S(g(rng), g(rng));
    }
  }
  return v;
}

template <class S>
struct Ritz {
  double value = 0.0;
  Vec<S> vector;
  double op_residual = 0.0;
  bool converged = false;
};

// Extreme Ritz value of the current tridiagonal matrix and its |beta_k y_k|.
std::pair<double, double> ritz_estimate(const std::vector<double>& alpha, const std::vector<double>& beta, bool want_min) {
  const Index k = static_cast<Index>(alpha.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  for (Index i = 0; i < k; ++i) {
    t(i, i) = alpha[i];
    if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  const Index pick = want_min ? 0 : k - 1;
  return {es.eigenvalues()[pick], std::abs(beta[k - 1] * es.eigenvectors()(k - 1, pick))};
}

// Restarted Lanczos with full reorthogonalisation for an extreme eigenpair of
// a hermitian operator, restricted to the complement of `defl`.
template <class S, class Op>
Ritz<S> lanczos(const Op& apply, Index dim, const std::vector<Vec<S>>& defl, bool want_min, double scale,
                const SpectralOptions& opt, std::mt19937_64& rng) {
  const Index free_dim = dim - static_cast<Index>(defl.size());
  if (free_dim <= 0) throw InvalidArgument("lanczos: nothing left after deflation");
  const Index m = std::max<Index>(2, std::min(opt.krylov_dim, free_dim));
  Vec<S> v = random_vector<S>(dim, rng);
  deflate(v, defl);
  v.normalize();
  Ritz<S> best;
  best.op_residual = std::numeric_limits<double>::infinity();
  Mat<S> basis(dim, m + 1);
  Vec<S> w(dim);
  for (int restart = 0; restart <= opt.max_restarts; ++restart) {
    std::vector<double> alpha, beta;
    basis.col(0) = v;
    Index k = 0;
    for (; k < m; ++k) {
      apply(basis.col(k), w);
      deflate(w, defl);
      const double a = std::real(basis.col(k).dot(w));
      alpha.push_back(a);
      for (int pass = 0; pass < 2; ++pass) {
        const Vec<S> coeffs = basis.leftCols(k + 1).adjoint() * w;
        w -= basis.leftCols(k + 1) * coeffs;
      }
      deflate(w, defl);
      const double b = w.norm();
      beta.push_back(b);
      if (k + 1 == m || b <= 1e-14 * std::max(scale, 1e-300)) {
        ++k;
        break;
      }
      if ((k + 1) % 8 == 0) {
        const auto [theta, est] = ritz_estimate(alpha, beta, want_min);
        if (est <= 0.1 * opt.rel_tol * std::max(scale, std::abs(theta))) {
          ++k;
          break;
        }
      }
      basis.col(k + 1) = w / b;
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (Index i = 0; i < k; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const Index pick = want_min ? 0 : k - 1;
    const double theta = es.eigenvalues()[pick];
    Vec<S> x = basis.leftCols(k) * es.eigenvectors().col(pick).template cast<S>();
    deflate(x, defl);
    x.normalize();
    apply(x, w);
    deflate(w, defl);
    const double res = (w - theta * x).norm();
    if (res < best.op_residual) {
      best.value = theta;
      best.vector = x;
      best.op_residual = res;
    }
    if (res <= opt.rel_tol * std::max(scale, std::abs(theta))) {
      best.converged = true;
      return best;
    }
    v = x;
  }
  return best;
}

struct Classified {
  Index extra_kernel = 0;
  double gap = std::numeric_limits<double>::infinity();
  bool ambiguous = false;
};

Classified classify(const std::vector<double>& ascending, double thr, double sep) {
  Classified c;
  double top_kernel = -std::numeric_limits<double>::infinity();
  for (double e : ascending) {
    if (e <= thr) {
      ++c.extra_kernel;
      top_kernel = std::max(top_kernel, e);
    } else {
      c.gap = e;
      break;
    }
  }
  if (c.gap < sep * thr) c.ambiguous = true;
  if (c.extra_kernel > 0 && top_kernel > thr / sep) c.ambiguous = true;
  return c;
}

template <class S>
double residual_of(const Sp<S>& m, const Vec<S>& x, double lambda) {
  return (m * x - lambda * x).norm() / std::max(x.norm(), 1e-300);
}

template <class S>
SpectralResult dense_path(const Sp<S>& m, const std::vector<Vec<S>>& kernel, bool want_gap, double thr,
                          const SpectralOptions& opt, double scale) {
  const Index dim = m.rows();
  Mat<S> a = Mat<S>(m);
  a = (0.5 * (a + a.adjoint())).eval();
  const Index kd = static_cast<Index>(kernel.size());
  if (kd > 0) {
    Mat<S> q(dim, kd);
    for (Index i = 0; i < kd; ++i) q.col(i) = kernel[i];
    const Mat<S> p = Mat<S>::Identity(dim, dim) - q * q.adjoint();
    a = (p * a * p + (2.0 * scale + 1.0) * q * q.adjoint()).eval();
  }
  Eigen::SelfAdjointEigenSolver<Mat<S>> es(a);
  if (es.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
  const Index keep = dim - kd;
  std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + keep);
  SpectralResult r;
  r.method = "dense";
  if (keep == 0) {
    r.kernel_dim = kd;
    return r;
  }
  r.min_eigenvalue = vals.front();
  for (const auto& k : kernel) r.min_eigenvalue = std::min(r.min_eigenvalue, std::real(k.dot(m * k)));
  r.residuals.push_back(residual_of<S>(m, es.eigenvectors().col(0), vals.front()));
  if (want_gap) {
    const Classified c = classify(vals, thr, opt.separation);
    r.kernel_dim = kd + c.extra_kernel;
    r.gap = c.gap;
    r.kernel_ambiguous = c.ambiguous;
    if (c.extra_kernel < keep) {
      r.residuals.push_back(residual_of<S>(m, es.eigenvectors().col(c.extra_kernel), c.gap));
    }
  }
  return r;
}

template <class S>
SpectralResult lanczos_path(const Sp<S>& m, std::vector<Vec<S>> defl, bool want_gap, double thr,
                            const SpectralOptions& opt, double scale) {
  std::mt19937_64 rng(opt.seed);
  const Index dim = m.rows();
  auto apply = [&m](const auto& x, Vec<S>& y) { y.noalias() = m * x; };
  SpectralResult r;
  r.method = "lanczos";
  const Index supplied = static_cast<Index>(defl.size());
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& k : defl) r.min_eigenvalue = std::min(r.min_eigenvalue, std::real(k.dot(m * k)));
  Index extra = 0;
  double top_kernel = -std::numeric_limits<double>::infinity();
  while (static_cast<Index>(defl.size()) < dim) {
    Ritz<S> z = lanczos<S>(apply, dim, defl, true, scale, opt, rng);
    if (!z.converged) {
      throw NumericalError("lanczos: no convergence within budget, best residual " + std::to_string(z.op_residual));
    }
    r.min_eigenvalue = std::min(r.min_eigenvalue, z.value);
    r.residuals.push_back(residual_of<S>(m, z.vector, z.value));
    if (!want_gap) break;
    if (z.value <= thr) {
      ++extra;
      top_kernel = std::max(top_kernel, z.value);
      defl.push_back(z.vector);
      if (extra > 64) throw NumericalError("lanczos: kernel larger than 64 directions");
      continue;
    }
    r.gap = z.value;
    break;
  }
  if (want_gap) {
    r.kernel_dim = supplied + extra;
    r.kernel_ambiguous = r.gap < opt.separation * thr || (extra > 0 && top_kernel > thr / opt.separation);
  }
  return r;
}

template <class S>
SpectralResult shift_invert_path(const Sp<S>& m, const std::vector<Vec<S>>& defl, bool want_gap, double thr,
                                 const SpectralOptions& opt, double scale) {
  const Index dim = m.rows();
  double shift = opt.shift;
  if (!defl.empty() && shift >= 0.0) shift = -1e-4 * std::max(scale, 1.0);
  Sp<S> a = m;
  Sp<S> id(dim, dim);
  id.setIdentity();
  a -= shift * id;
  Eigen::SimplicialLDLT<Sp<S>> ldlt(a);
  if (ldlt.info() != Eigen::Success) throw NumericalError("shift_invert: factorisation failed");
  auto apply = [&ldlt](const auto& x, Vec<S>& y) { y = ldlt.solve(Vec<S>(x)); };
  std::mt19937_64 rng(opt.seed);
  Ritz<S> z = lanczos<S>(apply, dim, defl, false, 0.0, opt, rng);
  if (!z.converged) {
    throw NumericalError("shift_invert: no convergence within budget, best residual " + std::to_string(z.op_residual));
  }
  if (z.value <= 0.0) throw NumericalError("shift_invert: shift is not below the spectrum");
  SpectralResult r;
  r.method = "shift_invert";
  // Rayleigh quotient on the original matrix
  const double rq = std::real(z.vector.dot(m * z.vector));
  r.min_eigenvalue = rq;
  r.residuals.push_back(residual_of<S>(m, z.vector, rq));
  if (want_gap) {
    r.kernel_dim = static_cast<Index>(defl.size());
    if (rq <= thr) throw NumericalError("shift_invert: undetected kernel direction; use lanczos or dense");
    r.gap = rq;
    r.kernel_ambiguous = rq < opt.separation * thr;
  }
  return r;
}

template <class S>
SpectralResult block_path(const Sp<S>& m, bool want_gap, double thr, const SpectralOptions& opt) {
  double res = 0.0;
  SpMat mc = m.template cast<cplx>();
  const DVecR spec = block_spectrum(mc, &res);
  std::vector<double> vals(spec.data(), spec.data() + spec.size());
  std::sort(vals.begin(), vals.end());
  SpectralResult r;
  r.method = "blocks";
  r.blocks = static_cast<Index>(connected_components(mc).size());
  r.min_eigenvalue = vals.empty() ? 0.0 : vals.front();
  r.residuals.push_back(res);
  if (want_gap) {
    const Classified c = classify(vals, thr, opt.separation);
    r.kernel_dim = c.extra_kernel;
    r.gap = c.gap;
    r.kernel_ambiguous = c.ambiguous;
  }
  return r;
}

template <class S>
SpectralResult solve(const Sp<S>& m, const std::vector<Vec<S>>& kernel_in, bool want_gap, const SpectralOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (m.rows() != m.cols() || m.rows() == 0) throw InvalidArgument("spectral: matrix must be square and non-empty");
  if (sym_defect(m) > 1e-10) throw InvalidArgument("spectral: matrix is not symmetric to 1e-10");
  const double scale = std::max(norm_bd(m), 1e-300);
  const double thr = opt.kernel_rel * std::max(std::abs(mean_diag(m)), 1e-300);
  const auto kernel = orthonormalize(kernel_in, m.rows());
  SolverMethod method = opt.method;
  if (method == SolverMethod::automatic) {
    method = m.rows() <= opt.dense_limit ? SolverMethod::dense : SolverMethod::lanczos;
  }
  SpectralResult r;
  switch (method) {
    case SolverMethod::dense:
      if (m.rows() > std::max<Index>(opt.dense_limit, 4096)) throw InvalidArgument("spectral: too large for dense");
      r = dense_path(m, kernel, want_gap, thr, opt, scale);
      break;
    case SolverMethod::lanczos: r = lanczos_path(m, kernel, want_gap, thr, opt, scale); break;
    case SolverMethod::shift_invert: r = shift_invert_path(m, kernel, want_gap, thr, opt, scale); break;
    case SolverMethod::blocks:
      r = block_path(m, want_gap, thr, opt);
      if (want_gap && r.kernel_dim < static_cast<Index>(kernel.size())) r.kernel_ambiguous = true;
      break;
    default: throw InvalidArgument("spectral: unknown method");
  }
  if (!want_gap) r.gap = r.min_eigenvalue;
  if (r.residual() > opt.residual_limit * scale) {
    throw NumericalError("spectral: residual " + std::to_string(r.residual()) + " above certification limit");
  }
  r.wall_time_ms = elapsed_ms(t0);
  return r;
}

bool vectors_real(const std::vector<DVec>& v) {
  return std::all_of(v.begin(), v.end(), [](const DVec& x) { return x.imag().cwiseAbs().maxCoeff() == 0.0; });
}

std::vector<DVecR> real_vectors(const std::vector<DVec>& v) {
  std::vector<DVecR> out;
  for (const auto& x : v) out.push_back(x.real());
  return out;
}

template <class S>
std::vector<std::vector<Index>> components(const Sp<S>& m) {
  const Index n = m.rows();
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&parent](Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (typename Sp<S>::InnerIterator it(m, c); it; ++it) {
      if (it.value() == S(0)) continue;
      const Index a = find(it.row()), b = find(c);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Index>> groups;
  std::vector<Index> slot(static_cast<std::size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    const Index root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<Index>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

}  // namespace

const char* solver_method_name(SolverMethod m) {
  switch (m) {
    case SolverMethod::automatic: return "automatic";
    case SolverMethod::dense: return "dense";
    case SolverMethod::lanczos: return "lanczos";
    case SolverMethod::shift_invert: return "shift_invert";
    default: return "blocks";
  }
}

SolverMethod parse_solver_method(const std::string& s) {
  for (auto m : {SolverMethod::automatic, SolverMethod::dense, SolverMethod::lanczos, SolverMethod::shift_invert,
                 SolverMethod::blocks}) {
    if (s == solver_method_name(m)) return m;
  }
  throw InvalidArgument("unknown solver method: " + s);
}

double SpectralResult::residual() const {
  return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

nlohmann::json SpectralResult::to_json() const {
  return {{"min_eig", min_eigenvalue}, {"gap", gap},       {"kernel_dim", kernel_dim},
          {"residual", residual()},    {"method", method}, {"wall_time_ms", wall_time_ms}};
}

SpectralResult min_eigenvalue(const SpMatR& m, const SpectralOptions& opt) { return solve<double>(m, {}, false, opt); }

SpectralResult min_eigenvalue(const SpMat& m, const SpectralOptions& opt) {
  if (is_real(m)) return solve<double>(real_part(m), {}, false, opt);
  return solve<cplx>(m, {}, false, opt);
}

SpectralResult spectral_gap(const SpMatR& m, const std::vector<DVecR>& kernel, const SpectralOptions& opt) {
  return solve<double>(m, kernel, true, opt);
}

SpectralResult spectral_gap(const SpMat& m, const std::vector<DVec>& kernel, const SpectralOptions& opt) {
  if (is_real(m) && vectors_real(kernel)) return solve<double>(real_part(m), real_vectors(kernel), true, opt);
  return solve<cplx>(m, kernel, true, opt);
}

std::vector<std::vector<Index>> connected_components(const SpMat& m) { return components(m); }
std::vector<std::vector<Index>> connected_components(const SpMatR& m) { return components(m); }

DVecR block_spectrum(const SpMat& m, double* max_residual) {
  const auto groups = connected_components(m);
  DVecR out(m.rows());
  Index filled = 0;
  double worst = 0.0;
  std::vector<Index> local(static_cast<std::size_t>(m.rows()), -1);
  for (const auto& g : groups) {
    const Index k = static_cast<Index>(g.size());
    for (Index i = 0; i < k; ++i) local[g[i]] = i;
    DMat blk = DMat::Zero(k, k);
    for (Index i = 0; i < k; ++i) {
      for (SpMat::InnerIterator it(m, g[i]); it; ++it) blk(local[it.row()], i) = it.value();
    }
    blk = (0.5 * (blk + blk.adjoint())).eval();
    if (blk.imag().cwiseAbs().maxCoeff() == 0.0) {
      const DMatR re = blk.real();
      Eigen::SelfAdjointEigenSolver<DMatR> es(re);
      out.segment(filled, k) = es.eigenvalues();
      if (max_residual) {
        worst = std::max(worst, ((re * es.eigenvectors()) - es.eigenvectors() * es.eigenvalues().asDiagonal())
                                    .colwise()
                                    .norm()
                                    .maxCoeff());
      }
    } else {
      Eigen::SelfAdjointEigenSolver<DMat> es(blk);
      out.segment(filled, k) = es.eigenvalues();
      if (max_residual) {
        worst = std::max(worst, ((blk * es.eigenvectors()) - es.eigenvectors() * es.eigenvalues().asDiagonal())
                                    .colwise()
                                    .norm()
                                    .maxCoeff());
      }
    }
    filled += k;
    for (Index i : g) local[i] = -1;
  }
  if (max_residual) *max_residual = worst;
  std::sort(out.data(), out.data() + out.size());
  return out;
}

bool is_real(const SpMat& m, double tol) {
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (SpMat::InnerIterator it(m, c); it; ++it) {
      if (std::abs(it.value().imag()) > tol) return false;
    }
  }
  return true;
}

SpMatR real_part(const SpMat& m) {
  SpMatR r = m.real();
  r.prune(0.0, 0.0);
  return r;
}

double symmetry_defect(const SpMatR& m) { return sym_defect(m); }
double symmetry_defect(const SpMat& m) { return sym_defect(m); }
double norm_bound(const SpMatR& m) { return norm_bd(m); }
double norm_bound(const SpMat& m) { return norm_bd(m); }

}  // namespace stabgibbs

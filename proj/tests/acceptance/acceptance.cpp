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


// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "stabgibbs/chain.hpp"
#include "stabgibbs/couplings.hpp"
#include "stabgibbs/davies.hpp"
#include "stabgibbs/dynamics.hpp"
#include "stabgibbs/hamiltonians.hpp"
#include "stabgibbs/sectors.hpp"
#include "stabgibbs/spectral.hpp"
#include "stabgibbs/stair.hpp"

using namespace stabgibbs;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

std::shared_ptr<const StabilizerModel> ising(std::size_t n) {
  return std::make_shared<StabilizerModel>(make_ising_model(RingLattice(n)));
}

std::shared_ptr<const StabilizerModel> toric(std::size_t side) {
  return std::make_shared<StabilizerModel>(make_toric_model(TorusLattice(side)));
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double dense_min(const DMatR& m) {
  if (m.rows() == 0) return INFINITY;
  Eigen::SelfAdjointEigenSolver<DMatR> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

SpectralOptions with_method(SolverMethod m) {
  SpectralOptions o;
  o.method = m;
  return o;
}

void stair_law(Outcome& out) {
  std::vector<double> lx, ly;
  double worst = -INFINITY;
  for (std::size_t n = 2; n <= 200; ++n) {
    const SpMatR h = stair_graph(n).weighted_laplacian();
    const double lam = min_eigenvalue(h, with_method(SolverMethod::shift_invert)).min_eigenvalue;
    const double bound = 12.0 / (static_cast<double>(n) * static_cast<double>(n + 1));
    worst = std::max(worst, lam - bound);
    out.require(lam <= bound + 1e-10, "n " + std::to_string(n) + ": lambda_min " + fmt(lam) + " above " + fmt(bound));
    if (n >= 8) {
      lx.push_back(std::log(static_cast<double>(n)));
      ly.push_back(std::log(lam));
    }
  }
  const double slope = fit_slope(lx, ly);
  out.require(slope >= -2.2 && slope <= -1.8, "log-log slope " + fmt(slope) + " outside [-2.2, -1.8]");
  if (out.pass) out.detail << "slope " << fmt(slope) << ", max(lambda - 12/(n(n+1))) " << fmt(worst);
}

void block_formulas(Outcome& out) {
  double worst = 0, leak = 0;
  int sectors = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    auto m = ising(n);
    for (double beta : {0.0, 1.0, 3.0}) {
      const GibbsModel g = gibbs_state(m, beta);
      const Superoperator l = davies_lindbladian(g, local_subset(*m));
      for (const auto& sec : all_lambda_sectors(n)) {
        const Restriction r = restrict_superoperator(l, lambda_sector_basis(g, sec));
        const double dev = (r.dense() - tensor_sector_matrix(sec, beta).cast<cplx>()).cwiseAbs().maxCoeff();
        worst = std::max(worst, dev);
        leak = std::max(leak, r.leakage);
        ++sectors;
        out.require(dev <= 1e-11, "N " + std::to_string(n) + " beta " + fmt(beta) + ": deviation " + fmt(dev));
        out.require(r.leakage <= 1e-10, "N " + std::to_string(n) + " beta " + fmt(beta) + ": leakage " + fmt(r.leakage));
      }
    }
  }
  if (out.pass) out.detail << sectors << " sectors, max deviation " << fmt(worst) << ", max leakage " << fmt(leak);
}

void sector_floors(Outcome& out) {
  double int_floor = INFINITY, flip_gap = INFINITY;
  for (std::size_t n = 2; n <= 6; ++n) {
    auto m = ising(n);
    for (double beta : {0.0, 1.0, 3.0, 6.0}) {
      const GibbsModel g = gibbs_state(m, beta);
      const Superoperator l = davies_lindbladian(g, local_subset(*m));
      for (const auto& sec : all_lambda_sectors(n)) {
        const bool has_int = !sec.gamma(PairClass::interaction).empty();
        const bool all_flip = sec.mask() == 0;
        if (!has_int && !all_flip) continue;
        const SpMatR neg = -real_part(restrict_superoperator(l, lambda_sector_basis(g, sec)).matrix);
        const std::string where = "N " + std::to_string(n) + " beta " + fmt(beta);
        if (has_int) {
          const double lam = dense_min(DMatR(neg));
          int_floor = std::min(int_floor, lam);
          out.require(lam >= 0.5 - 1e-10, where + ": interaction sector min eigenvalue " + fmt(lam));
        }
        if (all_flip) {
          const double gap = spectral_gap(neg, {}, with_method(SolverMethod::dense)).gap;
          flip_gap = std::min(flip_gap, gap);
          out.require(gap >= 0.5 - 1e-10, where + ": full-flip gap " + fmt(gap));
        }
      }
    }
  }
  if (out.pass) out.detail << "interaction floor " << fmt(int_floor) << ", full-flip gap " << fmt(flip_gap);
}

void chain_to_stair(Outcome& out) {
  for (std::size_t n = 3; n <= 12; ++n) {
    const SpMatR k = two_sign_block(build_chain_K(n, INFINITY).K, n);
    const SpMatR h = stair_graph(n - 1).weighted_laplacian();
    const double diff = k.rows() == h.rows() ? DMatR(k - h).cwiseAbs().maxCoeff() : INFINITY;
    out.require(diff == 0.0, "n " + std::to_string(n) + ": two-sign block differs from the stair matrix by " + fmt(diff));
  }
  std::vector<std::vector<double>> lam(11);
  for (std::size_t n = 2; n <= 10; ++n) {
    const SpMatR k = build_chain_K(n, INFINITY).K;
    for (std::size_t j = 0; j <= n; ++j) lam[n].push_back(dense_min(DMatR(restrict_to_spin_sector(k, SpinSectorBasis(n, j)))));
  }
  int checked = 0;
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      double floor = INFINITY;
      if (j <= n - 1) floor = std::min(floor, lam[n - 1][j]);
      if (j >= 1) floor = std::min(floor, lam[n - 1][j - 1]);
      ++checked;
      out.require(lam[n][j] >= floor - 1e-10,
                  "n " + std::to_string(n) + " k " + std::to_string(j) + ": " + fmt(lam[n][j]) + " < " + fmt(floor));
    }
  }
  if (out.pass) out.detail << "exact for n = 3..12, " << checked << " monotonicity checks";
}

double syndrome_gap(std::shared_ptr<const StabilizerModel> m, double beta, SolverMethod method) {
  const GibbsModel g = gibbs_state(m, beta);
  const Superoperator l = davies_lindbladian(g, local_subset(*m));
  const Restriction r = restrict_superoperator(l, syndrome_sector_basis(g), 1e-10);
  const SpMat neg = -r.matrix;
  return spectral_gap(neg, {}, with_method(method)).gap;
}

void syndrome_robust(Outcome& out) {
  struct Case {
    std::string name;
    std::shared_ptr<const StabilizerModel> model;
    SolverMethod method;
  };
  const std::vector<Case> cases = {{"ising N=4", ising(4), SolverMethod::dense},
                                   {"ising N=6", ising(6), SolverMethod::dense},
                                   {"toric L=2", toric(2), SolverMethod::lanczos}};
  std::string sep;
  for (const auto& c : cases) {
    const double g3 = syndrome_gap(c.model, 3.0, c.method), g6 = syndrome_gap(c.model, 6.0, c.method);
    const double ratio = std::max(g3, g6) / std::min(g3, g6);
    out.require(g3 > 0 && g6 > 0 && ratio <= 2.0, c.name + ": gaps " + fmt(g3) + " and " + fmt(g6));
    if (out.pass) out.detail << sep << c.name << " " << fmt(g3) << " -> " << fmt(g6);
    sep = ", ";
  }
}

double full_gap(std::shared_ptr<const StabilizerModel> m, double beta, CouplingSet set, Index* kernel_dim = nullptr) {
  const GibbsModel g = gibbs_state(m, beta);
  const Superoperator mh = master_hamiltonian(davies_lindbladian(g, coupling_operators(*m, set)), g);
  const SpMat neg = -mh.matrix;
  const SpectralResult r = spectral_gap(neg, {}, with_method(SolverMethod::blocks));
  if (kernel_dim) *kernel_dim = r.kernel_dim;
  return r.gap;
}

void local_only_contrast(Outcome& out) {
  auto m = toric(2);
  std::vector<double> b, lg;
  for (double beta : {1.0, 2.0, 3.0}) {
    b.push_back(beta);
    lg.push_back(std::log(full_gap(m, beta, CouplingSet::local_only)));
  }
  const double slope = fit_slope(b, lg);
  out.require(slope <= -1.0, "local-only log-gap slope " + fmt(slope) + " above -1");
  double lo = INFINITY, hi = 0;
  for (double beta : {2.0, 4.0, 6.0}) {
    const double g = full_gap(m, beta, CouplingSet::gapped);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  out.require(lo > 0 && hi / lo < 2.0, "gapped sampler varies by factor " + fmt(hi / lo));
  if (out.pass) out.detail << "local-only slope " << fmt(slope) << ", gapped variation factor " << fmt(hi / lo);
}

void stationarity(Outcome& out) {
  double stat = 0, herm = 0;
  std::vector<std::pair<std::string, std::shared_ptr<const StabilizerModel>>> models;
  for (std::size_t n = 2; n <= 6; ++n) models.emplace_back("ising N=" + std::to_string(n), ising(n));
  models.emplace_back("toric L=2", toric(2));
  for (const auto& [name, m] : models) {
    for (double beta : {0.0, 1.0, 3.0}) {
      const GibbsModel g = gibbs_state(m, beta);
      const Superoperator l = davies_lindbladian(g, coupling_operators(*m, CouplingSet::with_global));
      const double s = stationarity_defect(l, g);
      const Superoperator mh = master_hamiltonian(l, g, 1.0);
      const double h = hermiticity_defect(mh);
      const SpMat neg = -mh.matrix;
      const SpectralResult r = spectral_gap(neg, {}, with_method(SolverMethod::blocks));
      stat = std::max(stat, s);
      herm = std::max(herm, h);
      const std::string where = name + " beta " + fmt(beta);
      out.require(s <= 1e-11, where + ": stationarity defect " + fmt(s));
      out.require(h <= 1e-10, where + ": hermiticity defect " + fmt(h));
      out.require(r.kernel_dim == 1 && !r.kernel_ambiguous, where + ": kernel_dim " + std::to_string(r.kernel_dim));
    }
  }
  if (out.pass) out.detail << "max stationarity " << fmt(stat) << ", max hermiticity " << fmt(herm) << ", kernel_dim 1";
}

void mixing_bound(Outcome& out) {
  auto m = ising(4);
  std::mt19937_64 rng(2026);
  double worst = 0, min_ratio = INFINITY;
  for (double beta : {1.0, 2.0}) {
    Index kd = 0;
    const double alpha = full_gap(m, beta, CouplingSet::with_global, &kd);
    const GibbsModel g = gibbs_state(m, beta);
    const Evolver ev(schrodinger_adjoint(davies_lindbladian(g, coupling_operators(*m, CouplingSet::with_global))));
    const auto grid = uniform_grid(10.0 / alpha, 50);
    MixingOptions opt;
    opt.throw_on_violation = false;
    for (int s = 0; s < 20; ++s) {
      const DensityState rho = s % 2 ? random_mixed_state(16, 2, rng) : random_pure_state(16, rng);
      const EvolutionTrace tr = mixing_trace(ev, rho, g, grid, alpha, opt);
      worst = std::max(worst, tr.max_bound_ratio);
      min_ratio = std::min(min_ratio, tr.fitted_rate / (2.0 * alpha));
      out.require(tr.bound_ok, "beta " + fmt(beta) + " state " + std::to_string(s) + ": ratio " + fmt(tr.max_bound_ratio));
    }
  }
  if (out.pass) {
    out.detail << "40 traces, max chi2(t)/(chi2(0)e^{-2 alpha t}) " << fmt(worst) << ", min fitted/2alpha "
               << fmt(min_ratio);
  }
}

void oracle_equivalence(Outcome& out) {
  std::mt19937_64 rng(99);
  double worst = 0;
  std::vector<std::pair<std::string, std::shared_ptr<const StabilizerModel>>> models;
  for (std::size_t n = 2; n <= 5; ++n) models.emplace_back("ising N=" + std::to_string(n), ising(n));
  models.emplace_back("toric L=2", toric(2));
  const std::vector<double> betas = {0.5, 1.0, 2.0};
  for (const auto& [name, m] : models) {
    std::vector<PauliString> pool = single_site_paulis(m->num_qubits());
    for (const auto& p : global_jumps(*m, true)) pool.push_back(p);
    std::vector<std::vector<SpMat>> per;  // [beta][coupling]
    std::vector<GibbsModel> gs;
    for (double beta : betas) {
      gs.push_back(gibbs_state(m, beta));
      per.emplace_back();
      for (const auto& p : pool) per.back().push_back(davies_lindbladian_oracle(gs.back(), {p}).matrix);
    }
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<std::size_t> pick_beta(0, betas.size() - 1);
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t bi = pick_beta(rng);
      std::vector<PauliString> subset;
      SpMat ref(per[bi][0].rows(), per[bi][0].cols());
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (coin(rng)) {
          subset.push_back(pool[k]);
          ref += per[bi][k];
        }
      }
      if (subset.empty()) continue;
      const double diff = max_abs_diff(davies_lindbladian(gs[bi], subset).matrix, ref);
      worst = std::max(worst, diff);
      out.require(diff <= 1e-10, name + " subset " + std::to_string(rep) + ": difference " + fmt(diff));
    }
    if (m->kind == StabilizerModel::Kind::ising && m->num_qubits() <= 4) {
      std::vector<oracle::Mat> dense;
      for (const auto& p : pool) dense.push_back(p.to_dense());
      const oracle::Mat ref = oracle::davies(oracle::ising_ring(m->num_qubits()), dense, 1.0);
      const double diff = (DMat(davies_lindbladian(gs[1], pool).matrix) - ref).cwiseAbs().maxCoeff();
      worst = std::max(worst, diff);
      out.require(diff <= 1e-10, name + ": differs from the explicit kronecker oracle by " + fmt(diff));
    }
  }
  if (out.pass) out.detail << "max entrywise difference " << fmt(worst);
}

void geometry(Outcome& out) {
  for (std::size_t side = 2; side <= 8; ++side) {
    const TorusLattice lat(side);
    std::size_t longest = 0;
    for (const auto& p : lat.leaf_paths()) longest = std::max(longest, p.size());
    const std::string where = "L " + std::to_string(side);
    out.require(lat.leaf_paths().size() == side * (side - 1) / 2,
                where + ": " + std::to_string(lat.leaf_paths().size()) + " leaf paths");
    out.require(longest <= 3 * side - 2, where + ": longest leaf path " + std::to_string(longest));
  }
  for (std::size_t side = 2; side <= 6; ++side) {
    const ParityReport r = check_parity(TorusLattice(side));
    out.require(r.stars_multiply_to_identity && r.plaquettes_multiply_to_identity,
                "L " + std::to_string(side) + ": stabilizer products are not the identity");
  }
  if (out.pass) out.detail << "leaf paths L = 2..8, parity L = 2..6";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double time_limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"stair-graph law", 60, stair_law},
      {"exact block matrices", 30, block_formulas},
      {"sector floors", 30, sector_floors},
      {"chain-to-stair identification", 0, chain_to_stair},
      {"beta-robust syndrome gap", 300, syndrome_robust},
      {"contrast with local-only sampler", 600, local_only_contrast},
      {"stationarity, detailed balance, primitivity", 0, stationarity},
      {"mixing bound", 300, mixing_bound},
      {"oracle equivalence", 0, oracle_equivalence},
      {"geometry facts", 0, geometry},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      out.require(false, "runtime " + fmt(secs) + " s exceeds " + fmt(c.time_limit_s) + " s");
    }
    failures += !out.pass;
    std::printf("%s criterion %zu: %s (%s; %.2f s)\n", out.pass ? "PASS" : "FAIL", i + 1, c.name,
                out.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

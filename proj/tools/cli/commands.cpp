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


#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "cli/worker_pool.hpp"
#include "stabgibbs/couplings.hpp"
#include "stabgibbs/davies.hpp"
#include "stabgibbs/dynamics.hpp"
#include "stabgibbs/hamiltonians.hpp"
#include "stabgibbs/io.hpp"
#include "stabgibbs/sectors.hpp"
#include "stabgibbs/spectral.hpp"
#include "stabgibbs/stair.hpp"

namespace stabgibbs::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::ostream& log_of(const RunContext& ctx) {
  static std::ostringstream sink;
  return ctx.log ? *ctx.log : sink;
}

std::string beta_tag(double beta) {
  if (std::isinf(beta)) return "inf";
  std::ostringstream s;
  s << beta;
  return s.str();
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
  const double den = n * sxx - sx * sx;
  return den > 0.0 ? (n * sxy - sx * sy) / den : std::nan("");
}

SpectralOptions spectral_options(const JobConfig& c, Index dim, bool block_structured) {
  SpectralOptions o;
  o.kernel_rel = c.tolerances.kernel_rel;
  o.residual_limit = c.tolerances.residual;
  o.seed = c.seed;
  o.method = parse_solver_method(c.solver);
  if (o.method == SolverMethod::automatic) {
    if (dim <= 1024) o.method = SolverMethod::dense;
    else o.method = block_structured ? SolverMethod::blocks : SolverMethod::lanczos;
  }
  if (dim > 100000) o.krylov_dim = 60;
  return o;
}

void write_job(const RunContext& ctx, CommandResult& res) {
  const fs::path p = ctx.out_dir / "job.json";
  write_json(p, ctx.config.to_json());
  res.written.push_back(p);
}

struct GapPoint {
  int size = 0;
  double beta = 0;
  std::size_t n_qubits = 0;
  Index dim = 0;
  SpectralResult result;
};

GapPoint gap_point(const JobConfig& c, int size, double beta) {
  GapPoint p;
  p.size = size;
  p.beta = beta;
  auto model = build_model(c.model, size);
  p.n_qubits = model->num_qubits();
  if (std::isinf(beta)) throw Refusal("gap_scan: beta = inf has no Gibbs weights; use a finite beta");
  const GibbsModel g = gibbs_state(model, beta);
  const auto couplings = coupling_operators(*model, c.couplings);
  if (c.sector == "abelian") {
    const DiagonalSector sec = diagonal_sector_generator(g, couplings);
    const SpMatR neg = -sec.generator;
    p.dim = neg.rows();
    p.result = spectral_gap(neg, {diagonal_sector_kernel(g, sec)}, spectral_options(c, p.dim, false));
    return p;
  }
  const Superoperator l = davies_lindbladian(g, couplings);
  if (c.sector == "syndrome") {
    const SectorBasis b = syndrome_sector_basis(g);
    const Restriction r = restrict_superoperator(l, b);
    if (r.leakage > c.tolerances.leakage) {
      throw Refusal(std::string("gap_scan: coupling set ") + coupling_set_name(c.couplings) +
                    " does not preserve the syndrome sector (leakage " + format_double(r.leakage) + ")");
    }
    const SpMat neg = -r.matrix;
    p.dim = neg.rows();
    p.result = spectral_gap(neg, {}, spectral_options(c, p.dim, true));
    return p;
  }
  const Superoperator m = master_hamiltonian(l, g);
  const SpMat neg = -m.matrix;
  p.dim = neg.rows();
  p.result = spectral_gap(neg, {master_kernel_vector(g)}, spectral_options(c, p.dim, true));
  return p;
}

json trace_meta(const JobConfig& c, std::size_t n_qubits, double beta, const std::string& state, double gap,
                std::uint64_t seed) {
  return {{"model", c.model},       {"N", n_qubits}, {"beta", beta_to_json(beta)},
          {"couplings", coupling_set_name(c.couplings)},
          {"initial_state", state}, {"gap", gap},    {"seed", seed}};
}

std::vector<std::pair<std::string, DensityState>> initial_states(const JobConfig& c, const GibbsModel& g,
                                                                  const StabilizerModel& m, std::mt19937_64& rng) {
  std::vector<std::pair<std::string, DensityState>> out;
  const Index d = g.dim();
  for (const auto& kind : c.mix.initial_states) {
    if (kind == "random_pure" || kind == "random_mixed") {
      for (int s = 0; s < c.mix.samples; ++s) {
        out.emplace_back(kind + "_" + std::to_string(s),
                         kind == "random_pure" ? random_pure_state(d, rng) : random_mixed_state(d, 2, rng));
      }
    } else if (kind == "maximally_mixed_perturbed") {
      DMat rho = 0.9 * DensityState::maximally_mixed(d).matrix + 0.1 * random_pure_state(d, rng).matrix;
      out.emplace_back(kind, DensityState(std::move(rho)));
    } else if (kind == "ground") {
      out.emplace_back(kind, DensityState::basis_state(d, 0));
    } else if (kind == "excitation_pair") {
      const std::size_t q = m.torus ? m.torus->snake_spins().front() : 1;
      const auto flip = m.frame.action(PauliString::single(m.num_qubits(), q, 'X')).flip;
      out.emplace_back(kind, DensityState::basis_state(d, static_cast<Index>(flip)));
    } else if (kind == "gibbs") {
      out.emplace_back(kind, gibbs_density(g));
    } else {
      throw InvalidArgument("unknown initial state kind: " + kind);
    }
  }
  return out;
}

}  // namespace

std::shared_ptr<const StabilizerModel> build_model(const std::string& kind, int size) {
  if (kind == "ising") {
    if (size < 2) throw InvalidArgument("ising size must be >= 2");
    return std::make_shared<StabilizerModel>(make_ising_model(RingLattice(static_cast<std::size_t>(size))));
  }
  if (kind == "toric") {
    if (size < 2) throw InvalidArgument("toric size must be >= 2");
    return std::make_shared<StabilizerModel>(make_toric_model(TorusLattice(static_cast<std::size_t>(size))));
  }
  throw InvalidArgument("unknown model: " + kind);
}

void check_desk_limits(Command command, const std::string& model, int size, const std::string& sector) {
  const bool ising = model == "ising";
  switch (command) {
    case Command::gap_scan:
      if (ising) {
        if (sector == "abelian" && size > 20) throw Refusal("ising abelian sector is limited to N <= 20");
        if (sector != "abelian" && size > 8) throw Refusal("ising full and syndrome scans are limited to N <= 8");
      } else {
        if (size > 3) throw Refusal("toric scans are limited to L <= 3");
        if (size == 3 && sector != "abelian") throw Refusal("toric L = 3 is available only with sector abelian");
      }
      break;
    case Command::block_verify:
      if (ising && (size < 3 || size > 6)) throw Refusal("block_verify supports ising N in 3..6");
      if (!ising && size != 2) throw Refusal("block_verify supports toric L = 2 only");
      break;
    case Command::mix_run:
      if (ising && size > 8) throw Refusal("mix_run is limited to ising N <= 8");
      if (!ising && size != 2) throw Refusal("mix_run supports toric L = 2 only");
      break;
    case Command::model_dump:
      if (!ising && size > 16) throw Refusal("model_dump is limited to toric L <= 16");
      if (ising && size > 62) throw Refusal("model_dump is limited to ising N <= 62");
      break;
    case Command::stair_scan:
      if (size < 1 || size > 1000) throw Refusal("stair_scan accepts 1 <= n <= 1000");
      break;
  }
}

CommandResult cmd_gap_scan(const RunContext& ctx) {
  const JobConfig& c = ctx.config;
  if (c.sizes.empty() || c.betas.empty()) throw InvalidArgument("gap_scan needs sizes and betas");
  for (int s : c.sizes) check_desk_limits(Command::gap_scan, c.model, s, c.sector);
  std::vector<std::pair<int, double>> grid;
  for (int s : c.sizes) {
    for (double b : c.betas) grid.emplace_back(s, b);
  }
  std::vector<GapPoint> points(grid.size());
  std::mutex log_mu;
  parallel_for(grid.size(), ctx.threads, [&](std::size_t i) {
    points[i] = gap_point(c, grid[i].first, grid[i].second);
    write_json(ctx.out_dir / "points" / ("gap_" + c.model + "_" + std::to_string(grid[i].first) + "_b" +
                                         beta_tag(grid[i].second) + ".json"),
               {{"size", grid[i].first}, {"beta", beta_to_json(grid[i].second)}, {"result", points[i].result.to_json()}});
    std::lock_guard<std::mutex> lock(log_mu);
    log_of(ctx) << "gap_scan " << c.model << " size=" << grid[i].first << " beta=" << beta_tag(grid[i].second)
                << " gap=" << format_double(points[i].result.gap) << " kernel_dim=" << points[i].result.kernel_dim
                << "\n";
  });
  CommandResult res;
  CsvTable table({"model", "N", "beta", "coupling_set", "gap", "kernel_dim", "residual", "wall_time_ms"});
  json rows = json::array();
  for (const auto& p : points) {
    table.add_row({c.model, static_cast<long long>(p.n_qubits), p.beta, std::string(coupling_set_name(c.couplings)),
                   p.result.gap, static_cast<long long>(p.result.kernel_dim), p.result.residual(),
                   p.result.wall_time_ms});
    json r = p.result.to_json();
    r["size"] = p.size;
    r["N"] = p.n_qubits;
    r["beta"] = beta_to_json(p.beta);
    r["dim"] = p.dim;
    r["kernel_ambiguous"] = p.result.kernel_ambiguous;
    rows.push_back(r);
    if (c.checks.kernel_dim && p.result.kernel_dim != *c.checks.kernel_dim) {
      res.failures.push_back("primitivity: size " + std::to_string(p.size) + " beta " + beta_tag(p.beta) +
                             " has kernel_dim " + std::to_string(p.result.kernel_dim));
    }
  }
  json checks = json::array();
  for (int s : c.sizes) {
    std::vector<double> b, lg;
    for (const auto& p : points) {
      if (p.size == s && std::isfinite(p.beta) && p.result.gap > 0.0 && std::isfinite(p.result.gap)) {
        b.push_back(p.beta);
        lg.push_back(std::log(p.result.gap));
      }
    }
    if (b.empty()) continue;
    const double ratio = std::exp(*std::max_element(lg.begin(), lg.end()) - *std::min_element(lg.begin(), lg.end()));
    const double slope = b.size() >= 2 ? fit_slope(b, lg) : std::nan("");
    json entry = {{"size", s}, {"gap_ratio", ratio}, {"log_gap_slope", slope}};
    if (c.checks.max_gap_ratio) {
      entry["max_gap_ratio"] = *c.checks.max_gap_ratio;
      if (!(ratio < *c.checks.max_gap_ratio)) {
        res.failures.push_back("beta-robust gap: size " + std::to_string(s) + " gap ratio " + format_double(ratio) +
                               " is not below " + format_double(*c.checks.max_gap_ratio));
      }
    }
    if (c.checks.max_log_slope) {
      entry["max_log_slope"] = *c.checks.max_log_slope;
      if (!(slope <= *c.checks.max_log_slope)) {
        res.failures.push_back("exponential gap decay: size " + std::to_string(s) + " slope " + format_double(slope) +
                               " exceeds " + format_double(*c.checks.max_log_slope));
      }
    }
    checks.push_back(entry);
  }
  const fs::path csv = ctx.out_dir / "gap_scan.csv";
  table.save(csv);
  const fs::path summary = ctx.out_dir / "gap_scan_summary.json";
  res.report = {{"command", "gap_scan"}, {"sector", c.sector}, {"rows", rows}, {"checks", checks},
                {"failures", res.failures}, {"ok", res.failures.empty()}};
  write_json(summary, res.report);
  res.written = {csv, summary};
  write_job(ctx, res);
  return res;
}

CommandResult cmd_stair_scan(const RunContext& ctx) {
  const JobConfig& c = ctx.config;
  if (c.sizes.empty()) throw InvalidArgument("stair_scan needs sizes (values of n)");
  for (int n : c.sizes) check_desk_limits(Command::stair_scan, c.model, n, c.sector);
  struct Row {
    int n;
    double lambda;
    double rayleigh;
    double residual;
    double ms;
  };
  std::vector<Row> rows(c.sizes.size());
  parallel_for(c.sizes.size(), ctx.threads, [&](std::size_t i) {
    const int n = c.sizes[i];
    const SpMatR h = stair_graph(static_cast<std::size_t>(n)).weighted_laplacian();
    SpectralOptions o;
    o.residual_limit = c.tolerances.residual;
    o.method = parse_solver_method(c.solver);
    if (o.method == SolverMethod::automatic) o.method = h.rows() <= 400 ? SolverMethod::dense : SolverMethod::shift_invert;
    const SpectralResult r = min_eigenvalue(h, o);
    const double ray = n >= 2 ? stair_test_vector(static_cast<std::size_t>(n)).rayleigh : std::nan("");
    rows[i] = {n, r.min_eigenvalue, ray, r.residual(), r.wall_time_ms};
  });
  CommandResult res;
  CsvTable table({"n", "lambda_min", "lambda_min_n2", "rayleigh_upper", "residual"});
  std::vector<double> lx, ly;
  for (const auto& r : rows) {
    table.add_row({static_cast<long long>(r.n), r.lambda, r.lambda * r.n * r.n, r.rayleigh, r.residual});
    if (r.n >= 2 && r.lambda > r.rayleigh + 1e-10) {
      res.failures.push_back("test-vector bound: n " + std::to_string(r.n) + " lambda_min " + format_double(r.lambda) +
                             " exceeds " + format_double(r.rayleigh));
    }
    if (r.n >= c.checks.stair_fit_min_n) {
      lx.push_back(std::log(r.n));
      ly.push_back(std::log(r.lambda));
    }
  }
  json summary = {{"command", "stair_scan"}, {"fit_min_n", c.checks.stair_fit_min_n}, {"fit_points", lx.size()}};
  if (lx.size() >= 3) {
    const double slope = fit_slope(lx, ly);
    summary["slope"] = slope;
    summary["slope_band"] = {c.checks.stair_slope_min, c.checks.stair_slope_max};
    if (!(slope >= c.checks.stair_slope_min && slope <= c.checks.stair_slope_max)) {
      res.failures.push_back("stair scaling: log-log slope " + format_double(slope) + " outside [" +
                             format_double(c.checks.stair_slope_min) + ", " + format_double(c.checks.stair_slope_max) +
                             "]");
    }
  } else {
    summary["slope"] = nullptr;
  }
  summary["failures"] = res.failures;
  summary["ok"] = res.failures.empty();
  const fs::path csv = ctx.out_dir / "stair_scan.csv";
  const fs::path js = ctx.out_dir / "stair_scan_summary.json";
  table.save(csv);
  write_json(js, summary);
  log_of(ctx) << "stair_scan rows=" << rows.size() << " slope="
              << (summary["slope"].is_null() ? std::string("n/a") : format_double(summary["slope"].get<double>()))
              << "\n";
  res.report = summary;
  res.written = {csv, js};
  write_job(ctx, res);
  return res;
}

CommandResult cmd_block_verify(const RunContext& ctx) {
  const JobConfig& c = ctx.config;
  if (c.sizes.empty() || c.betas.empty()) throw InvalidArgument("block_verify needs sizes and betas");
  for (int s : c.sizes) check_desk_limits(Command::block_verify, c.model, s, c.sector);
  CommandResult res;
  json entries = json::array();
  const auto& tol = c.tolerances;
  for (int size : c.sizes) {
    auto model = build_model(c.model, size);
    for (double beta : c.betas) {
      if (std::isinf(beta)) throw Refusal("block_verify: beta = inf has no Gibbs weights");
      const GibbsModel g = gibbs_state(model, beta);
      const Superoperator l = davies_lindbladian(g, local_subset(*model));
      json entry = {{"model", c.model}, {"size", size}, {"beta", beta_to_json(beta)}};
      json sectors = json::array();
      if (c.model == "ising") {
        for (const auto& sec : all_lambda_sectors(static_cast<std::size_t>(size))) {
          std::string name = "Lambda{";
          for (std::size_t b : sec.bonds()) name += (name.back() == '{' ? "" : ",") + std::to_string(b);
          name += "}";
          const Restriction r = restrict_superoperator(l, lambda_sector_basis(g, sec));
          const DMatR dense = r.dense().real();
          const double dev = (dense - tensor_sector_matrix(sec, beta)).cwiseAbs().maxCoeff();
          const SpMatR neg = -real_part(r.matrix);
          const bool has_int = !sec.gamma(PairClass::interaction).empty();
          const bool all_flip = sec.mask() == 0;
          const SpectralResult sr = spectral_gap(neg, {}, spectral_options(c, neg.rows(), true));
          json s = {{"sector", name},
                    {"dim", neg.rows()},
                    {"leakage", r.leakage},
                    {"block_deviation", dev},
                    {"min_eig", sr.min_eigenvalue},
                    {"gap", sr.gap},
                    {"gamma_flip", sec.gamma(PairClass::flip).size()},
                    {"gamma_ab", sec.gamma(PairClass::ab).size()},
                    {"gamma_int", sec.gamma(PairClass::interaction).size()}};
          const std::string where = " in " + name + " (N " + std::to_string(size) + ", beta " + beta_tag(beta) + ")";
          if (r.leakage > tol.leakage) res.failures.push_back("block invariance: leakage " + format_double(r.leakage) + where);
          if (dev > tol.block) res.failures.push_back("local block formula: deviation " + format_double(dev) + where);
          if (has_int && sr.min_eigenvalue < 0.5 - tol.floor) {
            res.failures.push_back("interaction floor: min eigenvalue " + format_double(sr.min_eigenvalue) + where);
          }
          if (all_flip && sr.gap < 0.5 - tol.floor) {
            res.failures.push_back("flip floor: gap " + format_double(sr.gap) + where);
          }
          sectors.push_back(s);
        }
      } else {
        const Restriction ref = restrict_superoperator(l, syndrome_sector_basis(g));
        const DMat ref_dense = ref.dense();
        for (const auto& label : SectorLabel::all()) {
          const Restriction r = restrict_superoperator(l, logical_sector_basis(g, label));
          const double diff = (r.dense() - ref_dense).cwiseAbs().maxCoeff();
          sectors.push_back({{"sector", label.str()}, {"dim", r.matrix.rows()}, {"leakage", r.leakage}, {"difference_from_syndrome", diff}});
          const std::string where = " in sector " + label.str() + " (beta " + beta_tag(beta) + ")";
          if (r.leakage > tol.leakage) res.failures.push_back("block invariance: leakage " + format_double(r.leakage) + where);
          if (diff > tol.block) res.failures.push_back("logical-label independence: difference " + format_double(diff) + where);
        }
        const SpMat neg = -ref.matrix;
        const SpectralResult sr = spectral_gap(neg, {}, spectral_options(c, neg.rows(), true));
        entry["syndrome_gap"] = sr.to_json();
        entry["syndrome_leakage"] = ref.leakage;
      }
      entry["sectors"] = sectors;
      entries.push_back(entry);
      log_of(ctx) << "block_verify " << c.model << " size=" << size << " beta=" << beta_tag(beta)
                  << " sectors=" << sectors.size() << "\n";
    }
  }
  res.report = {{"command", "block_verify"}, {"entries", entries}, {"failures", res.failures},
                {"ok", res.failures.empty()}};
  const fs::path js = ctx.out_dir / "block_verify.json";
  write_json(js, res.report);
  res.written = {js};
  write_job(ctx, res);
  return res;
}

CommandResult cmd_mix_run(const RunContext& ctx) {
  const JobConfig& c = ctx.config;
  if (c.sizes.empty() || c.betas.empty()) throw InvalidArgument("mix_run needs sizes and betas");
  for (int s : c.sizes) check_desk_limits(Command::mix_run, c.model, s, c.sector);
  for (double b : c.betas) {
    if (!std::isfinite(b)) throw Refusal("mix_run: chi2 needs a finite beta");
  }
  if (c.mix.grid_points < 2) throw InvalidArgument("mix.grid_points must be >= 2");
  std::vector<std::pair<int, double>> grid;
  for (int s : c.sizes) {
    for (double b : c.betas) grid.emplace_back(s, b);
  }
  struct Outcome {
    std::string tag, state;
    int size;
    std::size_t n_qubits;
    double beta, gap;
    EvolutionTrace trace;
    double t_mix, t_mix_bound;
  };
  std::vector<std::vector<Outcome>> outcomes(grid.size());
  parallel_for(grid.size(), ctx.threads, [&](std::size_t i) {
    const auto [size, beta] = grid[i];
    const std::uint64_t seed = c.seed * 1000003ULL + i;
    std::mt19937_64 rng(seed);
    auto model = build_model(c.model, size);
    const GibbsModel g = gibbs_state(model, beta);
    const Superoperator l = davies_lindbladian(g, coupling_operators(*model, c.couplings));
    const Superoperator m = master_hamiltonian(l, g);
    const SpMat neg = -m.matrix;
    const SpectralResult gap = spectral_gap(neg, {master_kernel_vector(g)}, spectral_options(c, neg.rows(), true));
    if (!(gap.gap > 0.0) || !std::isfinite(gap.gap)) throw NumericalError("mix_run: generator has no positive gap");
    const double t_max = c.mix.t_max > 0.0 ? c.mix.t_max : c.mix.t_max_gaps / gap.gap;
    const auto times = uniform_grid(t_max, static_cast<std::size_t>(c.mix.grid_points));
    MixingOptions mo;
    mo.bound_slack = c.tolerances.bound_slack;
    mo.throw_on_violation = false;
    std::string prop = c.mix.propagator;
    if (prop == "auto") prop = l.op_dim() <= 256 ? "expm" : "spectral";
    std::unique_ptr<Evolver> evolver;
    std::unique_ptr<SpectralPropagator> spectral;
    if (prop == "expm" || prop == "krylov") {
      EvolveOptions eo;
      if (prop == "krylov") eo.dense_limit = 0;
      evolver = std::make_unique<Evolver>(schrodinger_adjoint(l), eo);
    } else if (prop == "spectral") {
      spectral = std::make_unique<SpectralPropagator>(m, g);
    } else {
      throw InvalidArgument("mix.propagator must be auto, expm, krylov or spectral");
    }
    for (auto& [name, rho0] : initial_states(c, g, *model, rng)) {
      Outcome o;
      o.state = name;
      o.size = size;
      o.n_qubits = model->num_qubits();
      o.beta = beta;
      o.gap = gap.gap;
      o.trace = evolver ? mixing_trace(*evolver, rho0, g, times, gap.gap, mo)
                        : mixing_trace(*spectral, rho0, g, times, gap.gap, mo);
      o.t_mix = mixing_time(o.trace, c.mix.eps);
      o.t_mix_bound = o.trace.chi2_initial > 0.0 ? mixing_time_bound(o.trace.chi2_initial, c.mix.eps, gap.gap) : 0.0;
      o.tag = c.model + "_" + std::to_string(size) + "_b" + beta_tag(beta) + "_" + name;
      o.trace.table().save(ctx.out_dir / "mix" / (o.tag + ".csv"));
      json meta = trace_meta(c, o.n_qubits, beta, name, gap.gap, seed);
      meta["summary"] = o.trace.summary();
      meta["propagator"] = prop;
      write_json(ctx.out_dir / "mix" / (o.tag + ".json"), meta);
      outcomes[i].push_back(std::move(o));
    }
  });
  CommandResult res;
  CsvTable table({"model", "N", "beta", "initial_state", "gap", "two_gap", "fitted_rate", "chi2_initial",
                  "log_worst_case_chi2", "max_bound_ratio", "bound_ok", "monotone", "t_mix", "t_mix_bound"});
  json traces = json::array();
  for (const auto& group : outcomes) {
    for (const auto& o : group) {
      table.add_row({c.model, static_cast<long long>(o.n_qubits), o.beta, o.state, o.gap, 2.0 * o.gap,
                     o.trace.fitted_rate, o.trace.chi2_initial, o.trace.log_worst_case_chi2,
                     o.trace.max_bound_ratio, static_cast<long long>(o.trace.bound_ok),
                     static_cast<long long>(o.trace.monotone), o.t_mix, o.t_mix_bound});
      json s = o.trace.summary();
      s["tag"] = o.tag;
      s["t_mix"] = o.t_mix;
      s["t_mix_bound"] = o.t_mix_bound;
      s["final_trace_distance"] = o.trace.trace_dist.back();
      traces.push_back(s);
      if (!o.trace.bound_ok) {
        res.failures.push_back("chi2 decay bound: " + o.tag + " worst ratio " + format_double(o.trace.max_bound_ratio));
      }
      if (!o.trace.monotone) res.failures.push_back("chi2 monotonicity: " + o.tag);
    }
  }
  const fs::path csv = ctx.out_dir / "mix_run.csv";
  const fs::path js = ctx.out_dir / "mix_run_summary.json";
  table.save(csv);
  res.report = {{"command", "mix_run"}, {"traces", traces}, {"failures", res.failures}, {"ok", res.failures.empty()}};
  write_json(js, res.report);
  log_of(ctx) << "mix_run traces=" << traces.size() << " failures=" << res.failures.size() << "\n";
  res.written = {csv, js};
  write_job(ctx, res);
  return res;
}

CommandResult cmd_model_dump(const RunContext& ctx) {
  const JobConfig& c = ctx.config;
  if (c.sizes.empty()) throw InvalidArgument("model_dump needs sizes");
  for (int s : c.sizes) check_desk_limits(Command::model_dump, c.model, s, c.sector);
  CommandResult res;
  json all = json::array();
  for (int size : c.sizes) {
    json doc;
    if (c.model == "toric") {
      const TorusLattice lat(static_cast<std::size_t>(size));
      doc = lat.to_json();
      json stars = json::array(), plaqs = json::array();
      for (std::size_t v = 0; v < lat.num_stars(); ++v) stars.push_back(star_operator(lat, v).str());
      for (std::size_t p = 0; p < lat.num_plaquettes(); ++p) plaqs.push_back(plaquette_operator(lat, p).str());
      doc["star_operators"] = stars;
      doc["plaquette_operators"] = plaqs;
      const LogicalOperators lo = logical_operators(lat);
      doc["logical_operators"] = {{"xbar1", lo.xbar1.str()}, {"zbar1", lo.zbar1.str()},
                                  {"xbar2", lo.xbar2.str()}, {"zbar2", lo.zbar2.str()}};
      doc["leaf_path_count"] = lat.leaf_paths().size();
    } else {
      const RingLattice ring(static_cast<std::size_t>(size));
      doc = ring.to_json();
      json terms = json::array();
      for (const auto& t : ising_terms(ring).terms) terms.push_back({{"coefficient", t.coefficient}, {"pauli", t.pauli.str()}});
      doc["terms"] = terms;
      doc["logical_operators"] = {{"xbar", ising_xbar(ring.n_sites).str()}, {"zbar", ising_zbar(ring.n_sites).str()}};
    }
    doc["model"] = c.model;
    doc["size"] = size;
    const fs::path p = ctx.out_dir / ("model_" + c.model + "_" + std::to_string(size) + ".json");
    write_json(p, doc);
    res.written.push_back(p);
    all.push_back(p.filename().string());
    log_of(ctx) << "model_dump " << c.model << " size=" << size << " -> " << p.string() << "\n";
  }
  res.report = {{"command", "model_dump"}, {"files", all}, {"ok", true}};
  write_job(ctx, res);
  return res;
}

CommandResult run_command(const RunContext& ctx) {
  switch (ctx.config.command) {
    case Command::gap_scan: return cmd_gap_scan(ctx);
    case Command::stair_scan: return cmd_stair_scan(ctx);
    case Command::block_verify: return cmd_block_verify(ctx);
    case Command::mix_run: return cmd_mix_run(ctx);
    default: return cmd_model_dump(ctx);
  }
}

}  // namespace stabgibbs::cli

// Copyright 2026 The ssrdual Authors
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

#include "ssrdual/siv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "ssrdual/entanglement.hpp"
#include "ssrdual/states.hpp"

namespace ssrdual {

const char* to_string(SivConvention convention) {
  return convention == SivConvention::FactorFour ? "factor_four" : "unnormalized";
}

const char* to_string(SivMethod method) {
  switch (method) {
    case SivMethod::PureDirect:
      return "pure_direct";
    case SivMethod::ClosedForm:
      return "closed_form";
    case SivMethod::Minimizer:
      return "minimizer";
  }
  return "unknown";
}

double SivReport::value_in(SivConvention target) const {
  if (target == convention) return value;
  return target == SivConvention::FactorFour ? 4.0 * value : value / 4.0;
}

ComplexMatrix DecompositionCandidate::mixture() const {
  if (states.empty()) throw std::invalid_argument("empty decomposition");
  ComplexMatrix rho(states.front().dim());
  for (std::size_t i = 0; i < states.size(); ++i) rho += states[i].projector() * Complex{weights[i]};
  return rho;
}

namespace {

std::vector<double> diagonal_of(const ComplexMatrix& n_local) {
  if (!n_local.is_diagonal(kStructuralTol)) {
    throw std::invalid_argument("local charge operator must be diagonal");
  }
  std::vector<double> n(n_local.dim());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = n_local(i, i).real();
  return n;
}

// 4 (<N^2> - <N>^2 / <u|u>) for an unnormalised vector u; equals w V(psi)
// with w = <u|u>.
double weighted_variance(std::span<const Complex> u, std::span<const double> n) {
  double nn = 0.0, a1 = 0.0, a2 = 0.0;
  for (std::size_t s = 0; s < u.size(); ++s) {
    const double w = std::norm(u[s]);
    nn += w;
    a1 += n[s] * w;
    a2 += n[s] * n[s] * w;
  }
  if (nn < 1e-300) return 0.0;
  return std::max(0.0, 4.0 * (a2 - a1 * a1 / nn));
}

// Decompositions of one global-charge block: rows of an m x r isometry Q
// mix the subnormalised eigenvectors v_j into members u_i = sum_j Q_ij v_j.
class BlockMinimizer {
 public:
  BlockMinimizer(std::vector<std::vector<Complex>> ensemble, std::vector<double> n, std::size_t m)
      : v_(std::move(ensemble)), n_(std::move(n)), d_(n_.size()), r_(v_.size()), m_(m),
        q_(m * r_), u_(d_) {}

  std::size_t num_params() const { return 2 * m_ * r_; }

  // Objective for raw parameters; +inf when the columns are degenerate.
  double evaluate(std::span<const double> x) {
    if (!orthonormalize(x)) return std::numeric_limits<double>::infinity();
    double f = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      member(i);
      f += weighted_variance(u_, n_);
    }
    return f;
  }

  // Members of the decomposition for the most recently evaluated parameters.
  std::vector<std::vector<Complex>> members(std::span<const double> x) {
    orthonormalize(x);
    std::vector<std::vector<Complex>> out;
    for (std::size_t i = 0; i < m_; ++i) {
      member(i);
      out.push_back(u_);
    }
    return out;
  }

  std::vector<double> identity_start() const {
    std::vector<double> x(num_params(), 0.0);
    for (std::size_t j = 0; j < r_; ++j) x[2 * (j * r_ + j)] = 1.0;
    return x;
  }

 private:
  bool orthonormalize(std::span<const double> x) {
    for (std::size_t k = 0; k < m_ * r_; ++k) q_[k] = Complex{x[2 * k], x[2 * k + 1]};
    // Modified Gram-Schmidt over the r columns of the row-major m x r matrix.
    for (std::size_t j = 0; j < r_; ++j) {
      for (std::size_t l = 0; l < j; ++l) {
        Complex dot{};
        for (std::size_t i = 0; i < m_; ++i) dot += std::conj(q_[i * r_ + l]) * q_[i * r_ + j];
        for (std::size_t i = 0; i < m_; ++i) q_[i * r_ + j] -= dot * q_[i * r_ + l];
      }
      double norm2 = 0.0;
      for (std::size_t i = 0; i < m_; ++i) norm2 += std::norm(q_[i * r_ + j]);
      if (norm2 < 1e-24) return false;
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t i = 0; i < m_; ++i) q_[i * r_ + j] *= inv;
    }
    return true;
  }

  void member(std::size_t i) {
    std::fill(u_.begin(), u_.end(), Complex{});
    for (std::size_t j = 0; j < r_; ++j) {
      const Complex qij = q_[i * r_ + j];
      for (std::size_t s = 0; s < d_; ++s) u_[s] += qij * v_[j][s];
    }
  }

  std::vector<std::vector<Complex>> v_;
  std::vector<double> n_;
  std::size_t d_, r_, m_;
  std::vector<Complex> q_;
  std::vector<Complex> u_;
};

struct Refinement {
  double value;
  std::vector<double> params;
  std::vector<double> trace;
};

Refinement pattern_descent(BlockMinimizer& problem, std::vector<double> x, const SivOptions& opts) {
  double f = problem.evaluate(x);
  std::vector<double> trace{f};
  double step = 0.25;
  for (int it = 0; it < opts.max_iterations && f > 0.0; ++it) {
    bool improved = false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (double dir : {1.0, -1.0}) {
        const double saved = x[k];
        x[k] = saved + dir * step;
        const double f2 = problem.evaluate(x);
        if (f2 < f) {
          f = f2;
          improved = true;
          break;
        }
        x[k] = saved;
      }
    }
    trace.push_back(f);
    if (!improved) {
      step *= 0.5;
      if (step < opts.tol) break;
    }
  }
  return Refinement{f, std::move(x), std::move(trace)};
}

struct BlockResult {
  BlockContribution contribution;
  std::vector<double> trace;
  std::vector<std::vector<Complex>> members;  // block-local, unnormalised
};

BlockResult minimize_block(const ComplexMatrix& block, std::vector<double> n, int charge,
                           std::size_t block_index, const SivOptions& opts) {
  const auto eig = hermitian_eigen(block);
  const std::size_t d = block.dim();
  std::vector<std::vector<Complex>> ensemble;
  for (std::size_t k = 0; k < d; ++k) {
    if (eig.values[k] <= 1e-14) continue;
    const double s = std::sqrt(eig.values[k]);
    std::vector<Complex> vk(d);
    for (std::size_t r = 0; r < d; ++r) vk[r] = s * eig.vectors(r, k);
    ensemble.push_back(std::move(vk));
  }

  BlockResult out{BlockContribution{charge, d, 0.0}, {}, {}};
  if (ensemble.empty()) return out;

  const bool definite = std::all_of(n.begin(), n.end(), [&](double x) { return x == n.front(); });
  if (definite) {
    out.members = std::move(ensemble);
    return out;
  }

  const std::size_t m = std::max(opts.output_factor * d, ensemble.size());
  BlockMinimizer problem(ensemble, std::move(n), m);

  std::optional<Refinement> best;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::vector<double> start;
    if (restart == 0) {
      start = problem.identity_start();
    } else {
      std::seed_seq seq{static_cast<std::uint32_t>(opts.seed),
                        static_cast<std::uint32_t>(opts.seed >> 32),
                        static_cast<std::uint32_t>(block_index),
                        static_cast<std::uint32_t>(restart)};
      std::mt19937_64 rng(seq);
      std::normal_distribution<double> gauss;
      start.resize(problem.num_params());
      for (auto& xi : start) xi = gauss(rng);
    }
    Refinement r = pattern_descent(problem, std::move(start), opts);
    // Strict comparison keeps the lowest restart index on ties.
    if (!best || r.value < best->value) best = std::move(r);
  }

  out.contribution.value = best->value;
  out.trace = best->trace;
  out.members = problem.members(best->params);
  return out;
}

}  // namespace

double siv_pure(const Ket& psi, const ComplexMatrix& n_local) {
  if (psi.dim() != n_local.dim()) throw std::invalid_argument("siv_pure: dimension mismatch");
  return weighted_variance(psi.amplitudes(), diagonal_of(n_local));
}

double siv_pure(const Ket& psi, const ComplexMatrix& n_local, SivConvention convention) {
  const double v = siv_pure(psi, n_local);
  return convention == SivConvention::FactorFour ? v : v / 4.0;
}

double siv_of(const DecompositionCandidate& candidate, const ComplexMatrix& n_local) {
  double s = 0.0;
  for (std::size_t i = 0; i < candidate.states.size(); ++i)
    s += candidate.weights[i] * siv_pure(candidate.states[i], n_local);
  return s;
}

SivReport siv_formation(const ComplexMatrix& rho, const ComplexMatrix& n_local,
                        const ChargeAssignment& charges, const SivOptions& opts) {
  if (opts.restarts < 1 || opts.max_iterations < 1 || !(opts.tol > 0.0) ||
      opts.output_factor < 1) {
    throw std::invalid_argument("siv_formation: options must be positive");
  }
  if (rho.dim() != n_local.dim()) throw std::invalid_argument("siv_formation: dimension mismatch");
  require_density_matrix(rho);
  const std::vector<double> n = diagonal_of(n_local);
  const auto fact = QubitFactorization::from_dim(rho.dim());

  std::vector<int> g(rho.dim());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = charges.global_charge(fact, i);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[i] != g[j] && std::abs(rho(i, j)) > kSpectralTol) {
        throw NoSsrDecomposition("no SSR decomposition exists: coherence between global charges " +
                                 std::to_string(g[i]) + " and " + std::to_string(g[j]));
      }

  std::map<int, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < g.size(); ++i) blocks[g[i]].push_back(i);

  MinimizerDiagnostics diag;
  diag.restarts = opts.restarts;
  diag.seed = opts.seed;
  DecompositionCandidate candidate;
  double total = 0.0;
  std::size_t block_index = 0;
  for (const auto& [charge, idx] : blocks) {
    std::vector<double> n_block(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) n_block[k] = n[idx[k]];
    BlockResult res = minimize_block(principal_submatrix(rho, idx), std::move(n_block), charge,
                                     block_index++, opts);
    total += res.contribution.value;
    diag.blocks.push_back(res.contribution);

    // Pad shorter traces with their final value; sums stay non-increasing.
    if (!res.trace.empty()) {
      auto& acc = diag.best_objective_trace;
      const double acc_last = acc.empty() ? 0.0 : acc.back();
      const std::size_t len = std::max(acc.size(), res.trace.size());
      acc.resize(len, acc_last);
      for (std::size_t k = 0; k < len; ++k) acc[k] += k < res.trace.size() ? res.trace[k] : res.trace.back();
    }

    for (const auto& u : res.members) {
      double w = 0.0;
      for (const auto& z : u) w += std::norm(z);
      if (w <= 1e-14) continue;
      std::vector<Complex> full(rho.dim());
      for (std::size_t k = 0; k < idx.size(); ++k) full[idx[k]] = u[k];
      candidate.weights.push_back(w);
      candidate.states.push_back(Ket::normalized(std::move(full)));
    }
  }

  SivReport report;
  report.value = total;
  report.convention = SivConvention::FactorFour;
  report.method = SivMethod::Minimizer;
  report.diagnostics = std::move(diag);
  report.decomposition = std::move(candidate);
  return report;
}

SivReport werner_siv_closed_form(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("werner_siv_closed_form: p = " + std::to_string(p) +
                                " outside [0, 1]");
  }
  SivReport report;
  report.value = p * p / (2.0 * (1.0 + p));
  report.convention = SivConvention::Unnormalized;
  report.method = SivMethod::ClosedForm;
  return report;
}

double separability_siv_bound(double tol) {
  return werner_siv_closed_form(werner_ppt_threshold(tol)).value;
}

}  // namespace ssrdual

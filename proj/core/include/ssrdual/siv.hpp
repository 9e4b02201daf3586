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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ratio>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssrdual/matcore.hpp"
#include "ssrdual/ssr.hpp"

namespace ssrdual {

// FactorFour: V = 4 (<N^2> - <N>^2). Unnormalized: the bare variance.
enum class SivConvention { FactorFour, Unnormalized };
enum class SivMethod { PureDirect, ClosedForm, Minimizer };

const char* to_string(SivConvention convention);
const char* to_string(SivMethod method);

struct SivOptions {
  int restarts = 32;
  int max_iterations = 2000;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  // Number of decomposition members per charge block, as a multiple of the
  // block dimension.
  std::size_t output_factor = 2;
};

struct BlockContribution {
  int global_charge;
  std::size_t dim;
  double value;  // FactorFour
};

struct MinimizerDiagnostics {
  int restarts = 0;
  std::uint64_t seed = 0;
  // Objective after each refinement pass of the winning restart, summed
  // over blocks that needed refinement.
  std::vector<double> best_objective_trace;
  std::vector<BlockContribution> blocks;
};

// Pure-state ensemble sum_i w_i |psi_i><psi_i|.
struct DecompositionCandidate {
  std::vector<double> weights;
  std::vector<Ket> states;

  ComplexMatrix mixture() const;
};

struct SivReport {
  double value = 0.0;
  SivConvention convention = SivConvention::FactorFour;
  SivMethod method = SivMethod::PureDirect;
  std::optional<MinimizerDiagnostics> diagnostics;
  std::optional<DecompositionCandidate> decomposition;

  double value_in(SivConvention target) const;
};

class NoSsrDecomposition : public std::invalid_argument {
 public:
  explicit NoSsrDecomposition(const std::string& what) : std::invalid_argument(what) {}
};

// 4 (<psi|N^2|psi> - <psi|N|psi>^2) for a diagonal local charge operator.
double siv_pure(const Ket& psi, const ComplexMatrix& n_local);
double siv_pure(const Ket& psi, const ComplexMatrix& n_local, SivConvention convention);

// sum_i w_i V(psi_i), FactorFour.
double siv_of(const DecompositionCandidate& candidate, const ComplexMatrix& n_local);

// Convex-roof minimum of V over ensembles of SSR-pure states. Each global
// charge block is decomposed separately; its ensembles are the eigen-ensemble
// mixed by an isometry, searched with seeded random restarts and coordinate
// pattern descent. Deterministic for a fixed seed.
//
// Throws NoSsrDecomposition if rho has coherence between different global
// charges above kSpectralTol.
SivReport siv_formation(const ComplexMatrix& rho, const ComplexMatrix& n_local,
                        const ChargeAssignment& charges, const SivOptions& opts = {});

// p^2 / (2 (1 + p)), reported in the Unnormalized convention.
SivReport werner_siv_closed_form(double p);

template <class P>
using WernerSivClosedForm =
    std::ratio_divide<std::ratio_multiply<P, P>,
                      std::ratio_multiply<std::ratio<2>, std::ratio_add<std::ratio<1>, P>>>;

// Closed-form SIV at the Werner PPT threshold (Unnormalized).
double separability_siv_bound(double tol = 1e-9);

}  // namespace ssrdual

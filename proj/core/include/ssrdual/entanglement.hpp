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
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ssrdual/matcore.hpp"
#include "ssrdual/ssr.hpp"
#include "ssrdual/states.hpp"

namespace ssrdual {

// A state is reported entangled when its smallest partial-transpose
// eigenvalue falls below this value; anything in [-1e-10, 0) is treated as
// eigensolver noise.
inline constexpr double kEntanglementThreshold = -1e-10;

// Irreducible block of rho^Gamma holding the most negative eigenvalue.
struct BlockOrigin {
  std::vector<std::size_t> indices;
  // Local charges (q_alice, q_bob) shared by every index, when known.
  std::optional<std::pair<int, int>> charges;
};

struct PptReport {
  double min_eigenvalue = 0.0;
  double negativity = 0.0;
  bool entangled = false;
  std::optional<BlockOrigin> block_origin;  // set only when entangled
  // False when the report was computed on a state that was not twirled
  // first; such a verdict ignores superselection.
  bool ssr_effective = false;
};

std::string_view operational_note(const PptReport& report);

// Partial transpose over Bob's slots followed by a full eigendecomposition.
// Throws std::invalid_argument if rho is not a density matrix.
PptReport ppt_report(const ComplexMatrix& rho, const QubitFactorization& fact,
                     const PartyLayout& layout);

// Twirls rho under `charges` first, then runs ppt_report. The block origin
// is annotated with its local charge pair.
PptReport ppt_report_effective(const ComplexMatrix& rho, const QubitFactorization& fact,
                               const PartyLayout& layout, const ChargeAssignment& charges);

// Smallest eigenvalue of werner(p)^Gamma.
double werner_min_pt_eigenvalue(double p);

// Bisection on p in [0, 1] for the sign change of the Werner state's
// smallest partial-transpose eigenvalue. Result lies within tol of the
// crossing.
double werner_ppt_threshold(double tol);

struct DualityCertificate {
  bool frame_separable;
  bool dual_entangled;
};

// Frame verdict from werner(p); dual verdict from the twirled rho_p.
DualityCertificate duality_certificate(double p);

}  // namespace ssrdual

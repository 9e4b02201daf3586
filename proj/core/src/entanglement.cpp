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

#include "ssrdual/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ssrdual {

namespace {

std::vector<std::vector<std::size_t>> connected_blocks(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    std::vector<std::size_t> members{start};
    label[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const std::size_t i = members[head];
      for (std::size_t j = 0; j < n; ++j) {
        if (label[j] >= 0) continue;
        if (std::abs(m(i, j)) > kStructuralTol || std::abs(m(j, i)) > kStructuralTol) {
          label[j] = id;
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    blocks.push_back(std::move(members));
  }
  return blocks;
}

BlockOrigin locate_min_block(const ComplexMatrix& pt) {
  BlockOrigin best;
  double best_value = std::numeric_limits<double>::infinity();
  for (auto& block : connected_blocks(pt)) {
    const double lo = hermitian_eigen(principal_submatrix(pt, block)).values.front();
    if (lo < best_value) {
      best_value = lo;
      best.indices = std::move(block);
    }
  }
  return best;
}

}  // namespace

std::string_view operational_note(const PptReport& report) {
  return report.ssr_effective ? "effective state (twirled)"
                              : "not operationally meaningful under SSR";
}

PptReport ppt_report(const ComplexMatrix& rho, const QubitFactorization& fact,
                     const PartyLayout& layout) {
  fact.check_matrix(rho);
  require_density_matrix(rho);
  const ComplexMatrix pt = partial_transpose(rho, fact, layout.bob());
  const auto eig = hermitian_eigen(pt);

  PptReport report;
  report.min_eigenvalue = eig.values.front();
  double norm1 = 0.0;
  for (double x : eig.values) norm1 += std::abs(x);
  report.negativity = std::max(0.0, (norm1 - 1.0) / 2.0);
  report.entangled = report.min_eigenvalue < kEntanglementThreshold;
  if (report.entangled) report.block_origin = locate_min_block(pt);
  return report;
}

PptReport ppt_report_effective(const ComplexMatrix& rho, const QubitFactorization& fact,
                               const PartyLayout& layout, const ChargeAssignment& charges) {
  PptReport report = ppt_report(twirl(rho, fact, layout, charges), fact, layout);
  report.ssr_effective = true;
  if (report.block_origin) {
    const auto& idx = report.block_origin->indices;
    const int qa = charges.charge(fact, idx.front(), layout.alice());
    const int qb = charges.charge(fact, idx.front(), layout.bob());
    const bool uniform = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) {
      return charges.charge(fact, i, layout.alice()) == qa &&
             charges.charge(fact, i, layout.bob()) == qb;
    });
    if (uniform) report.block_origin->charges = std::pair{qa, qb};
  }
  return report;
}

double werner_min_pt_eigenvalue(double p) {
  const QubitFactorization fact(2);
  const std::size_t bob[] = {1};
  return hermitian_eigen(partial_transpose(werner(p), fact, bob)).values.front();
}

double werner_ppt_threshold(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("werner_ppt_threshold: tol must be positive");
  double lo = 0.0, hi = 1.0;
  // Invariant: werner(lo) is PPT, werner(hi) is not.
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (werner_min_pt_eigenvalue(mid) < 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DualityCertificate duality_certificate(double p) {
  const FramedSystem sys = system_with_frame(p);
  const PartyLayout frame_layout = two_qubit_layout();
  return DualityCertificate{
      !ppt_report(werner(p), QubitFactorization(2), frame_layout).entangled,
      ppt_report_effective(sys.rho, sys.fact, sys.layout, ChargeAssignment::every_slot())
          .entangled};
}

}  // namespace ssrdual

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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "ssrdual/entanglement.hpp"

using namespace ssrdual;

namespace {
const ChargeAssignment kAll = ChargeAssignment::every_slot();
}

TEST_CASE("ppt report on effective states") {
  SUBCASE("two copies") {
    const FramedSystem s = system_with_frame(1.0);
    const auto r = ppt_report_effective(two_copies().projector(), s.fact, s.layout, kAll);
    CHECK(std::abs(r.min_eigenvalue + 0.25) < 1e-10);
    CHECK(r.entangled);
    CHECK(r.ssr_effective);
    CHECK(r.negativity == doctest::Approx(0.25).epsilon(1e-10));
  }
  SUBCASE("rho_p has a single negative eigenvalue -p/4 in a 2x2 block") {
    for (int k = 1; k <= 20; ++k) {
      const double p = k / 20.0;
      const FramedSystem s = system_with_frame(p);
      const auto r = ppt_report_effective(s.rho, s.fact, s.layout, kAll);
      CHECK(std::abs(r.min_eigenvalue + p / 4) < 1e-10);
      CHECK(r.entangled);
      REQUIRE(r.block_origin);
      CHECK(r.block_origin->indices == std::vector<std::size_t>{0b0101, 0b1010});
      REQUIRE(r.block_origin->charges);
      CHECK(*r.block_origin->charges == std::pair{1, 1});
      const auto pt = partial_transpose(twirl(s.rho, s.fact, s.layout, kAll), s.fact, s.layout.bob());
      CHECK(std::abs(pt(0b0101, 0b1010) - Complex{p / 4}) < 1e-12);
      CHECK(std::abs(pt(0b1010, 0b0101) - Complex{p / 4}) < 1e-12);
      CHECK(pt(0b0101, 0b0101) == Complex{});
      CHECK(pt(0b1010, 0b1010) == Complex{});
    }
  }
  SUBCASE("maximally mixed") {
    for (std::size_t n : {2, 4}) {
      const QubitFactorization fact(n);
      std::vector<std::size_t> alice, bob;
      for (std::size_t s = 0; s < n; ++s) (s < n / 2 ? alice : bob).push_back(s);
      const PartyLayout layout(alice, bob, fact);
      const double d = static_cast<double>(fact.dim());
      const auto r = ppt_report(ComplexMatrix::identity(fact.dim()) * Complex{1.0 / d}, fact, layout);
      CHECK(r.min_eigenvalue == doctest::Approx(1.0 / d).epsilon(1e-12));
      CHECK_FALSE(r.entangled);
      CHECK_FALSE(r.block_origin);
      CHECK(r.negativity < 1e-12);
    }
  }
}

TEST_CASE("untwirled reports are flagged") {
  const FramedSystem s = system_with_frame(0.5);
  const auto raw = ppt_report(s.rho, s.fact, s.layout);
  CHECK_FALSE(raw.ssr_effective);
  CHECK(operational_note(raw) == "not operationally meaningful under SSR");
  CHECK(raw.entangled);
  CHECK_THROWS_AS(ppt_report(ComplexMatrix::identity(16), s.fact, s.layout), std::invalid_argument);
}

TEST_CASE("werner threshold") {
  SUBCASE("analytic smallest PT eigenvalue") {
    // werner(p)^Gamma has spectrum {(1+p)/4 (x3), (1-3p)/4}.
    for (int k = 0; k <= 20; ++k) {
      const double p = k / 20.0;
      CHECK(std::abs(werner_min_pt_eigenvalue(p) - (1 - 3 * p) / 4) < 1e-12);
    }
  }
  SUBCASE("bisection") {
    CHECK(std::abs(werner_ppt_threshold(1e-6) - 1.0 / 3) <= 1e-6);
    CHECK(std::abs(werner_ppt_threshold(1e-3) - 1.0 / 3) <= 1e-3);
    CHECK_THROWS(werner_ppt_threshold(0.0));
  }
  SUBCASE("grid scan oracle") {
    double first = -1;
    for (int k = 0; k <= 10000; ++k) {
      const double p = k / 10000.0;
      if (ppt_report(werner(p), QubitFactorization(2), two_qubit_layout()).entangled) {
        first = p;
        break;
      }
    }
    CHECK(std::abs(first - 1.0 / 3) < 2e-4);
  }
  SUBCASE("below and above") {
    CHECK_FALSE(ppt_report(werner(0.2), QubitFactorization(2), two_qubit_layout()).entangled);
    CHECK(ppt_report(werner(0.5), QubitFactorization(2), two_qubit_layout()).entangled);
  }
}

TEST_CASE("duality certificate") {
  const auto a = duality_certificate(0.2);
  CHECK(a.frame_separable);
  CHECK(a.dual_entangled);
  const auto b = duality_certificate(0.0);
  CHECK(b.frame_separable);
  CHECK_FALSE(b.dual_entangled);
  const auto c = duality_certificate(0.9);
  CHECK_FALSE(c.frame_separable);
  CHECK(c.dual_entangled);
  CHECK_THROWS(duality_certificate(1.5));
}

TEST_CASE("negativity is monotone in p") {
  double previous = -1.0;
  for (int k = 0; k <= 20; ++k) {
    const FramedSystem s = system_with_frame(k / 20.0);
    const double n = ppt_report_effective(s.rho, s.fact, s.layout, kAll).negativity;
    CHECK(n >= previous - 1e-12);
    previous = n;
  }
}

TEST_CASE("report invariants on random states") {
  testing::Generator gen(77);
  const QubitFactorization fact(4);
  const PartyLayout layout({0, 1}, {2, 3}, fact);
  for (int trial = 0; trial < 100; ++trial) {
    // products across the cut are never entangled
    CHECK_FALSE(ppt_report(tensor(gen.density(4), gen.density(4)), fact, layout).entangled);
    const auto rho = gen.density(16);
    const auto r = ppt_report(rho, fact, layout);
    const double tn = trace_norm(partial_transpose(rho, fact, layout.bob()));
    CHECK(std::abs(r.negativity - (tn - 1) / 2) < 1e-10);
    CHECK(r.entangled == (r.min_eigenvalue < kEntanglementThreshold));
  }
}

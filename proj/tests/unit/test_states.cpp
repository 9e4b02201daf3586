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
#include "ssrdual/states.hpp"

using namespace ssrdual;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("bell_psi") {
  const Ket psi = bell_psi();
  CHECK(psi.dim() == 4);
  CHECK(std::abs(psi[1] - Complex{kInvSqrt2}) < 1e-15);
  CHECK(std::abs(psi[2] - Complex{kInvSqrt2}) < 1e-15);
  CHECK(psi[0] == Complex{});
  CHECK(psi[3] == Complex{});
  const std::size_t a[] = {0}, b[] = {1};
  const ComplexMatrix half = ComplexMatrix::identity(2) * Complex{0.5};
  CHECK(max_abs_diff(partial_trace(psi.projector(), QubitFactorization(2), a), half) < 1e-15);
  CHECK(max_abs_diff(partial_trace(psi.projector(), QubitFactorization(2), b), half) < 1e-15);
}

TEST_CASE("werner") {
  CHECK(max_abs_diff(werner(0.0), ComplexMatrix::identity(4) * Complex{0.25}) < 1e-15);
  CHECK(max_abs_diff(werner(1.0), bell_psi().projector()) < 1e-15);

  // (1-p)/4 = 1/8 on the diagonal plus p/2 = 1/4 on |01>, |10>.
  const ComplexMatrix half = werner(0.5);
  const double diag[] = {0.125, 0.375, 0.375, 0.125};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(half(i, i) - Complex{diag[i]}) < 1e-15);
  CHECK(std::abs(half(1, 2) - Complex{0.25}) < 1e-15);
  CHECK(std::abs(half(2, 1) - Complex{0.25}) < 1e-15);
  int off = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c && half(r, c) != Complex{}) ++off;
  CHECK(off == 2);

  for (int k = 0; k <= 20; ++k) CHECK(is_density_matrix(werner(k / 20.0)));

  CHECK_THROWS_AS(werner(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(werner(1.01), std::invalid_argument);
  CHECK_THROWS_AS(werner(std::nan("")), std::invalid_argument);
}

TEST_CASE("party order permutation") {
  // |A_sys B_sys A_ref B_ref> = |0 0 1 1> becomes |A_sys A_ref B_sys B_ref> = |0 1 0 1>.
  const Ket e = Ket::basis(16, 0b0011);
  CHECK(std::abs(to_party_order(e)[0b0101] - Complex{1.0}) < 1e-15);
  const Ket f = Ket::basis(16, 0b1000);  // A_sys only
  CHECK(std::abs(to_party_order(f)[0b1000] - Complex{1.0}) < 1e-15);
  const Ket g = Ket::basis(16, 0b0100);  // B_sys only -> slot 2
  CHECK(std::abs(to_party_order(g)[0b0010] - Complex{1.0}) < 1e-15);
  const Ket h = Ket::basis(16, 0b0010);  // A_ref only -> slot 1
  CHECK(std::abs(to_party_order(h)[0b0100] - Complex{1.0}) < 1e-15);
}

TEST_CASE("two copies") {
  const Ket psi = two_copies();
  int nonzero = 0;
  for (std::size_t i = 0; i < 16; ++i)
    if (std::abs(psi[i]) > 1e-15) {
      ++nonzero;
      CHECK(std::abs(psi[i] - Complex{0.5}) < 1e-15);
    }
  CHECK(nonzero == 4);
  // |00>_A|11>_B, |11>_A|00>_B, |01>_A|10>_B, |10>_A|01>_B
  for (std::size_t i : {0b0011, 0b1100, 0b0110, 0b1001}) CHECK(std::abs(psi[i]) > 0.4);

  SUBCASE("alice-bob exchange symmetry") {
    const std::size_t swap_parties[] = {2, 3, 0, 1};
    const Ket swapped = permute_slots(psi, QubitFactorization(4), swap_parties);
    for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(swapped[i] - psi[i]) < 1e-15);
  }
  SUBCASE("matches the p = 1 framed system") {
    CHECK(max_abs_diff(system_with_frame(1.0).rho, psi.projector()) < 1e-15);
  }
}

TEST_CASE("system with frame") {
  const std::size_t ref_slots[] = {slots::kASys, slots::kBSys};
  const std::size_t sys_slots[] = {slots::kARef, slots::kBRef};
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    const FramedSystem s = system_with_frame(p);
    CHECK(std::abs(s.rho.trace() - Complex{1.0}) < 1e-12);
    CHECK(max_abs_diff(partial_trace(s.rho, s.fact, ref_slots), werner(p)) < 1e-12);
    CHECK(max_abs_diff(partial_trace(s.rho, s.fact, sys_slots), bell_psi().projector()) < 1e-12);
  }
  const FramedSystem s0 = system_with_frame(0.0);
  CHECK(max_abs_diff(s0.rho, to_party_order(tensor(bell_psi().projector(),
                                                   ComplexMatrix::identity(4) * Complex{0.25}))) <
        1e-15);
  CHECK(s0.layout.alice().size() == 2);
  CHECK(s0.layout.alice()[0] == slots::kASys);
  CHECK(s0.layout.bob()[1] == slots::kBRef);
  CHECK_THROWS(system_with_frame(2.0));
}

TEST_CASE("hyper state") {
  const Ket h = hyper_state();
  // (pol1 pol2 mom1 mom2) in {01, 10} x {01, 10}
  for (std::size_t pol : {0b01, 0b10})
    for (std::size_t mom : {0b01, 0b10}) CHECK(std::abs(h[(pol << 2) | mom] - Complex{0.5}) < 1e-15);
  const std::size_t mom_slots[] = {2, 3};
  CHECK(max_abs_diff(partial_trace(h.projector(), QubitFactorization(4), mom_slots),
                     bell_psi().projector()) < 1e-15);
}

TEST_CASE("party layout validation") {
  const QubitFactorization four(4);
  CHECK_NOTHROW(PartyLayout({0, 1}, {2, 3}, four));
  CHECK_THROWS(PartyLayout({0, 1}, {1, 2, 3}, four));
  CHECK_THROWS(PartyLayout({0}, {2, 3}, four));
  CHECK_THROWS(PartyLayout({0, 1}, {2, 4}, four));
}

TEST_CASE("encoded basis") {
  using EB = EncodedBasis;
  CHECK(EB::encode({EB::Momentum::k, EB::Species::a}) == 0);
  CHECK(EB::encode({EB::Momentum::kbar, EB::Species::b}) == 1);
  CHECK(EB::decode(0) == EB::Mode{EB::Momentum::k, EB::Species::a});
  CHECK(EB::decode(1) == EB::Mode{EB::Momentum::kbar, EB::Species::b});
  CHECK_THROWS(EB::encode({EB::Momentum::k, EB::Species::b}));
}

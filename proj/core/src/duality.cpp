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

#include "ssrdual/duality.hpp"

#include <cmath>
#include <vector>

namespace ssrdual {

namespace {

using P = Polarization;
using M = Momentum;

constexpr std::size_t swap_particles(std::size_t idx) { return ((idx & 3U) << 2) | (idx >> 2); }

}  // namespace

TwoParticleState::TwoParticleState(Statistics statistics,
                                   std::array<Complex, kTableSize> amplitudes)
    : statistics_(statistics), amplitudes_(amplitudes) {
  double n2 = 0.0;
  for (const auto& z : amplitudes_) n2 += std::norm(z);
  if (std::abs(n2 - 1.0) > kStructuralTol) {
    throw std::invalid_argument("two-particle amplitudes not normalised");
  }
  if (statistics_ == Statistics::Bosonic && !exchange_symmetric()) {
    throw std::invalid_argument("bosonic amplitudes must be exchange-symmetric");
  }
}

bool TwoParticleState::exchange_symmetric(double tol) const {
  for (std::size_t i = 0; i < kTableSize; ++i)
    if (std::abs(amplitudes_[i] - amplitudes_[swap_particles(i)]) > tol) return false;
  return true;
}

Ket TwoParticleState::as_ket() const {
  return Ket::from_amplitudes(std::vector<Complex>(amplitudes_.begin(), amplitudes_.end()));
}

Ket TwoParticleState::as_hyper_ket() const {
  const std::size_t order[] = {0, 2, 1, 3};
  return permute_slots(as_ket(), QubitFactorization(4), order);
}

TwoParticleState pdc_bosonic() {
  std::array<Complex, 16> a{};
  a[TwoParticleState::index(P::H, M::k, P::V, M::kbar)] = 0.5;
  a[TwoParticleState::index(P::V, M::k, P::H, M::kbar)] = 0.5;
  a[TwoParticleState::index(P::H, M::kbar, P::V, M::k)] = 0.5;
  a[TwoParticleState::index(P::V, M::kbar, P::H, M::k)] = 0.5;
  return TwoParticleState(Statistics::Bosonic, a);
}

TwoParticleState pdc_distinguishable() {
  const double r = 1.0 / std::sqrt(2.0);
  std::array<Complex, 16> a{};
  a[TwoParticleState::index(P::H, M::k, P::V, M::kbar)] = r;
  a[TwoParticleState::index(P::V, M::k, P::H, M::kbar)] = r;
  return TwoParticleState(Statistics::Distinguishable, a);
}

TwoParticleState symmetrized_distinguishable() {
  std::array<Complex, 16> a{};
  a[TwoParticleState::index(P::H, M::k, P::V, M::kbar)] = 0.5;
  a[TwoParticleState::index(P::V, M::k, P::H, M::kbar)] = 0.5;
  a[TwoParticleState::index(P::V, M::kbar, P::H, M::k)] = 0.5;
  a[TwoParticleState::index(P::H, M::kbar, P::V, M::k)] = 0.5;
  return TwoParticleState(Statistics::Distinguishable, a);
}

LabeledBipartiteState relabel(const TwoParticleState& state, LabelDoF label) {
  // Bit positions inside a table index for particle 1 and particle 2.
  const unsigned label_shift1 = label == LabelDoF::Momentum ? 2 : 3;
  const unsigned other_shift1 = label == LabelDoF::Momentum ? 3 : 2;
  const unsigned label_shift2 = label_shift1 - 2;
  const unsigned other_shift2 = other_shift1 - 2;

  const auto& amps = state.amplitudes();
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if (std::abs(amps[idx]) <= kStructuralTol) continue;
    if (((idx >> label_shift1) & 1U) == ((idx >> label_shift2) & 1U)) {
      throw LabelCollision(std::string("label collision: both particles share a ") +
                           to_string(label) + " value");
    }
  }

  if (state.statistics() == Statistics::Bosonic) {
    // phi(x, y) = (psi(x, L0; y, L1) + psi(y, L1; x, L0)) / sqrt(2)
    std::vector<Complex> phi(4);
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) {
        const std::size_t fwd = (x << other_shift1) | (0U << label_shift1) |
                                (y << other_shift2) | (1U << label_shift2);
        phi[(x << 1) | y] = (amps[fwd] + amps[swap_particles(fwd)]) * r;
      }
    const QubitFactorization fact(2);
    Ket psi = Ket::from_amplitudes(std::move(phi));
    ComplexMatrix rho = psi.projector();
    return LabeledBipartiteState{label, std::move(psi), std::move(rho), fact,
                                 PartyLayout({0}, {1}, fact), ChargeAssignment::on_slots({})};
  }

  // Distinguishable: slots (alice.other, alice.species, bob.other, bob.species).
  constexpr std::size_t kSpeciesA = 0, kSpeciesB = 1;
  std::vector<Complex> phi(16);
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if (amps[idx] == Complex{}) continue;
    const std::size_t o1 = (idx >> other_shift1) & 1U;
    const std::size_t o2 = (idx >> other_shift2) & 1U;
    const bool particle1_is_alice = ((idx >> label_shift1) & 1U) == 0;
    const std::size_t target = particle1_is_alice
                                   ? (o1 << 3) | (kSpeciesA << 2) | (o2 << 1) | kSpeciesB
                                   : (o2 << 3) | (kSpeciesB << 2) | (o1 << 1) | kSpeciesA;
    phi[target] += amps[idx];
  }
  const QubitFactorization fact(4);
  Ket psi = Ket::from_amplitudes(std::move(phi));
  ComplexMatrix rho = psi.projector();
  return LabeledBipartiteState{label, std::move(psi), std::move(rho), fact,
                               PartyLayout({0, 1}, {2, 3}, fact), ChargeAssignment::on_slots({1, 3})};
}

DualityCheck check_duality(const TwoParticleState& state) {
  const auto certify = [&](LabelDoF label) {
    const auto s = relabel(state, label);
    return ppt_report_effective(s.rho, s.fact, s.layout, s.charges);
  };
  return DualityCheck{certify(LabelDoF::Momentum), certify(LabelDoF::Polarization)};
}

const char* to_string(LabelDoF label) {
  return label == LabelDoF::Momentum ? "momentum" : "polarization";
}

}  // namespace ssrdual

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

#include <array>
#include <stdexcept>
#include <string>

#include "ssrdual/entanglement.hpp"
#include "ssrdual/matcore.hpp"
#include "ssrdual/ssr.hpp"
#include "ssrdual/states.hpp"

namespace ssrdual {

enum class Statistics { Bosonic, Distinguishable };
enum class Polarization : unsigned { H = 0, V = 1 };
enum class Momentum : unsigned { k = 0, kbar = 1 };
enum class LabelDoF { Momentum, Polarization };

// Two particles, each carrying a polarisation and a momentum qubit. For
// distinguishable statistics particle 1 is species a and particle 2 is
// species b.
class TwoParticleState {
 public:
  static constexpr std::size_t kTableSize = 16;

  static constexpr std::size_t index(Polarization pol1, Momentum mom1, Polarization pol2,
                                     Momentum mom2) {
    return (static_cast<std::size_t>(pol1) << 3) | (static_cast<std::size_t>(mom1) << 2) |
           (static_cast<std::size_t>(pol2) << 1) | static_cast<std::size_t>(mom2);
  }

  // Throws std::invalid_argument when the table is not normalised, or when a
  // bosonic table is not exchange-symmetric.
  TwoParticleState(Statistics statistics, std::array<Complex, kTableSize> amplitudes);

  Statistics statistics() const { return statistics_; }
  const std::array<Complex, kTableSize>& amplitudes() const { return amplitudes_; }
  Complex amplitude(Polarization pol1, Momentum mom1, Polarization pol2, Momentum mom2) const {
    return amplitudes_[index(pol1, mom1, pol2, mom2)];
  }

  bool exchange_symmetric(double tol = kStructuralTol) const;

  // Slot order (pol1, mom1, pol2, mom2).
  Ket as_ket() const;
  // Slot order (pol1, pol2, mom1, mom2), matching hyper_state().
  Ket as_hyper_ket() const;

 private:
  Statistics statistics_;
  std::array<Complex, kTableSize> amplitudes_;
};

// Two photons from down-conversion, written in first quantisation.
TwoParticleState pdc_bosonic();
// (|H,k>_a |V,kbar>_b + |V,k>_a |H,kbar>_b) / sqrt(2)
TwoParticleState pdc_distinguishable();
// pdc_distinguishable plus its (pol, mom)-exchanged partner terms.
TwoParticleState symmetrized_distinguishable();

// Relabelled state. Parties are the two values of the labelling degree of
// freedom (k or H is Alice). Each party holds the other degree of freedom
// and, for distinguishable particles, a species qubit (a -> 0, b -> 1):
//   bosonic:          slots (alice.other, bob.other)
//   distinguishable:  slots (alice.other, alice.species, bob.other, bob.species)
struct LabeledBipartiteState {
  LabelDoF label;
  Ket psi;
  ComplexMatrix rho;
  QubitFactorization fact;
  PartyLayout layout;
  ChargeAssignment charges;  // species qubits only; none for bosons
};

class LabelCollision : public std::invalid_argument {
 public:
  explicit LabelCollision(const std::string& what) : std::invalid_argument(what) {}
};

// Throws LabelCollision if any amplitude has both particles on the same
// value of `label`.
LabeledBipartiteState relabel(const TwoParticleState& state, LabelDoF label);

struct DualityCheck {
  PptReport momentum;
  PptReport polarization;
  bool holds() const { return momentum.entangled && polarization.entangled; }
};

// Relabels both ways, twirls each result and certifies it by PPT.
DualityCheck check_duality(const TwoParticleState& state);

const char* to_string(LabelDoF label);

}  // namespace ssrdual

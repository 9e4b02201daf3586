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
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ssrdual/matcore.hpp"
#include "ssrdual/states.hpp"

namespace ssrdual {

// Number of type-a particles carried by each slot value. Logical 0 holds an
// a particle and logical 1 a b particle, so the b count is the complement
// and only the a count is tracked. Slots outside `carriers` (for example a
// momentum or polarisation qubit) carry no charge.
struct ChargeAssignment {
  std::array<int, 2> value_charge{1, 0};
  std::optional<std::vector<std::size_t>> carriers;  // nullopt: every slot

  static ChargeAssignment every_slot() { return {}; }
  static ChargeAssignment on_slots(std::vector<std::size_t> slots) {
    return ChargeAssignment{{1, 0}, std::move(slots)};
  }

  bool carries(std::size_t slot) const;
  // Charge of basis state `index` summed over `slots`.
  int charge(const QubitFactorization& fact, std::size_t index,
             std::span<const std::size_t> slots) const;
  // Charge summed over every slot of the register.
  int global_charge(const QubitFactorization& fact, std::size_t index) const;
};

// Per-basis-state local charge of one party.
std::vector<int> local_charges(const QubitFactorization& fact, const PartyLayout& layout,
                               Party party, const ChargeAssignment& charges);

// Diagonal N_A (or N_B).
ComplexMatrix local_charge_operator(const QubitFactorization& fact, const PartyLayout& layout,
                                    Party party, const ChargeAssignment& charges);

// Local SSR dephasing: keeps <i|rho|j> iff both parties' charges agree
// between i and j, zeroes everything else.
ComplexMatrix twirl(const ComplexMatrix& rho, const QubitFactorization& fact,
                    const PartyLayout& layout, const ChargeAssignment& charges);

struct Sector {
  int q_alice;
  int q_bob;
  std::vector<std::size_t> indices;  // ascending basis indices
  ComplexMatrix block;
};

struct SectorDecomposition {
  std::vector<Sector> sectors;  // ordered by (q_alice, q_bob)
  std::size_t dim;

  ComplexMatrix reassemble() const;
};

// Throws std::invalid_argument when rho carries coherence between sectors
// larger than kStructuralTol.
SectorDecomposition sectors(const ComplexMatrix& rho, const QubitFactorization& fact,
                            const PartyLayout& layout, const ChargeAssignment& charges);

// True iff every amplitude above kStructuralTol sits at one global charge.
bool is_ssr_pure(const Ket& psi, const ChargeAssignment& charges);

}  // namespace ssrdual

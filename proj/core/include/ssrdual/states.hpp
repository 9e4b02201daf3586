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
#include <span>
#include <vector>

#include "ssrdual/matcore.hpp"

namespace ssrdual {

enum class Party { Alice, Bob };

// Assignment of qubit slots to the two parties.
class PartyLayout {
 public:
  // Throws std::invalid_argument unless the slot lists are disjoint and
  // together cover every slot of `fact`.
  PartyLayout(std::vector<std::size_t> alice, std::vector<std::size_t> bob,
              const QubitFactorization& fact);

  std::span<const std::size_t> alice() const { return alice_; }
  std::span<const std::size_t> bob() const { return bob_; }
  std::span<const std::size_t> slots(Party party) const {
    return party == Party::Alice ? alice() : bob();
  }
  std::size_t num_qubits() const { return alice_.size() + bob_.size(); }

 private:
  std::vector<std::size_t> alice_;
  std::vector<std::size_t> bob_;
};

// Two-level encoding in which each slot holds one particle:
//   logical 0 <-> (momentum k,    species a)
//   logical 1 <-> (momentum kbar, species b)
struct EncodedBasis {
  enum class Momentum { k, kbar };
  enum class Species { a, b };
  struct Mode {
    Momentum momentum;
    Species species;
    bool operator==(const Mode&) const = default;
  };

  static constexpr Mode decode(unsigned logical) {
    return logical == 0 ? Mode{Momentum::k, Species::a} : Mode{Momentum::kbar, Species::b};
  }
  // Throws std::invalid_argument for the unencoded pairings (k, b), (kbar, a).
  static unsigned encode(Mode mode);
};

// Slot names used by the reference-frame constructions.
namespace slots {
// natural build order: system pair then reference pair
inline constexpr std::size_t kBuildASys = 0, kBuildBSys = 1, kBuildARef = 2, kBuildBRef = 3;
// party order used for rho_p: Alice's pair then Bob's pair
inline constexpr std::size_t kASys = 0, kARef = 1, kBSys = 2, kBRef = 3;
}  // namespace slots

// (|01> + |10>)/sqrt(2) on slots (A, B).
Ket bell_psi();

// (1-p)/4 * I + p |psi><psi| on slots (A_ref, B_ref). Throws
// std::invalid_argument for p outside [0, 1].
ComplexMatrix werner(double p);

// Two-qubit layout with Alice on slot 0 and Bob on slot 1.
PartyLayout two_qubit_layout();

struct FramedSystem {
  ComplexMatrix rho;
  QubitFactorization fact;
  PartyLayout layout;
};

// Reorders (A_sys, B_sys, A_ref, B_ref) into (A_sys, A_ref, B_sys, B_ref).
ComplexMatrix to_party_order(const ComplexMatrix& build_order);
Ket to_party_order(const Ket& build_order);

// |psi><psi| (x) werner(p) in party order, Alice = {A_sys, A_ref},
// Bob = {B_sys, B_ref}.
FramedSystem system_with_frame(double p);

// |psi> (x) |psi> in party order.
Ket two_copies();

// Polarisation pair (x) momentum pair on slots (pol1, pol2, mom1, mom2) with
// H, k -> 0 and V, kbar -> 1.
Ket hyper_state();

}  // namespace ssrdual

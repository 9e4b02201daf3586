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

#include "ssrdual/states.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ssrdual {

PartyLayout::PartyLayout(std::vector<std::size_t> alice, std::vector<std::size_t> bob,
                         const QubitFactorization& fact)
    : alice_(std::move(alice)), bob_(std::move(bob)) {
  std::vector<std::size_t> all = alice_;
  all.insert(all.end(), bob_.begin(), bob_.end());
  fact.check_slots(all);
  if (all.size() != fact.num_qubits()) {
    throw std::invalid_argument("party layout covers " + std::to_string(all.size()) + " of " +
                                std::to_string(fact.num_qubits()) + " slots");
  }
}

unsigned EncodedBasis::encode(Mode mode) {
  if (mode == Mode{Momentum::k, Species::a}) return 0;
  if (mode == Mode{Momentum::kbar, Species::b}) return 1;
  throw std::invalid_argument("mode outside the two-level encoding");
}

Ket bell_psi() {
  const double r = 1.0 / std::sqrt(2.0);
  return Ket::from_amplitudes({0.0, r, r, 0.0});
}

ComplexMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("werner: p = " + std::to_string(p) + " outside [0, 1]");
  }
  ComplexMatrix rho = ComplexMatrix::identity(4) * Complex{(1.0 - p) / 4.0};
  rho += bell_psi().projector() * Complex{p};
  return rho;
}

PartyLayout two_qubit_layout() { return PartyLayout({0}, {1}, QubitFactorization(2)); }

namespace {
constexpr std::array<std::size_t, 4> kPartyOrder = {slots::kBuildASys, slots::kBuildARef,
                                                    slots::kBuildBSys, slots::kBuildBRef};
}

ComplexMatrix to_party_order(const ComplexMatrix& build_order) {
  return permute_slots(build_order, QubitFactorization(4), kPartyOrder);
}

Ket to_party_order(const Ket& build_order) {
  return permute_slots(build_order, QubitFactorization(4), kPartyOrder);
}

FramedSystem system_with_frame(double p) {
  const ComplexMatrix rho_s = bell_psi().projector();
  const ComplexMatrix rho_a = werner(p);
  const QubitFactorization fact(4);
  return FramedSystem{to_party_order(tensor(rho_s, rho_a)), fact,
                      PartyLayout({slots::kASys, slots::kARef}, {slots::kBSys, slots::kBRef}, fact)};
}

Ket two_copies() { return to_party_order(tensor(bell_psi(), bell_psi())); }

Ket hyper_state() {
  // (|HV> + |VH>) (x) (|k kbar> + |kbar k>) / 2
  const Ket pair = bell_psi();
  return tensor(pair, pair);
}

}  // namespace ssrdual

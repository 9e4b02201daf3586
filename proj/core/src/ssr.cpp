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

#include "ssrdual/ssr.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace ssrdual {

bool ChargeAssignment::carries(std::size_t slot) const {
  return !carriers || std::find(carriers->begin(), carriers->end(), slot) != carriers->end();
}

int ChargeAssignment::charge(const QubitFactorization& fact, std::size_t index,
                             std::span<const std::size_t> slots) const {
  int q = 0;
  for (auto s : slots)
    if (carries(s)) q += value_charge[fact.bit(index, s)];
  return q;
}

int ChargeAssignment::global_charge(const QubitFactorization& fact, std::size_t index) const {
  int q = 0;
  for (std::size_t s = 0; s < fact.num_qubits(); ++s)
    if (carries(s)) q += value_charge[fact.bit(index, s)];
  return q;
}

std::vector<int> local_charges(const QubitFactorization& fact, const PartyLayout& layout,
                               Party party, const ChargeAssignment& charges) {
  if (layout.num_qubits() != fact.num_qubits()) {
    throw std::invalid_argument("party layout does not match the qubit factorization");
  }
  std::vector<int> q(fact.dim());
  for (std::size_t i = 0; i < fact.dim(); ++i) q[i] = charges.charge(fact, i, layout.slots(party));
  return q;
}

ComplexMatrix local_charge_operator(const QubitFactorization& fact, const PartyLayout& layout,
                                    Party party, const ChargeAssignment& charges) {
  const auto q = local_charges(fact, layout, party, charges);
  ComplexMatrix n(fact.dim());
  for (std::size_t i = 0; i < q.size(); ++i) n(i, i) = static_cast<double>(q[i]);
  return n;
}

ComplexMatrix twirl(const ComplexMatrix& rho, const QubitFactorization& fact,
                    const PartyLayout& layout, const ChargeAssignment& charges) {
  fact.check_matrix(rho);
  const auto qa = local_charges(fact, layout, Party::Alice, charges);
  const auto qb = local_charges(fact, layout, Party::Bob, charges);
  ComplexMatrix out(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      if (qa[i] == qa[j] && qb[i] == qb[j]) out(i, j) = rho(i, j);
  return out;
}

ComplexMatrix SectorDecomposition::reassemble() const {
  ComplexMatrix out(dim);
  for (const auto& s : sectors)
    for (std::size_t r = 0; r < s.indices.size(); ++r)
      for (std::size_t c = 0; c < s.indices.size(); ++c)
        out(s.indices[r], s.indices[c]) = s.block(r, c);
  return out;
}

SectorDecomposition sectors(const ComplexMatrix& rho, const QubitFactorization& fact,
                            const PartyLayout& layout, const ChargeAssignment& charges) {
  fact.check_matrix(rho);
  const auto qa = local_charges(fact, layout, Party::Alice, charges);
  const auto qb = local_charges(fact, layout, Party::Bob, charges);

  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      if ((qa[i] != qa[j] || qb[i] != qb[j]) && std::abs(rho(i, j)) > kStructuralTol) {
        throw std::invalid_argument("sectors: input has coherence between charge sectors");
      }

  std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < rho.dim(); ++i) groups[{qa[i], qb[i]}].push_back(i);

  SectorDecomposition out{{}, rho.dim()};
  for (auto& [key, idx] : groups) {
    ComplexMatrix block(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) block(r, c) = rho(idx[r], idx[c]);
    out.sectors.push_back(Sector{key.first, key.second, std::move(idx), std::move(block)});
  }
  return out;
}

bool is_ssr_pure(const Ket& psi, const ChargeAssignment& charges) {
  const auto fact = QubitFactorization::from_dim(psi.dim());
  std::set<int> seen;
  for (std::size_t i = 0; i < psi.dim(); ++i)
    if (std::abs(psi[i]) > kStructuralTol) seen.insert(charges.global_charge(fact, i));
  return seen.size() <= 1;
}

}  // namespace ssrdual

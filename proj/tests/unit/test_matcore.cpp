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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "ssrdual/matcore.hpp"

using namespace ssrdual;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Ket bell() { return Ket::from_amplitudes({0.0, kInvSqrt2, kInvSqrt2, 0.0}); }

ComplexMatrix reassemble(const HermitianEigen& e) {
  const std::size_t n = e.values.size();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < n; ++k)
        out(r, c) += e.vectors(r, k) * e.values[k] * std::conj(e.vectors(c, k));
  return out;
}

}  // namespace

TEST_CASE("tensor products") {
  SUBCASE("identity") {
    CHECK(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) ==
          ComplexMatrix::identity(4));
  }
  SUBCASE("projector product") {
    const double a[] = {1, 0}, b[] = {0, 1}, ab[] = {0, 1, 0, 0};
    CHECK(tensor(ComplexMatrix::diagonal(a), ComplexMatrix::diagonal(b)) ==
          ComplexMatrix::diagonal(ab));
  }
  SUBCASE("two copies of psi live on 0101, 0110, 1001, 1010") {
    const ComplexMatrix two = tensor(bell().projector(), bell().projector());
    CHECK(two.dim() == 16);
    for (std::size_t i = 0; i < 16; ++i) {
      const bool support = i == 0b0101 || i == 0b0110 || i == 0b1001 || i == 0b1010;
      CHECK(std::abs(two(i, i) - Complex{support ? 0.25 : 0.0}) < 1e-15);
    }
  }
  SUBCASE("associative") {
    testing::Generator gen(11);
    const auto a = gen.ginibre(2), b = gen.ginibre(4), c = gen.ginibre(2);
    CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) < 1e-13);
  }
  SUBCASE("dimension overflow") {
    CHECK_THROWS_AS(tensor(ComplexMatrix::identity(16), ComplexMatrix::identity(8)),
                    std::invalid_argument);
  }
}

TEST_CASE("partial transpose") {
  const QubitFactorization two(2);
  const std::size_t slot1[] = {1};
  SUBCASE("identity is invariant") {
    const std::size_t both[] = {0, 1};
    CHECK(partial_transpose(ComplexMatrix::identity(4), two, slot1) == ComplexMatrix::identity(4));
    CHECK(partial_transpose(ComplexMatrix::identity(4), two, both) == ComplexMatrix::identity(4));
  }
  SUBCASE("bell state spectrum") {
    const auto e = hermitian_eigen(partial_transpose(bell().projector(), two, slot1));
    CHECK(e.values[0] == doctest::Approx(-0.5).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) CHECK(e.values[k] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(trace_norm(partial_transpose(bell().projector(), two, slot1)) ==
          doctest::Approx(2.0).epsilon(1e-10));
  }
  SUBCASE("bad slot") {
    const std::size_t bad[] = {2};
    CHECK_THROWS_AS(partial_transpose(ComplexMatrix::identity(4), two, bad), std::out_of_range);
  }
  SUBCASE("involution preserving trace and hermiticity") {
    testing::Generator gen(3);
    const QubitFactorization four(4);
    const std::size_t bob[] = {2, 3};
    for (int trial = 0; trial < 50; ++trial) {
      const auto rho = gen.density(16);
      const auto pt = partial_transpose(rho, four, bob);
      CHECK(pt.is_hermitian(1e-12));
      CHECK(std::abs(pt.trace() - rho.trace()) < 1e-12);
      CHECK(partial_transpose(pt, four, bob) == rho);
    }
  }
}

TEST_CASE("partial trace") {
  const QubitFactorization two(2);
  const std::size_t slot1[] = {1};
  SUBCASE("maximally mixed") {
    ComplexMatrix mixed = ComplexMatrix::identity(4) * Complex{0.25};
    CHECK(max_abs_diff(partial_trace(mixed, two, slot1), ComplexMatrix::identity(2) * Complex{0.5}) <
          1e-15);
  }
  SUBCASE("bell reduction") {
    CHECK(max_abs_diff(partial_trace(bell().projector(), two, slot1),
                       ComplexMatrix::identity(2) * Complex{0.5}) < 1e-15);
  }
  SUBCASE("tracing everything yields the trace") {
    testing::Generator gen(5);
    const auto rho = gen.ginibre(8);
    const std::size_t all[] = {0, 1, 2};
    const auto t = partial_trace(rho, QubitFactorization(3), all);
    CHECK(t.dim() == 1);
    CHECK(std::abs(t(0, 0) - rho.trace()) < 1e-13);
  }
  SUBCASE("product reduction keeps the first factor scaled by tr(b)") {
    testing::Generator gen(8);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = gen.ginibre(4), b = gen.ginibre(4);
      const std::size_t b_slots[] = {2, 3};
      const auto reduced = partial_trace(tensor(a, b), QubitFactorization(4), b_slots);
      CHECK(max_abs_diff(reduced, a * b.trace()) < 1e-12);
    }
  }
}

TEST_CASE("slot permutation") {
  const QubitFactorization three(3);
  // new slot k takes old slot order[k]
  const std::size_t order[] = {2, 0, 1};
  const Ket e = Ket::basis(8, 0b100);  // old slot 0 set
  const Ket moved = permute_slots(e, three, order);
  CHECK(std::abs(moved[0b010] - Complex{1.0}) < 1e-15);

  testing::Generator gen(21);
  const auto a = gen.ginibre(2), b = gen.ginibre(2), c = gen.ginibre(2);
  // (a, b, c) reordered to (c, a, b)
  CHECK(max_abs_diff(permute_slots(tensor(tensor(a, b), c), three, order),
                     tensor(tensor(c, a), b)) < 1e-14);

  const std::size_t dup[] = {0, 0, 1};
  CHECK_THROWS(permute_slots(ComplexMatrix::identity(8), three, dup));
}

TEST_CASE("hermitian eigensolver") {
  SUBCASE("diagonal input sorts ascending") {
    const double d[] = {3, 1, 2};
    const auto e = hermitian_eigen(ComplexMatrix::diagonal(d));
    CHECK(e.values == std::vector<double>{1, 2, 3});
  }
  SUBCASE("pauli x") {
    const auto x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    const auto e = hermitian_eigen(x);
    CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("complex phases") {
    const auto y = ComplexMatrix::from_rows({{1.0, Complex{0, -1}}, {Complex{0, 1}, 1.0}});
    const auto e = hermitian_eigen(y);
    CHECK(std::abs(e.values[0]) < 1e-14);
    CHECK(e.values[1] == doctest::Approx(2.0).epsilon(1e-14));
  }
  SUBCASE("rejects non-hermitian input") {
    const auto m = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    CHECK_THROWS_AS(hermitian_eigen(m), std::invalid_argument);
  }
  SUBCASE("random 16x16 reconstruct and agree with Eigen") {
    testing::Generator gen(1234);
    for (int trial = 0; trial < 100; ++trial) {
      const auto h = gen.hermitian(16);
      const auto e = hermitian_eigen(h);
      CHECK(max_abs_diff(reassemble(e), h) <= 1e-10);
      CHECK(max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(16)) <= 1e-10);
      double sum = 0.0;
      for (double v : e.values) sum += v;
      CHECK(std::abs(sum - h.trace().real()) <= 1e-10);
      CHECK(std::is_sorted(e.values.begin(), e.values.end()));

      Eigen::MatrixXcd em(16, 16);
      for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) em(r, c) = h(r, c);
      const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(em).eigenvalues();
      for (int k = 0; k < 16; ++k) CHECK(std::abs(ref(k) - e.values[k]) < 1e-10);
    }
  }
  SUBCASE("degenerate spectrum") {
    // U diag(1,1,2,2) U^dagger with a random unitary from the eigenvectors of
    // a random Hermitian matrix.
    testing::Generator gen(99);
    const auto u = hermitian_eigen(gen.hermitian(4)).vectors;
    const double d[] = {1, 1, 2, 2};
    const auto h = u * ComplexMatrix::diagonal(d) * u.adjoint();
    const auto e = hermitian_eigen(h);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(e.values[k] - d[k]) < 1e-12);
    CHECK(max_abs_diff(reassemble(e), h) < 1e-12);
  }
}

TEST_CASE("trace norm") {
  CHECK(trace_norm(ComplexMatrix::identity(4)) == doctest::Approx(4.0));
  testing::Generator gen(7);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(std::abs(trace_norm(gen.density(8)) - 1.0) < 1e-10);
}

TEST_CASE("density matrix validation") {
  CHECK(is_density_matrix(bell().projector()));
  CHECK_FALSE(is_density_matrix(ComplexMatrix::identity(2)));
  const double neg[] = {1.5, -0.5};
  CHECK_THROWS_AS(require_density_matrix(ComplexMatrix::diagonal(neg)), std::invalid_argument);
}

TEST_CASE("kets") {
  CHECK_THROWS_AS(Ket::from_amplitudes({1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Ket::normalized({0.0, 0.0}), std::invalid_argument);
  const Ket k = Ket::normalized({1.0, Complex{0, 1}});
  CHECK(std::abs(k.inner(k) - Complex{1.0}) < 1e-15);
}

TEST_CASE("factorization checks") {
  CHECK(QubitFactorization::from_dim(16).num_qubits() == 4);
  CHECK_THROWS(QubitFactorization::from_dim(12));
  CHECK_THROWS(QubitFactorization(7));
  CHECK_THROWS(ComplexMatrix(65));
}

TEST_CASE("dump format") {
  CHECK(format_entry({0.25, 0.0}) == "0.25+0j");
  CHECK(format_entry({-0.0, -0.0}) == "0+0j");
  CHECK(format_entry({0.1, -0.5}) == "0.10000000000000001-0.5j");
  std::ostringstream out;
  dump(out, ComplexMatrix::identity(2));
  CHECK(out.str() == "1+0j 0+0j\n0+0j 1+0j\n");
}

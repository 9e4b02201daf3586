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

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ssrdual {

using Complex = std::complex<double>;

// Largest matrix dimension handled anywhere in the library (six qubits).
inline constexpr std::size_t kMaxDim = 64;

// Structural checks (Hermiticity, trace, normalisation).
inline constexpr double kStructuralTol = 1e-12;
// Spectral checks (eigenvalue sign, reconstruction residuals).
inline constexpr double kSpectralTol = 1e-10;

class Ket;

// Dense square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(1) {}
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool is_hermitian(double tol = kStructuralTol) const;
  bool is_diagonal(double tol = 0.0) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

// Largest entrywise modulus of a - b. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Normalised state vector.
class Ket {
 public:
  // Throws std::invalid_argument unless the squared norm is within
  // kStructuralTol of one.
  static Ket from_amplitudes(std::vector<Complex> amplitudes);
  // Rescales to unit norm; rejects the zero vector.
  static Ket normalized(std::vector<Complex> amplitudes);
  static Ket basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  // |psi><psi|
  ComplexMatrix projector() const;
  Complex inner(const Ket& other) const;

 private:
  explicit Ket(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}
  std::vector<Complex> amplitudes_;
};

// Big-endian qubit register: slot 0 is the most significant bit of a basis
// index.
class QubitFactorization {
 public:
  explicit QubitFactorization(std::size_t num_qubits);
  // Throws unless dim is a power of two not exceeding kMaxDim.
  static QubitFactorization from_dim(std::size_t dim);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return std::size_t{1} << num_qubits_; }

  unsigned bit(std::size_t index, std::size_t slot) const {
    return static_cast<unsigned>((index >> (num_qubits_ - 1 - slot)) & 1U);
  }
  std::size_t mask(std::size_t slot) const { return std::size_t{1} << (num_qubits_ - 1 - slot); }

  // Throws std::out_of_range for an invalid slot and std::invalid_argument
  // for a repeated one.
  void check_slots(std::span<const std::size_t> slots) const;
  // Throws std::invalid_argument if m.dim() != dim().
  void check_matrix(const ComplexMatrix& m) const;

  bool operator==(const QubitFactorization&) const = default;

 private:
  std::size_t num_qubits_;
};

// Kronecker product; index convention (i_a * b.dim + i_b).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
Ket tensor(const Ket& a, const Ket& b);

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const QubitFactorization& fact,
                                std::span<const std::size_t> slots);

// Traces out the listed slots; the remaining slots keep their relative order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const QubitFactorization& fact,
                            std::span<const std::size_t> slots);

// Reorders qubit slots. new_order[k] is the old slot that becomes slot k.
ComplexMatrix permute_slots(const ComplexMatrix& m, const QubitFactorization& fact,
                            std::span<const std::size_t> new_order);
Ket permute_slots(const Ket& psi, const QubitFactorization& fact,
                  std::span<const std::size_t> new_order);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // eigenvectors as columns
};

// Cyclic complex Jacobi. Throws std::invalid_argument if h deviates from
// Hermitian by more than kSpectralTol entrywise.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

double trace_norm(const ComplexMatrix& m);

// Rows and columns of m restricted to `indices`, in the given order.
ComplexMatrix principal_submatrix(const ComplexMatrix& m, std::span<const std::size_t> indices);

// Throws std::invalid_argument naming `what` unless rho is Hermitian, has
// unit trace and no eigenvalue below -kSpectralTol.
void require_density_matrix(const ComplexMatrix& rho, const char* what = "rho");
bool is_density_matrix(const ComplexMatrix& rho);

// "re+imj" with 17 significant digits.
std::string format_entry(Complex z);
// One row per line, entries separated by single spaces.
void dump(std::ostream& out, const ComplexMatrix& m);

}  // namespace ssrdual

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

#include "ssrdual/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ssrdual {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " outside [1, " + std::to_string(kMaxDim) + "]");
  }
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

std::size_t slot_mask(const QubitFactorization& fact, std::span<const std::size_t> slots) {
  fact.check_slots(slots);
  std::size_t m = 0;
  for (auto s : slots) m |= fact.mask(s);
  return m;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
  check_dim(dim);
  entries_.assign(dim * dim, Complex{});
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  ComplexMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw std::invalid_argument("from_rows: matrix not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool ComplexMatrix::is_diagonal(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (r != c && std::abs((*this)(r, c)) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

// --- Ket -------------------------------------------------------------------

Ket Ket::from_amplitudes(std::vector<Complex> amplitudes) {
  check_dim(amplitudes.size());
  double n2 = 0.0;
  for (const auto& z : amplitudes) n2 += std::norm(z);
  if (std::abs(n2 - 1.0) > kStructuralTol) {
    throw std::invalid_argument("ket not normalised: squared norm " + std::to_string(n2));
  }
  return Ket(std::move(amplitudes));
}

Ket Ket::normalized(std::vector<Complex> amplitudes) {
  check_dim(amplitudes.size());
  double n2 = 0.0;
  for (const auto& z : amplitudes) n2 += std::norm(z);
  if (n2 == 0.0) throw std::invalid_argument("cannot normalise the zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& z : amplitudes) z *= inv;
  return Ket(std::move(amplitudes));
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
  check_dim(dim);
  if (index >= dim) throw std::out_of_range("basis index out of range");
  std::vector<Complex> a(dim);
  a[index] = 1.0;
  return Ket(std::move(a));
}

ComplexMatrix Ket::projector() const {
  ComplexMatrix m(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) m(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
  return m;
}

Complex Ket::inner(const Ket& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("inner: dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < dim(); ++i) s += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  return s;
}

// --- QubitFactorization ----------------------------------------------------

QubitFactorization::QubitFactorization(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0 || (std::size_t{1} << num_qubits) > kMaxDim) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(num_qubits));
  }
}

QubitFactorization QubitFactorization::from_dim(std::size_t dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return QubitFactorization(n);
}

void QubitFactorization::check_slots(std::span<const std::size_t> slots) const {
  std::size_t seen = 0;
  for (auto s : slots) {
    if (s >= num_qubits_) {
      throw std::out_of_range("slot " + std::to_string(s) + " out of range for " +
                              std::to_string(num_qubits_) + " qubits");
    }
    if (seen & mask(s)) throw std::invalid_argument("slot " + std::to_string(s) + " repeated");
    seen |= mask(s);
  }
}

void QubitFactorization::check_matrix(const ComplexMatrix& m) const {
  if (m.dim() != dim()) {
    throw std::invalid_argument("matrix dimension " + std::to_string(m.dim()) +
                                " does not match " + std::to_string(num_qubits_) + " qubits");
  }
}

// --- products and reshuffles -----------------------------------------------

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  if (na * nb > kMaxDim) {
    throw std::invalid_argument("tensor product dimension " + std::to_string(na * nb) +
                                " exceeds " + std::to_string(kMaxDim));
  }
  ComplexMatrix out(na * nb);
  for (std::size_t ra = 0; ra < na; ++ra)
    for (std::size_t ca = 0; ca < na; ++ca) {
      const Complex x = a(ra, ca);
      if (x == Complex{}) continue;
      for (std::size_t rb = 0; rb < nb; ++rb)
        for (std::size_t cb = 0; cb < nb; ++cb) out(ra * nb + rb, ca * nb + cb) = x * b(rb, cb);
    }
  return out;
}

Ket tensor(const Ket& a, const Ket& b) {
  if (a.dim() * b.dim() > kMaxDim) throw std::invalid_argument("tensor product too large");
  std::vector<Complex> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a[i] * b[j];
  return Ket::normalized(std::move(amps));
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const QubitFactorization& fact,
                                std::span<const std::size_t> slots) {
  fact.check_matrix(rho);
  const std::size_t m = slot_mask(fact, slots);
  const std::size_t n = rho.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t i2 = (i & ~m) | (j & m);
      const std::size_t j2 = (j & ~m) | (i & m);
      out(i2, j2) = rho(i, j);
    }
  return out;
}

namespace {

// Compacts the bits of `index` not covered by `traced` into a smaller index,
// preserving slot order.
std::size_t compact(std::size_t index, const QubitFactorization& fact, std::size_t traced) {
  std::size_t out = 0;
  for (std::size_t s = 0; s < fact.num_qubits(); ++s) {
    if (traced & fact.mask(s)) continue;
    out = (out << 1) | fact.bit(index, s);
  }
  return out;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, const QubitFactorization& fact,
                            std::span<const std::size_t> slots) {
  fact.check_matrix(rho);
  const std::size_t m = slot_mask(fact, slots);
  const std::size_t kept = fact.num_qubits() - slots.size();
  ComplexMatrix out(std::size_t{1} << kept);
  const std::size_t n = rho.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((i & m) != (j & m)) continue;
      out(compact(i, fact, m), compact(j, fact, m)) += rho(i, j);
    }
  return out;
}

namespace {

std::vector<std::size_t> permuted_indices(const QubitFactorization& fact,
                                          std::span<const std::size_t> new_order) {
  if (new_order.size() != fact.num_qubits()) {
    throw std::invalid_argument("slot permutation must list every slot exactly once");
  }
  fact.check_slots(new_order);
  const std::size_t n = fact.num_qubits();
  std::vector<std::size_t> map(fact.dim());
  for (std::size_t i = 0; i < fact.dim(); ++i) {
    std::size_t j = 0;
    for (std::size_t k = 0; k < n; ++k) j = (j << 1) | fact.bit(i, new_order[k]);
    map[i] = j;
  }
  return map;
}

}  // namespace

ComplexMatrix permute_slots(const ComplexMatrix& m, const QubitFactorization& fact,
                            std::span<const std::size_t> new_order) {
  fact.check_matrix(m);
  const auto map = permuted_indices(fact, new_order);
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(map[i], map[j]) = m(i, j);
  return out;
}

Ket permute_slots(const Ket& psi, const QubitFactorization& fact,
                  std::span<const std::size_t> new_order) {
  if (psi.dim() != fact.dim()) throw std::invalid_argument("ket dimension mismatch");
  const auto map = permuted_indices(fact, new_order);
  std::vector<Complex> amps(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) amps[map[i]] = psi[i];
  return Ket::from_amplitudes(std::move(amps));
}

// --- spectra ---------------------------------------------------------------

namespace {

// Plain complex product; std::complex operator* pays for C99 Annex G inf/nan handling.
inline Complex cmul(Complex x, Complex y) {
  return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
  if (!h.is_hermitian(kSpectralTol)) {
    throw std::invalid_argument("hermitian_eigen: input is not Hermitian");
  }
  const std::size_t n = h.dim();
  ComplexMatrix a = h;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, h.frobenius_norm());
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) off += std::norm(a(p, q));
    if (std::sqrt(off) < 1e-14 * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex hpq = a(p, q);
        const double mag = std::abs(hpq);
        if (mag < 1e-300) continue;
        const Complex phase = hpq / mag;
        const Complex phase_c = std::conj(phase);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A <- A J with J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q).
        const Complex s_pc = s * phase_c, c_pc = c * phase_c;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - cmul(s_pc, akq);
          a(k, q) = s * akp + cmul(c_pc, akq);
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - cmul(s_pc, vkq);
          v(k, q) = s * vkp + cmul(c_pc, vkq);
        }
        // A <- J^dagger A
        const Complex s_p = s * phase, c_p = c * phase;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - cmul(s_p, aqk);
          a(q, k) = s * apk + cmul(c_p, aqk);
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (double x : hermitian_eigen(m).values) s += std::abs(x);
  return s;
}

ComplexMatrix principal_submatrix(const ComplexMatrix& m, std::span<const std::size_t> indices) {
  ComplexMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c) {
      if (indices[r] >= m.dim() || indices[c] >= m.dim()) {
        throw std::out_of_range("principal_submatrix: index out of range");
      }
      out(r, c) = m(indices[r], indices[c]);
    }
  return out;
}

bool is_density_matrix(const ComplexMatrix& rho) {
  if (!rho.is_hermitian(kStructuralTol)) return false;
  if (std::abs(rho.trace() - Complex{1.0}) > kStructuralTol) return false;
  return hermitian_eigen(rho).values.front() >= -kSpectralTol;
}

void require_density_matrix(const ComplexMatrix& rho, const char* what) {
  if (!rho.is_hermitian(kStructuralTol)) {
    throw std::invalid_argument(std::string(what) + " is not Hermitian");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex{1.0}) > kStructuralTol) {
    throw std::invalid_argument(std::string(what) + " does not have unit trace (" +
                                std::to_string(tr.real()) + ")");
  }
  const double lo = hermitian_eigen(rho).values.front();
  if (lo < -kSpectralTol) {
    throw std::invalid_argument(std::string(what) + " has negative eigenvalue " +
                                std::to_string(lo));
  }
}

// --- text dump -------------------------------------------------------------

std::string format_entry(Complex z) {
  // Adding +0.0 folds negative zero into positive zero.
  const double re = z.real() + 0.0;
  const double im = z.imag() + 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", re, im);
  return buf;
}

void dump(std::ostream& out, const ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) out << ' ';
      out << format_entry(m(r, c));
    }
    out << '\n';
  }
}

}  // namespace ssrdual

// Copyright 2026 The eakit authors
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
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace eakit {

using cplx = std::complex<double>;

/// Dense complex N x N matrix with fixed-size stack storage (row-major).
/// All dimensions in this library are tiny (N <= 16), so value semantics
/// are used throughout.
template <std::size_t N>
class CMat {
public:
  CMat() : a_{} {}

  CMat(std::initializer_list<cplx> entries) : a_{} {
    if (entries.size() != N * N)
      throw std::invalid_argument("CMat: wrong number of entries");
    std::size_t i = 0;
    for (const auto &e : entries) a_[i++] = e;
  }

  static CMat identity() {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  cplx &operator()(std::size_t i, std::size_t j) { return a_[i * N + j]; }
  const cplx &operator()(std::size_t i, std::size_t j) const {
    return a_[i * N + j];
  }

  CMat &operator+=(const CMat &o) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] += o.a_[i];
    return *this;
  }
  CMat &operator-=(const CMat &o) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] -= o.a_[i];
    return *this;
  }
  CMat &operator*=(cplx s) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] *= s;
    return *this;
  }

  friend CMat operator+(CMat a, const CMat &b) { return a += b; }
  friend CMat operator-(CMat a, const CMat &b) { return a -= b; }
  friend CMat operator*(CMat a, cplx s) { return a *= s; }
  friend CMat operator*(cplx s, CMat a) { return a *= s; }

  friend CMat operator*(const CMat &a, const CMat &b) {
    CMat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  CMat adjoint() const {
    CMat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  CMat transpose() const {
    CMat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) s += std::norm(a_[i]);
    return std::sqrt(s);
  }

  double max_abs_diff(const CMat &o) const {
    double m = 0.0;
    for (std::size_t i = 0; i < N * N; ++i)
      m = std::max(m, std::abs(a_[i] - o.a_[i]));
    return m;
  }

  /// Largest |H(i,j) - conj(H(j,i))| over all entries.
  double hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j)
        m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
  }

  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

private:
  std::array<cplx, N * N> a_;
};

/// Dense real N x N matrix (row-major). Used for Pauli transfer matrices.
template <std::size_t N>
class RMat {
public:
  RMat() : a_{} {}

  RMat(std::initializer_list<double> entries) : a_{} {
    if (entries.size() != N * N)
      throw std::invalid_argument("RMat: wrong number of entries");
    std::size_t i = 0;
    for (const auto &e : entries) a_[i++] = e;
  }

  static RMat identity() {
    RMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  double &operator()(std::size_t i, std::size_t j) { return a_[i * N + j]; }
  const double &operator()(std::size_t i, std::size_t j) const {
    return a_[i * N + j];
  }

  const std::array<double, N * N> &data() const { return a_; }
  std::array<double, N * N> &data() { return a_; }

  RMat &operator+=(const RMat &o) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] += o.a_[i];
    return *this;
  }
  RMat &operator*=(double s) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] *= s;
    return *this;
  }
  friend RMat operator+(RMat a, const RMat &b) { return a += b; }
  friend RMat operator*(RMat a, double s) { return a *= s; }
  friend RMat operator*(double s, RMat a) { return a *= s; }

  friend RMat operator*(const RMat &a, const RMat &b) {
    RMat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  double max_abs_diff(const RMat &o) const {
    double m = 0.0;
    for (std::size_t i = 0; i < N * N; ++i)
      m = std::max(m, std::abs(a_[i] - o.a_[i]));
    return m;
  }

  bool operator==(const RMat &o) const { return a_ == o.a_; }

private:
  std::array<double, N * N> a_;
};

template <std::size_t N>
using CVec = std::array<cplx, N>;

template <std::size_t N>
inline CMat<N> outer(const CVec<N> &u, const CVec<N> &v) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = u[i] * std::conj(v[j]);
  return r;
}

template <std::size_t N>
inline CMat<N> projector(const CVec<N> &u) {
  return outer(u, u);
}

template <std::size_t N>
inline double norm(const CVec<N> &u) {
  double s = 0.0;
  for (const auto &x : u) s += std::norm(x);
  return std::sqrt(s);
}

template <std::size_t M, std::size_t N>
inline CMat<M * N> kron(const CMat<M> &a, const CMat<N> &b) {
  CMat<M * N> r;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l)
          r(i * N + k, j * N + l) = aij * b(k, l);
    }
  return r;
}

template <std::size_t M, std::size_t N>
inline RMat<M * N> kron(const RMat<M> &a, const RMat<N> &b) {
  RMat<M * N> r;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l)
          r(i * N + k, j * N + l) = aij * b(k, l);
    }
  return r;
}

template <std::size_t M, std::size_t N>
inline CVec<M * N> kron(const CVec<M> &u, const CVec<N> &v) {
  CVec<M * N> r{};
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i * N + j] = u[i] * v[j];
  return r;
}

}  // namespace eakit

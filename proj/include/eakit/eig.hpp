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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eakit/matrix.hpp"

namespace eakit {

// Cyclic Jacobi diagonalization for complex Hermitian matrices. Each pivot
// first absorbs the phase of H(p,q) so the 2x2 subproblem is real symmetric,
// then applies the classic smaller-angle rotation. Dimensions here never
// exceed 16, so robustness wins over speed.

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kJacobiOffTol = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

template <std::size_t N>
struct EigResult {
  std::array<double, N> values;  // ascending
  CMat<N> vectors;               // column j is the eigenvector of values[j]
};

namespace detail {

template <std::size_t N>
inline double off_diagonal_norm(const CMat<N> &h) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation annihilating H(p,q). Updates H in place and, when
// `vectors` is non-null, accumulates the rotation into it.
template <std::size_t N>
inline void jacobi_rotate(CMat<N> &h, std::size_t p, std::size_t q,
                          CMat<N> *vectors) {
  const cplx hpq = h(p, q);
  const double m = std::abs(hpq);
  if (m == 0.0) return;
  const cplx f = hpq / m;  // phase, |f| = 1

  const double app = h(p, p).real();
  const double aqq = h(q, q).real();
  const double tau = (aqq - app) / (2.0 * m);
  const double t =
      (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // U restricted to the (p,q) plane: U_pp = c, U_pq = s*f,
  // U_qp = -s*conj(f), U_qq = c  (after absorbing the phase of H(p,q)).
  const cplx upq = s * f;
  const cplx uqp = -s * std::conj(f);

  for (std::size_t k = 0; k < N; ++k) {  // H <- H U
    const cplx hp = h(k, p), hq = h(k, q);
    h(k, p) = c * hp + uqp * hq;
    h(k, q) = upq * hp + c * hq;
  }
  for (std::size_t k = 0; k < N; ++k) {  // H <- U^dag H
    const cplx hp = h(p, k), hq = h(q, k);
    h(p, k) = c * hp + std::conj(uqp) * hq;
    h(q, k) = std::conj(upq) * hp + c * hq;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = cplx(h(p, p).real(), 0.0);
  h(q, q) = cplx(h(q, q).real(), 0.0);

  if (vectors) {
    for (std::size_t k = 0; k < N; ++k) {
      const cplx vp = (*vectors)(k, p), vq = (*vectors)(k, q);
      (*vectors)(k, p) = c * vp + uqp * vq;
      (*vectors)(k, q) = upq * vp + c * vq;
    }
  }
}

template <std::size_t N>
inline void jacobi_sweeps(CMat<N> &h, CMat<N> *vectors) {
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(h) < kJacobiOffTol) break;
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) jacobi_rotate(h, p, q, vectors);
  }
}

template <std::size_t N>
inline CMat<N> symmetrized(const CMat<N> &h) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      r(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  return r;
}

}  // namespace detail

/// Full eigendecomposition of a Hermitian matrix, eigenvalues ascending.
/// Throws std::domain_error if the input is not Hermitian within tolerance.
template <std::size_t N>
inline EigResult<N> eig_hermitian(const CMat<N> &h_in,
                                  double tol = kHermitianTol) {
  if (!h_in.is_hermitian(tol))
    throw std::domain_error("eig_hermitian: matrix is not Hermitian");
  CMat<N> h = detail::symmetrized(h_in);
  CMat<N> v = CMat<N>::identity();
  detail::jacobi_sweeps(h, &v);

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h(a, a).real() < h(b, b).real();
  });

  EigResult<N> r;
  for (std::size_t j = 0; j < N; ++j) {
    r.values[j] = h(order[j], order[j]).real();
    for (std::size_t i = 0; i < N; ++i) r.vectors(i, j) = v(i, order[j]);
  }
  return r;
}

/// Smallest eigenvalue of a Hermitian matrix. Skips eigenvector
/// accumulation and the Hermiticity guard; used in search inner loops where
/// the input is Hermitian by construction.
template <std::size_t N>
inline double min_eig_unchecked(CMat<N> h) {
  detail::jacobi_sweeps(h, static_cast<CMat<N> *>(nullptr));
  double m = h(0, 0).real();
  for (std::size_t i = 1; i < N; ++i) m = std::min(m, h(i, i).real());
  return m;
}

/// Checked variant for callers handing in externally produced matrices.
template <std::size_t N>
inline double min_eig_hermitian(const CMat<N> &h, double tol = kHermitianTol) {
  if (!h.is_hermitian(tol))
    throw std::domain_error("min_eig_hermitian: matrix is not Hermitian");
  return min_eig_unchecked(detail::symmetrized(h));
}

/// All eigenvalues, ascending, without vectors.
template <std::size_t N>
inline std::array<double, N> eigvals_hermitian(const CMat<N> &h,
                                               double tol = kHermitianTol) {
  if (!h.is_hermitian(tol))
    throw std::domain_error("eigvals_hermitian: matrix is not Hermitian");
  CMat<N> w = detail::symmetrized(h);
  detail::jacobi_sweeps(w, static_cast<CMat<N> *>(nullptr));
  std::array<double, N> vals;
  for (std::size_t i = 0; i < N; ++i) vals[i] = w(i, i).real();
  std::sort(vals.begin(), vals.end());
  return vals;
}

}  // namespace eakit

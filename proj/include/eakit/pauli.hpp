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

#include "eakit/matrix.hpp"

namespace eakit {

// Operator basis {sigma_0 = I, sigma_1, sigma_2, sigma_3} with
// tr[sigma_j sigma_k] = 2 delta_jk. Two-qubit basis {sigma_m (x) sigma_n}
// is indexed by 4*m + n. Computational basis order is
// |00>, |01>, |10>, |11> with qubit 1 the left tensor factor.

inline const CMat<2> &pauli(std::size_t m) {
  static const std::array<CMat<2>, 4> sigmas = {
      CMat<2>{1, 0, 0, 1},
      CMat<2>{0, 1, 1, 0},
      CMat<2>{0, cplx(0, -1), cplx(0, 1), 0},
      CMat<2>{1, 0, 0, -1},
  };
  return sigmas[m];
}

inline const CMat<4> &pauli2(std::size_t m, std::size_t n) {
  static const std::array<CMat<4>, 16> ops = [] {
    std::array<CMat<4>, 16> t;
    for (std::size_t m = 0; m < 4; ++m)
      for (std::size_t n = 0; n < 4; ++n) t[4 * m + n] = kron(pauli(m), pauli(n));
    return t;
  }();
  return ops[4 * m + n];
}

/// Coefficients c_mn = tr[X sigma_m (x) sigma_n]; real iff X is Hermitian.
/// The inverse is X = (1/4) sum c_mn sigma_m (x) sigma_n.
inline std::array<cplx, 16> pauli2_coeffs_complex(const CMat<4> &x) {
  std::array<cplx, 16> c{};
  for (std::size_t k = 0; k < 16; ++k) {
    const CMat<4> &s = pauli2(k / 4, k % 4);
    cplx t = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) t += x(i, j) * s(j, i);
    c[k] = t;
  }
  return c;
}

inline std::array<double, 16> pauli2_coeffs(const CMat<4> &x) {
  const auto cc = pauli2_coeffs_complex(x);
  std::array<double, 16> c{};
  for (std::size_t k = 0; k < 16; ++k) c[k] = cc[k].real();
  return c;
}

inline CMat<4> from_pauli2_coeffs(const std::array<double, 16> &c) {
  CMat<4> x;
  for (std::size_t k = 0; k < 16; ++k) {
    if (c[k] == 0.0) continue;
    x += pauli2(k / 4, k % 4) * cplx(0.25 * c[k]);
  }
  return x;
}

inline CMat<4> from_pauli2_coeffs_complex(const std::array<cplx, 16> &c) {
  CMat<4> x;
  for (std::size_t k = 0; k < 16; ++k) {
    if (c[k] == cplx{}) continue;
    x += pauli2(k / 4, k % 4) * (0.25 * c[k]);
  }
  return x;
}

inline std::array<double, 4> pauli_coeffs(const CMat<2> &x) {
  std::array<double, 4> c{};
  for (std::size_t m = 0; m < 4; ++m) {
    const CMat<2> &s = pauli(m);
    cplx t = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) t += x(i, j) * s(j, i);
    c[m] = t.real();
  }
  return c;
}

inline CMat<2> from_pauli_coeffs(const std::array<double, 4> &c) {
  CMat<2> x;
  for (std::size_t m = 0; m < 4; ++m) x += pauli(m) * cplx(0.5 * c[m]);
  return x;
}

// ---------------------------------------------------------------------------
// Sparse assembly table. Every sigma_m (x) sigma_n has exactly four nonzero
// entries of modulus one; the table drives the hot-loop reassembly of a
// Hermitian 4x4 from its sixteen Pauli coefficients.
// ---------------------------------------------------------------------------

struct Pauli2Entry {
  std::uint8_t row, col;
  cplx value;
};

inline const std::array<std::array<Pauli2Entry, 4>, 16> &pauli2_sparse() {
  static const std::array<std::array<Pauli2Entry, 4>, 16> table = [] {
    std::array<std::array<Pauli2Entry, 4>, 16> t{};
    for (std::size_t k = 0; k < 16; ++k) {
      const CMat<4> &s = pauli2(k / 4, k % 4);
      std::size_t e = 0;
      for (std::uint8_t i = 0; i < 4; ++i)
        for (std::uint8_t j = 0; j < 4; ++j)
          if (s(i, j) != cplx{}) t[k][e++] = {i, j, s(i, j)};
    }
    return t;
  }();
  return table;
}

/// Hot-loop variant of from_pauli2_coeffs: writes H = (1/4) sum c_k P_k
/// directly through the sparse table.
inline void assemble_from_pauli2(const std::array<double, 16> &c, CMat<4> &h) {
  h = CMat<4>{};
  const auto &table = pauli2_sparse();
  for (std::size_t k = 0; k < 16; ++k) {
    const double w = 0.25 * c[k];
    if (w == 0.0) continue;
    for (const auto &e : table[k]) h(e.row, e.col) += w * e.value;
  }
}

}  // namespace eakit

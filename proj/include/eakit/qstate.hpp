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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eakit/eig.hpp"
#include "eakit/matrix.hpp"

namespace eakit {

/// Default tolerance for sign decisions on eigenvalues (PSD checks,
/// PPT-based separability verdicts).
inline constexpr double kPsdTol = 1e-9;

// ---------------------------------------------------------------------------
// Two-qubit density matrices
// ---------------------------------------------------------------------------

/// 4x4 complex density matrix of two qubits in the basis
/// |00>, |01>, |10>, |11>, qubit 1 the left tensor factor.
class DensityMatrix {
public:
  /// Validates Hermiticity (1e-12), unit trace (1e-12) and positivity
  /// (min eigenvalue >= -1e-10) on construction.
  explicit DensityMatrix(const CMat<4> &m) : m_(m) {
    if (m.hermiticity_defect() > 1e-12)
      throw std::domain_error("DensityMatrix: not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > 1e-12 ||
        std::abs(m.trace().imag()) > 1e-12)
      throw std::domain_error("DensityMatrix: trace is not 1");
    if (min_eig_hermitian(m) < -1e-10)
      throw std::domain_error("DensityMatrix: not positive semidefinite");
  }

  const CMat<4> &matrix() const { return m_; }
  cplx operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  double purity() const { return (m_ * m_).trace().real(); }

private:
  CMat<4> m_;
};

/// Schmidt parametrization of a pure two-qubit state,
///   sqrt(p) |phi (x) chi> + sqrt(1-p) |phi_perp (x) chi_perp>,
/// with each local basis pair given by angles (theta, phi):
///   |phi>      = ( cos(theta/2) e^{-i phi/2},  sin(theta/2) e^{+i phi/2} )
///   |phi_perp> = (-sin(theta/2) e^{-i phi/2},  cos(theta/2) e^{+i phi/2} )
struct PureStateParams {
  double p = 0.5;       // Schmidt weight, in [0, 1]
  double theta1 = 0.0;  // in [0, pi]
  double phi1 = 0.0;    // in [0, 2pi)
  double theta2 = 0.0;  // in [0, pi]
  double phi2 = 0.0;    // in [0, 2pi)

  void validate() const {
    constexpr double pi = std::numbers::pi;
    if (!(p >= 0.0 && p <= 1.0))
      throw std::domain_error("PureStateParams: p outside [0,1]");
    if (!(theta1 >= 0.0 && theta1 <= pi) || !(theta2 >= 0.0 && theta2 <= pi))
      throw std::domain_error("PureStateParams: theta outside [0,pi]");
    if (!(phi1 >= 0.0 && phi1 < 2.0 * pi) || !(phi2 >= 0.0 && phi2 < 2.0 * pi))
      throw std::domain_error("PureStateParams: phi outside [0,2pi)");
  }
};

/// Local basis vector |phi(theta, phi)> and its orthogonal partner.
inline CVec<2> bloch_vector_state(double theta, double phi) {
  const cplx em = std::polar(1.0, -phi / 2.0);
  const cplx ep = std::polar(1.0, phi / 2.0);
  return {std::cos(theta / 2.0) * em, std::sin(theta / 2.0) * ep};
}

inline CVec<2> bloch_vector_state_perp(double theta, double phi) {
  const cplx em = std::polar(1.0, -phi / 2.0);
  const cplx ep = std::polar(1.0, phi / 2.0);
  return {-std::sin(theta / 2.0) * em, std::cos(theta / 2.0) * ep};
}

inline CVec<4> schmidt_pure_vector(const PureStateParams &s) {
  const CVec<2> u1 = bloch_vector_state(s.theta1, s.phi1);
  const CVec<2> v1 = bloch_vector_state_perp(s.theta1, s.phi1);
  const CVec<2> u2 = bloch_vector_state(s.theta2, s.phi2);
  const CVec<2> v2 = bloch_vector_state_perp(s.theta2, s.phi2);
  const double a = std::sqrt(s.p), b = std::sqrt(1.0 - s.p);
  CVec<4> psi{};
  const CVec<4> t1 = kron(u1, u2), t2 = kron(v1, v2);
  for (std::size_t i = 0; i < 4; ++i) psi[i] = a * t1[i] + b * t2[i];
  return psi;
}

/// Rank-1 projector onto the Schmidt-parametrized state.
inline DensityMatrix schmidt_pure_state(const PureStateParams &s) {
  s.validate();
  return DensityMatrix(projector(schmidt_pure_vector(s)));
}

/// |psi_+> = (|00> + |11>)/sqrt(2).
inline CVec<4> psi_plus_vector() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {r, 0.0, 0.0, r};
}

inline DensityMatrix psi_plus_state() {
  return DensityMatrix(projector(psi_plus_vector()));
}

// ---------------------------------------------------------------------------
// Partial transpose, partial traces, separability tests
// ---------------------------------------------------------------------------

/// Transpose of the chosen tensor factor (1 or 2). Pure index shuffling, so
/// applying it twice restores the input bit-exactly.
inline CMat<4> partial_transpose(const CMat<4> &rho, int subsystem = 2) {
  if (subsystem != 1 && subsystem != 2)
    throw std::domain_error("partial_transpose: subsystem must be 1 or 2");
  CMat<4> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          if (subsystem == 2)
            r(2 * i + l, 2 * k + j) = rho(2 * i + j, 2 * k + l);
          else
            r(2 * k + j, 2 * i + l) = rho(2 * i + j, 2 * k + l);
        }
  return r;
}

inline CMat<4> partial_transpose(const DensityMatrix &rho, int subsystem = 2) {
  return partial_transpose(rho.matrix(), subsystem);
}

/// Reduced state of qubit 1 (trace over qubit 2).
inline CMat<2> trace_out_2(const CMat<4> &rho) {
  CMat<2> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      r(i, k) = rho(2 * i + 0, 2 * k + 0) + rho(2 * i + 1, 2 * k + 1);
  return r;
}

/// Reduced state of qubit 2 (trace over qubit 1).
inline CMat<2> trace_out_1(const CMat<4> &rho) {
  CMat<2> r;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t l = 0; l < 2; ++l)
      r(j, l) = rho(0 + j, 0 + l) + rho(2 + j, 2 + l);
  return r;
}

/// Smallest eigenvalue of the partial transpose (subsystem 2). Negative
/// values certify entanglement; for two qubits PPT is also sufficient for
/// separability.
inline double min_pt_eig(const CMat<4> &rho) {
  return min_eig_unchecked(detail::symmetrized(partial_transpose(rho)));
}

/// Peres-Horodecki test: true iff the partial transpose is positive
/// semidefinite within tol. Equivalent to separability for two qubits.
inline bool is_ppt(const DensityMatrix &rho, double tol = kPsdTol) {
  return min_pt_eig(rho.matrix()) >= -tol;
}

/// Reduction criterion: both Tr_2[rho] (x) I - rho and I (x) Tr_1[rho] - rho
/// must be positive semidefinite within tol.
inline bool reduction_check(const DensityMatrix &rho, double tol = kPsdTol) {
  const CMat<4> &m = rho.matrix();
  const CMat<4> a = kron(trace_out_2(m), CMat<2>::identity()) - m;
  const CMat<4> b = kron(CMat<2>::identity(), trace_out_1(m)) - m;
  return min_eig_hermitian(a) >= -tol && min_eig_hermitian(b) >= -tol;
}

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

/// Eigenvalues of a two-qubit Hermitian operator, sorted ascending.
struct Spectrum {
  std::array<double, 4> eigenvalues;
};

inline Spectrum spectrum(const CMat<4> &h) {
  return Spectrum{eigvals_hermitian(h)};
}

inline Spectrum spectrum(const DensityMatrix &rho) {
  return spectrum(rho.matrix());
}

}  // namespace eakit

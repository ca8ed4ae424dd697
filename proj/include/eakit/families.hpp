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
#include <cstdlib>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "eakit/qchannel.hpp"

namespace eakit {

// Constructors for the channel families with exact classification rules.
// Boundary parameters are accepted inclusively; all criteria downstream are
// closed conditions.

namespace detail {
inline constexpr double kRangeSlack = 1e-12;
}

/// E[X] = q X + (1-q) tr[X] I/2; PTM diag(1, q, q, q), q in [-1/3, 1].
inline QubitChannel depolarizing(double q) {
  if (q < -1.0 / 3.0 - detail::kRangeSlack || q > 1.0 + detail::kRangeSlack)
    throw std::domain_error("depolarizing: q outside [-1/3, 1]");
  RMat<4> r;
  r(0, 0) = 1.0;
  r(1, 1) = r(2, 2) = r(3, 3) = q;
  auto ch = QubitChannel::from_ptm(r, CpFlag::kCp);
  ch.set_family(DepolarizingParams{q});
  return ch;
}

inline QubitChannel identity_channel() { return depolarizing(1.0); }

/// The four complete-positivity constraints for PTM diag(1, l1, l2, l3).
inline std::array<double, 4> tetrahedron_margins(double l1, double l2,
                                                 double l3) {
  return {1.0 + l1 + l2 + l3, 1.0 + l1 - l2 - l3, 1.0 - l1 + l2 - l3,
          1.0 - l1 - l2 + l3};
}

inline bool in_cp_tetrahedron(double l1, double l2, double l3,
                              double tol = detail::kRangeSlack) {
  for (double m : tetrahedron_margins(l1, l2, l3))
    if (m < -tol) return false;
  return true;
}

/// Pauli channel with PTM diag(1, l1, l2, l3).
inline QubitChannel pauli_diagonal(double l1, double l2, double l3) {
  static const char *const names[4] = {
      "1 + l1 + l2 + l3 >= 0", "1 + l1 - l2 - l3 >= 0",
      "1 - l1 + l2 - l3 >= 0", "1 - l1 - l2 + l3 >= 0"};
  const auto margins = tetrahedron_margins(l1, l2, l3);
  for (std::size_t i = 0; i < 4; ++i)
    if (margins[i] < -detail::kRangeSlack)
      throw std::domain_error(std::string("pauli_diagonal: violates ") +
                              names[i]);
  RMat<4> r;
  r(0, 0) = 1.0;
  r(1, 1) = l1;
  r(2, 2) = l2;
  r(3, 3) = l3;
  auto ch = QubitChannel::from_ptm(r, CpFlag::kCp);
  ch.set_family(PauliDiagonalParams{l1, l2, l3});
  return ch;
}

/// PTM diag(1, l, l, 1); l = 0 is the projective measurement in the sigma_3
/// basis, l = 1 the identity.
inline QubitChannel phase_damping(double l) {
  if (l < -1.0 - detail::kRangeSlack || l > 1.0 + detail::kRangeSlack)
    throw std::domain_error("phase_damping: l outside [-1, 1]");
  RMat<4> r;
  r(0, 0) = 1.0;
  r(1, 1) = r(2, 2) = l;
  r(3, 3) = 1.0;
  auto ch = QubitChannel::from_ptm(r, CpFlag::kCp);
  ch.set_family(PhaseDampingParams{l});
  return ch;
}

/// Kraus operators of the generalized amplitude-damping channel A_{p,gamma}.
inline KrausList gad_kraus(double p, double gamma) {
  const double sg = std::sqrt(gamma), sgc = std::sqrt(1.0 - gamma);
  const double sp = std::sqrt(p), spc = std::sqrt(1.0 - p);
  return {
      CMat<2>{sg, 0, 0, sg * spc},
      CMat<2>{0, sg * sp, 0, 0},
      CMat<2>{sgc * spc, 0, 0, sgc},
      CMat<2>{0, 0, sgc * sp, 0},
  };
}

/// Generalized amplitude damping with rate p and equilibrium state
/// diag(gamma, 1-gamma). PTM diag(1, sqrt(1-p), sqrt(1-p), 1-p) with
/// translation p(2 gamma - 1) along sigma_3.
inline QubitChannel gad(double p, double gamma) {
  if (p < -detail::kRangeSlack || p > 1.0 + detail::kRangeSlack)
    throw std::domain_error("gad: p outside [0, 1]");
  if (gamma < -detail::kRangeSlack || gamma > 1.0 + detail::kRangeSlack)
    throw std::domain_error("gad: gamma outside [0, 1]");
  auto ch = ptm_from_kraus(gad_kraus(std::clamp(p, 0.0, 1.0),
                                     std::clamp(gamma, 0.0, 1.0)));
  ch.set_family(GadParams{p, gamma});
  return ch;
}

/// A_{p,0}: amplitude damping toward the equilibrium state |1><1|.
inline QubitChannel amplitude_damping(double p) {
  if (p < -detail::kRangeSlack || p > 1.0 + detail::kRangeSlack)
    throw std::domain_error("amplitude_damping: p outside [0, 1]");
  auto ch = gad(p, 0.0);
  ch.set_family(AmplitudeDampingParams{p});
  return ch;
}

/// Extremal qubit channel
///   [ 1          0      0      0           ]
///   [ 0          cos u  0      0           ]
///   [ 0          0      cos v  0           ]
///   [ sin u sin v  0    0      cos u cos v ],
/// u in [0, 2pi), v in [0, pi). Entanglement-breaking iff
/// cos u = 0 or cos v = 0.
inline QubitChannel ruskai_extremal(double u, double v) {
  constexpr double pi = std::numbers::pi;
  if (u < -detail::kRangeSlack || u >= 2.0 * pi + detail::kRangeSlack)
    throw std::domain_error("ruskai_extremal: u outside [0, 2pi)");
  if (v < -detail::kRangeSlack || v >= pi + detail::kRangeSlack)
    throw std::domain_error("ruskai_extremal: v outside [0, pi)");
  RMat<4> r;
  r(0, 0) = 1.0;
  r(1, 1) = std::cos(u);
  r(2, 2) = std::cos(v);
  r(3, 3) = std::cos(u) * std::cos(v);
  r(3, 0) = std::sin(u) * std::sin(v);
  auto ch = QubitChannel::from_ptm(r, CpFlag::kCp);
  ch.set_family(RuskaiExtremalParams{u, v});
  return ch;
}

// ---------------------------------------------------------------------------
// Family spec grammar (CLI)
//
//   depol:q=0.5   pauli:0.1,0.2,0.3   pd:l=0.2   ad:p=0.6
//   gad:p=0.4,gamma=0.25   extremal:u=0.7,v=0.3   identity
// ---------------------------------------------------------------------------

class FamilySpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline double parse_number(std::string_view token) {
  const std::string s(token);
  char *end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw FamilySpecError("family spec: bad number '" + s + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

inline double keyed_value(std::string_view spec, std::string_view body,
                          std::string_view key) {
  for (const auto part : split(body, ',')) {
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos)
      throw FamilySpecError("family spec: expected key=value in '" +
                            std::string(part) + "'");
    if (part.substr(0, eq) == key) return parse_number(part.substr(eq + 1));
  }
  throw FamilySpecError("family spec '" + std::string(spec) +
                        "': missing parameter '" + std::string(key) + "'");
}

}  // namespace detail

/// Parses a family spec string into a channel. Throws FamilySpecError with a
/// message naming the offending token.
inline QubitChannel parse_family_spec(std::string_view spec) {
  if (spec == "identity") return identity_channel();
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw FamilySpecError("family spec: missing ':' in '" + std::string(spec) +
                          "'");
  const std::string_view name = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  try {
    if (name == "depol") return depolarizing(detail::keyed_value(spec, body, "q"));
    if (name == "pd") return phase_damping(detail::keyed_value(spec, body, "l"));
    if (name == "ad") return amplitude_damping(detail::keyed_value(spec, body, "p"));
    if (name == "gad")
      return gad(detail::keyed_value(spec, body, "p"),
                 detail::keyed_value(spec, body, "gamma"));
    if (name == "extremal")
      return ruskai_extremal(detail::keyed_value(spec, body, "u"),
                             detail::keyed_value(spec, body, "v"));
    if (name == "pauli") {
      const auto parts = detail::split(body, ',');
      if (parts.size() != 3)
        throw FamilySpecError("family spec 'pauli': expected three values in '" +
                              std::string(body) + "'");
      return pauli_diagonal(detail::parse_number(parts[0]),
                            detail::parse_number(parts[1]),
                            detail::parse_number(parts[2]));
    }
  } catch (const std::domain_error &e) {
    throw FamilySpecError("family spec '" + std::string(spec) +
                          "': " + e.what());
  }
  throw FamilySpecError("family spec: unknown family '" + std::string(name) +
                        "'");
}

}  // namespace eakit

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

#include <variant>

namespace eakit {

// Parameter records for the channel families handled analytically.
// Channels constructed through eakit/families.hpp carry one of these so the
// classifier can pick the exact rule for a recognized pair.

struct DepolarizingParams {
  double q;  // in [-1/3, 1]
};

struct PauliDiagonalParams {
  double l1, l2, l3;  // inside the CP tetrahedron
};

struct PhaseDampingParams {
  double l;  // in [-1, 1]
};

struct AmplitudeDampingParams {
  double p;  // in [0, 1]
};

struct GadParams {
  double p;      // damping rate, in [0, 1]
  double gamma;  // equilibrium parameter, in [0, 1]
};

struct RuskaiExtremalParams {
  double u;  // in [0, 2pi)
  double v;  // in [0, pi)
};

using FamilyParams =
    std::variant<DepolarizingParams, PauliDiagonalParams, PhaseDampingParams,
                 AmplitudeDampingParams, GadParams, RuskaiExtremalParams>;

}  // namespace eakit

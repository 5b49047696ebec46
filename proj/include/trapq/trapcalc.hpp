// Copyright 2026 The trapq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace trapq {

/// CODATA 2018 values, SI units.
namespace constants {
inline constexpr double e = 1.602176634e-19;          // C
inline constexpr double m_e = 9.1093837015e-31;       // kg
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double mu_B = 9.2740100783e-24;      // J / T
inline constexpr double g_e = 2.00231930436256;       // |g|
inline constexpr double c = 299792458.0;              // m / s
inline constexpr double two_pi = 6.283185307179586;
}  // namespace constants

class TrapUnstable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct TrapParameters {
  double B = 5.3;        // T
  double V0 = 11.26;     // V
  double d = 3.5e-3;     // m
  double g = constants::g_e;

  /// Throws std::invalid_argument unless B, V0, d > 0.
  void validate() const;
};

/// Angular frequencies in rad/s.
struct Frequencies {
  double omega_c = 0;
  double omega_c_tilde = 0;
  double omega_c_prime = 0;
  double omega_m = 0;
  double omega_z = 0;
  double omega_s = 0;
  double omega_sa = 0;
  double omega_sc = 0;
};

/// Throws TrapUnstable when ω_c² <= 2 ω_z².
Frequencies frequencies_from(const TrapParameters& p);

/// η = k √(ħ / 2 m ω_z).
double physical_eta(const Frequencies& f, double wavenumber);

/// Free-space wavenumber of the spin-axial sideband drive, ω_sa / c.
inline double sideband_wavenumber(const Frequencies& f) {
  return f.omega_sa / constants::c;
}

}  // namespace trapq

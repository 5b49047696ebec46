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

#include "trapq/trapcalc.hpp"

#include <cmath>
#include <sstream>

namespace trapq {

void TrapParameters::validate() const {
  if (!(B > 0) || !(V0 > 0) || !(d > 0) || !std::isfinite(B) ||
      !std::isfinite(V0) || !std::isfinite(d)) {
    std::ostringstream msg;
    msg << "trap parameters must be positive (B=" << B << " T, V0=" << V0
        << " V, d=" << d << " m)";
    throw std::invalid_argument(msg.str());
  }
}

Frequencies frequencies_from(const TrapParameters& p) {
  using namespace constants;
  p.validate();
  Frequencies f;
  f.omega_c = e * p.B / m_e;
  f.omega_z = std::sqrt(e * p.V0 / (m_e * p.d * p.d));
  const double disc = f.omega_c * f.omega_c - 2 * f.omega_z * f.omega_z;
  if (!(disc > 0)) {
    std::ostringstream msg;
    msg << "trap is unstable: omega_c^2 = " << f.omega_c * f.omega_c
        << " <= 2 omega_z^2 = " << 2 * f.omega_z * f.omega_z;
    throw TrapUnstable(msg.str());
  }
  f.omega_c_tilde = std::sqrt(disc);
  f.omega_c_prime = (f.omega_c + f.omega_c_tilde) / 2;
  // (ω_c − ω̃_c)/2 written as ω_z²/(ω_c + ω̃_c) to avoid cancellation.
  f.omega_m = f.omega_z * f.omega_z / (f.omega_c + f.omega_c_tilde);
  f.omega_s = p.g * e * p.B / (2 * m_e);
  f.omega_sa = f.omega_s - f.omega_z;
  f.omega_sc = f.omega_s - f.omega_c_prime;
  return f;
}

double physical_eta(const Frequencies& f, double wavenumber) {
  if (!(wavenumber >= 0)) {
    throw std::invalid_argument("wavenumber must be >= 0");
  }
  return wavenumber * std::sqrt(constants::hbar / (2 * constants::m_e * f.omega_z));
}

}  // namespace trapq

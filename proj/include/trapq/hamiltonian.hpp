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

#include <functional>
#include <stdexcept>
#include <vector>

#include "trapq/core.hpp"
#include "trapq/pulses.hpp"

namespace trapq {

/**
 * Drive of one of the three interaction-picture Hamiltonians. All rates are
 * angular frequencies (rad/s); Hamiltonians below are H/ħ.
 *
 * For SC drives `rabi` is the single-quantum coupling
 * g μ_B b / √(2 m ħ ω̃_c), and the pulse angle is θ(t) = −rabi·t.
 */
struct DriveSpec {
  PulseKind kind = PulseKind::S;
  double rabi = 1.0;
  double phase = 0.0;
  /// Δ = ω − ω_s, used by SA drives.
  double detuning = 0.0;
  LambDicke eta{0.0};
  double omega_z = 1.0;

  void validate(PulseKind expected) const;
};

/// Ω = g|e|b / 2m for a transverse field of amplitude b (tesla).
double spin_rabi(double b_tesla);
/// g μ_B b / √(2 m ħ ω̃_c).
double sc_coupling(double b_tesla, double omega_c_tilde);

/// Angle of the spin-cyclotron pulse after time t.
inline double sc_theta(const DriveSpec& d, double t) { return -d.rabi * t; }
/// l = 0 sideband angle Ω t · η e^{−η²/2} after time t.
double sa_theta0(const DriveSpec& d, double t);

Operator build_h_s(const DriveSpec& drive, const SpaceConfig& cfg);
Operator build_h_sa(double t, const DriveSpec& drive, const SpaceConfig& cfg);
Operator build_h_sc(const DriveSpec& drive, const SpaceConfig& cfg);

/// H(t)/ħ together with the largest frequency it contains.
struct Hamiltonian {
  SpaceConfig cfg;
  std::function<CMatrix(double)> at;
  double max_frequency = 0.0;
};

Hamiltonian model_s(const DriveSpec& drive, const SpaceConfig& cfg);
Hamiltonian model_sa(const DriveSpec& drive, const SpaceConfig& cfg);
Hamiltonian model_sc(const DriveSpec& drive, const SpaceConfig& cfg);

/// Fixed RK4 step h <= 2π / (steps_per_period · f_max).
struct StepPolicy {
  double steps_per_period = 200.0;
  std::size_t max_steps = 100'000'000;
};

class StepLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t step_count(
    const Hamiltonian& h, double duration, const StepPolicy& policy);

/**
 * Propagates the D x k matrix `initial` under i d/dt X = H(t) X for
 * `duration`, then projects the result onto the nearest isometry.
 */
CMatrix integrate_columns(
    const Hamiltonian& h, double duration, const StepPolicy& policy,
    const CMatrix& initial);

Operator integrate(
    const Hamiltonian& h, double duration, const StepPolicy& policy);

/// Setup of the rotating-wave check on the l = 0 spin-axial block.
struct RwaSetup {
  double eta = 0.5;
  SpaceConfig cfg{2, 8};
  double theta0 = kPi / 2;
  double phi = 0.3;
  StepPolicy policy{};
};

struct RwaPoint {
  double ratio = 0.0;  ///< Ω / ω_z
  double angle_error = 0.0;
  std::size_t steps = 0;
};

/// Integrates H'_sa on resonance (Δ = −ω_z) for a θ_0 pulse and compares
/// the |↓ 0 1⟩ → |↑ 0 0⟩ rotation angle to the analytic one.
RwaPoint rwa_block_angle_error(double ratio, const RwaSetup& setup);

std::vector<RwaPoint> rwa_sweep(
    const std::vector<double>& ratios, const RwaSetup& setup);

}  // namespace trapq

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
#include <string>
#include <string_view>
#include <vector>

#include "trapq/core.hpp"

namespace trapq {

enum class PulseKind { S, SA, SC };

std::string_view to_string(PulseKind kind);
/// Accepts "s", "sa", "sc" (any case).
PulseKind parse_pulse_kind(std::string_view text);

/// Reduces an angle to (−π, π].
double canonical_phase(double phi);

/**
 * One square pulse. For SA pulses `theta` is the angle of the l = 0 block;
 * for SC pulses it is the angle that the n-th block scales by √n.
 */
struct Pulse {
  PulseKind kind = PulseKind::S;
  double theta = 0.0;
  double phi = 0.0;

  /// Equality up to 2π in the phase.
  bool equivalent(const Pulse& other, double tol = 0.0) const;
  bool operator==(const Pulse&) const = default;
};

inline Pulse p_s(double theta, double phi) { return {PulseKind::S, theta, phi}; }
inline Pulse p_sa(double theta, double phi) {
  return {PulseKind::SA, theta, phi};
}
inline Pulse p_sc(double theta, double phi) {
  return {PulseKind::SC, theta, phi};
}

/// Lamb-Dicke parameter of the travelling wave.
class LambDicke {
 public:
  explicit LambDicke(double eta);
  double value() const { return eta_; }

 private:
  double eta_;
};

class EmptySchedule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Pulses in temporal order. `global_phase` is pure bookkeeping: it is
 * multiplied into the composed operator but corresponds to no pulse.
 */
struct Schedule {
  std::string name;
  std::vector<Pulse> pulses;
  double global_phase = 0.0;

  /// `*this` followed by `later`.
  Schedule then(const Schedule& later) const;
  Schedule with_phase_offset(double offset) const;
  Schedule renamed(std::string new_name) const;
};

/// Generalized Laguerre polynomial L_n^m(x) by three-term recurrence.
double laguerre_assoc(int n, int m, double x);

/// Rotation angle of the (|↓ n l+1⟩, |↑ n l⟩) block given the l = 0 angle.
double theta_l(double theta0, int l, LambDicke eta);

/// 2x2 evolution blocks, in the basis order documented per kind.
Eigen::Matrix2cd block_s(double angle, double phi);
Eigen::Matrix2cd block_sa(double angle, double phi);
Eigen::Matrix2cd block_sc(double angle, double phi);

Operator propagator_s(double theta, double phi, const SpaceConfig& cfg);
Operator propagator_sa(
    double theta0, double phi, LambDicke eta, const SpaceConfig& cfg);
Operator propagator_sc(double theta, double phi, const SpaceConfig& cfg);
Operator propagator(const Pulse& p, LambDicke eta, const SpaceConfig& cfg);

/**
 * Left-multiplies the D x k matrix `columns` by the pulse propagator in
 * place, touching only the coupled 2x2 blocks.
 */
void apply_pulse(
    const Pulse& p, LambDicke eta, const SpaceConfig& cfg, CMatrix& columns);

/// Product U_k···U_1 times e^{i global_phase}.
Operator compose(
    const Schedule& schedule, const SpaceConfig& cfg, LambDicke eta);

/// Population flagged by the truncation audit.
inline constexpr double kBoundaryWarning = 1e-10;

/// Population on the levels n = n_cyc − 1 or l = n_ax − 1.
double boundary_population(const StateVector& state);

struct ComposeResult {
  Operator op;
  /// Worst boundary population over computational inputs and pulse steps.
  double boundary_max = 0.0;
};

ComposeResult compose_with_diagnostics(
    const Schedule& schedule, const SpaceConfig& cfg, LambDicke eta);

struct Trajectory {
  StateVector final_state;
  double boundary_max = 0.0;
};

/// Runs the schedule on a state, auditing the boundary after every pulse.
Trajectory run_schedule(
    const Schedule& schedule, const StateVector& initial, LambDicke eta);

}  // namespace trapq

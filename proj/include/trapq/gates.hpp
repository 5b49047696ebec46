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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trapq/core.hpp"
#include "trapq/pulses.hpp"

namespace trapq {

enum class Qubit { Spin = 0, Cyclotron = 1, Axial = 2 };

std::string_view to_string(Qubit q);

/// Standard small gates; matrices act on qubits in the order they are listed.
namespace ideal {
Eigen::Matrix2cd identity();
Eigen::Matrix2cd x();
Eigen::Matrix2cd z();
Eigen::Matrix2cd hadamard();
Eigen::Matrix2cd phase(double varphi);
inline Eigen::Matrix2cd t() { return phase(kPi / 4); }
inline Eigen::Matrix2cd s() { return phase(kPi / 2); }
Eigen::Matrix4cd cnot();
Eigen::Matrix4cd cz();
Eigen::Matrix4cd swap();
Eigen::Matrix4cd cphase();  ///< diag(1, −1, −1, −1)

/// Lifts a 2^k x 2^k matrix on `qubits` to the 3-qubit register.
Matrix8 lift(const CMatrix& u, const std::vector<Qubit>& qubits);
}  // namespace ideal

inline constexpr double kFidelityTol = 1e-9;
inline constexpr double kLeakageTol = 1e-9;
/// On ‖block − ideal‖_max; global phase is bookkept, so this is tight too.
inline constexpr double kPhaseTol = 1e-9;

/// φ_s of the swapping composite.
double swapping_phase();

struct GateRecipe {
  std::string name;
  std::vector<Qubit> targets;
  /// Global phase is bookkept so that the block matches `ideal` exactly.
  Schedule schedule;
  GateSpec ideal;
  std::optional<double> phi_s;
  std::optional<double> alpha;
  /// False for spin-axial recipes built off the |θ_1/θ_0| = √2 working points.
  bool exact_ratio = true;
  std::string note;
};

/// η at which |θ_1/θ_0| = √2 (η = 0 or η = 2).
bool is_exact_ratio(LambDicke eta);

GateRecipe phase_gate_spin(double varphi);
GateRecipe hadamard_spin();
GateRecipe not_spin();

/// Spin recipe whose ideal equals `u` up to global phase, if registered.
std::optional<GateRecipe> spin_recipe_for(const Eigen::Matrix2cd& u);

GateRecipe swapping_sc();
GateRecipe cphase_sc();
GateRecipe swap_sc_full();
GateRecipe cz_sc();
/// Control spin, target cyclotron.
GateRecipe cnot_sc();
/// Control cyclotron, target spin.
GateRecipe cnot_cs();

/// Throws std::invalid_argument when `u` has no spin recipe.
GateRecipe single_qubit_on_cyclotron(const Eigen::Matrix2cd& u);

GateRecipe swapping_sa(LambDicke eta);
GateRecipe cphase_sa(LambDicke eta);
GateRecipe swap_sa_full(LambDicke eta);
GateRecipe cz_sa(LambDicke eta);
/// Control spin, target axial.
GateRecipe cnot_sa(LambDicke eta);
/// Control axial, target spin.
GateRecipe cnot_as(LambDicke eta);
GateRecipe single_qubit_on_axial(const Eigen::Matrix2cd& u, LambDicke eta);

/// I_spin ⊗ CNOT(control cyclotron, target axial) from four two-qubit CNOTs.
GateRecipe cnot_cyclotron_to_axial(LambDicke eta);

Schedule eigenstate_transfer_000_to_111(const std::array<double, 5>& phases);

/// Every recipe checked by verify-gates.
std::vector<GateRecipe> gate_catalog(LambDicke eta);

/// Looks up a catalog recipe by name; throws std::invalid_argument.
GateRecipe catalog_recipe(const std::string& name, LambDicke eta);

struct RecipeReport {
  std::string name;
  std::size_t pulse_count = 0;
  double fidelity = 0.0;
  double leakage = 0.0;
  double boundary = 0.0;
  /// ‖block − ideal‖_max, sensitive to the bookkept global phase.
  double phase_error = 0.0;
  bool exact_ratio = true;
  bool pass = false;
};

RecipeReport verify_recipe(
    const GateRecipe& recipe, const SpaceConfig& cfg, LambDicke eta);

}  // namespace trapq

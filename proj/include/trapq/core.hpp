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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace trapq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Matrix8 = Eigen::Matrix<Complex, 8, 8>;

inline constexpr Complex i_{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance on ‖U†U − I‖_max for anything flagged unitary.
inline constexpr double kUnitaryTol = 1e-12;

class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotUnitary : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * Truncation of the two motional oscillators. Cyclotron levels run over
 * 0..n_cyc-1 and axial levels over 0..n_ax-1; the spin is always two-level.
 */
struct SpaceConfig {
  int n_cyc = 6;
  int n_ax = 6;

  SpaceConfig() = default;
  SpaceConfig(int cyc, int ax);

  std::size_t dim() const { return 2 * std::size_t(n_cyc) * std::size_t(n_ax); }
  bool operator==(const SpaceConfig&) const = default;
};

/// Label |j n l⟩: spin j (0 = down = logical 0), cyclotron n, axial l.
struct BasisIndex {
  int j = 0;
  int n = 0;
  int l = 0;
  bool operator==(const BasisIndex&) const = default;
};

std::size_t flat_index(int j, int n, int l, const SpaceConfig& cfg);
inline std::size_t flat_index(const BasisIndex& b, const SpaceConfig& cfg) {
  return flat_index(b.j, b.n, b.l, cfg);
}
BasisIndex unflatten(std::size_t index, const SpaceConfig& cfg);

/// Flat index of computational state x = 4j + 2n + l (spin most significant).
std::size_t computational_index(unsigned x, const SpaceConfig& cfg);

/// True for the eight states with n <= 1 and l <= 1.
bool is_computational(const BasisIndex& b);

class StateVector {
 public:
  /// Validates the norm to `norm_tol` and then renormalizes exactly.
  StateVector(SpaceConfig cfg, CVector amplitudes, double norm_tol = 1e-9);

  static StateVector basis(const SpaceConfig& cfg, const BasisIndex& b);
  /// Computational basis state from a 3-bit label, spin first.
  static StateVector computational(const SpaceConfig& cfg, unsigned x);

  const SpaceConfig& config() const { return cfg_; }
  const CVector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[Eigen::Index(i)]; }
  double population(std::size_t i) const { return std::norm((*this)[i]); }

 private:
  SpaceConfig cfg_;
  CVector amps_;
};

class Operator {
 public:
  /// When `unitary` is set the matrix is checked against kUnitaryTol.
  Operator(SpaceConfig cfg, CMatrix entries, bool unitary);

  static Operator identity(const SpaceConfig& cfg);

  const SpaceConfig& config() const { return cfg_; }
  const CMatrix& matrix() const { return m_; }
  bool is_unitary() const { return unitary_; }

  Operator operator*(const Operator& rhs) const;
  Operator operator*(Complex scalar) const;
  StateVector apply(const StateVector& psi) const;
  Operator adjoint() const;

 private:
  SpaceConfig cfg_;
  CMatrix m_;
  bool unitary_;
};

/// Max-norm deviation ‖U†U − I‖_max.
double unitarity_error(const CMatrix& u);

/// Ideal unitary on the computational subspace, qubit order (spin, cyc, ax).
struct GateSpec {
  std::string name;
  Matrix8 ideal;

  GateSpec(std::string name, const Matrix8& ideal);
};

Operator subspace_projector(const SpaceConfig& cfg);

double leakage(const StateVector& state);

/// The 8x8 block of `op` between computational states.
Matrix8 computational_block(const Operator& op);

/// Embeds an 8x8 block; non-computational states map to themselves.
Operator embed(const Matrix8& block, const SpaceConfig& cfg);

/// |Tr(ideal† A)| / 8 with A the computational block of `actual`.
double gate_fidelity(const Operator& actual, const GateSpec& spec);

/// Worst leakage over the eight computational basis inputs.
double max_leakage(const Operator& op);

}  // namespace trapq

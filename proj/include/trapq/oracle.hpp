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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trapq/core.hpp"
#include "trapq/pulses.hpp"

namespace trapq {

enum class FnClass { Constant, Balanced, Other };

std::string_view to_string(FnClass c);

/**
 * Three-bit boolean function. The input x is read as (spin, cyclotron,
 * axial) with spin most significant. The hex code is the output string
 * f(0)f(1)···f(7) read as a big-endian byte, so 00001111 is 0x0F.
 */
class BoolFn3 {
 public:
  explicit BoolFn3(std::uint8_t code) : code_(code) {}

  /// "0F" style hex, or an 8-character bitstring f(0)···f(7).
  static BoolFn3 parse(std::string_view selector);

  std::uint8_t code() const { return code_; }
  bool operator()(unsigned x) const { return (code_ >> (7 - x)) & 1u; }
  int weight() const;
  /// Two upper-case hex digits.
  std::string hex() const;
  std::string bits() const;
  /// f_{FF−x}.
  BoolFn3 complement() const { return BoolFn3(std::uint8_t(~code_)); }

 private:
  std::uint8_t code_;
};

FnClass classify(const BoolFn3& f);

class NotSynthesizable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Diagonal phase (π/2)·[k + Σ c_i x_i + Σ d_ij (x_i ⊕ x_j)], all integer
 * coefficients mod 4. Qubit 0 is spin, 1 cyclotron, 2 axial; pairs are
 * ordered (0,1), (0,2), (1,2).
 */
struct PhasePoly {
  std::array<int, 3> c{};
  std::array<int, 3> d{};
  int k = 0;

  static constexpr std::array<std::array<int, 2>, 3> kPairs{
      {{0, 1}, {0, 2}, {1, 2}}};

  /// Exponent of i at input x, in 0..3.
  int quarter_turns(unsigned x) const;
  bool operator==(const PhasePoly&) const = default;
};

/// Integer multilinear coefficients a_T of f, indexed by subset mask
/// (bit i set = qubit i in T).
std::array<int, 8> mobius_coefficients(const BoolFn3& f);

/// Throws NotSynthesizable for functions that are neither constant nor
/// balanced.
PhasePoly synthesize_phase_poly(const BoolFn3& f);

/// Pulse schedule for the diagonal of `p`; `k` enters as bookkept phase.
Schedule oracle_schedule(const PhasePoly& p, LambDicke eta);

/// compose(oracle_schedule(...)); identity (times the constant) when the
/// polynomial needs no pulses.
Operator uf_operator(const BoolFn3& f, const SpaceConfig& cfg, LambDicke eta);

struct DJResult {
  std::array<double, 8> probabilities{};
  double leakage = 0.0;
  double boundary = 0.0;
  std::size_t pulse_count = 0;
  /// Decision from P(|000⟩) > 1/2.
  FnClass decision = FnClass::Other;
};

/// H on every qubit, U_f, H on every qubit, read out; all at pulse level.
DJResult run_dj(const BoolFn3& f, const SpaceConfig& cfg, LambDicke eta);

/// Counts for the eight outcomes plus a ninth "leaked" bin.
std::array<std::uint64_t, 9> sample_measurement(
    std::span<const double> probabilities, std::uint64_t seed,
    std::uint64_t shots);

}  // namespace trapq

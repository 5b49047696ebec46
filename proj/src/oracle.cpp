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

#include "trapq/oracle.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "trapq/gates.hpp"

namespace trapq {

std::string_view to_string(FnClass c) {
  switch (c) {
    case FnClass::Constant:
      return "constant";
    case FnClass::Balanced:
      return "balanced";
    case FnClass::Other:
      return "other";
  }
  return "?";
}

BoolFn3 BoolFn3::parse(std::string_view sel) {
  if (sel.size() == 2) {
    unsigned v = 0;
    for (char ch : sel) {
      const int c = std::toupper(static_cast<unsigned char>(ch));
      v <<= 4;
      if (c >= '0' && c <= '9') {
        v |= unsigned(c - '0');
      } else if (c >= 'A' && c <= 'F') {
        v |= unsigned(c - 'A' + 10);
      } else {
        throw std::invalid_argument(
            "bad hex function selector '" + std::string(sel) + "'");
      }
    }
    return BoolFn3(std::uint8_t(v));
  }
  if (sel.size() == 8) {
    unsigned v = 0;
    for (char ch : sel) {
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument(
            "bad bitstring function selector '" + std::string(sel) + "'");
      }
      v = (v << 1) | unsigned(ch - '0');
    }
    return BoolFn3(std::uint8_t(v));
  }
  throw std::invalid_argument(
      "function selector must be two hex digits or eight bits, got '" +
      std::string(sel) + "'");
}

int BoolFn3::weight() const {
  int w = 0;
  for (unsigned x = 0; x < 8; ++x) w += (*this)(x);
  return w;
}

std::string BoolFn3::hex() const {
  char buf[3];
  std::snprintf(buf, sizeof buf, "%02X", unsigned(code_));
  return buf;
}

std::string BoolFn3::bits() const {
  std::string s;
  for (unsigned x = 0; x < 8; ++x) s += (*this)(x) ? '1' : '0';
  return s;
}

FnClass classify(const BoolFn3& f) {
  const int w = f.weight();
  if (w == 0 || w == 8) return FnClass::Constant;
  if (w == 4) return FnClass::Balanced;
  return FnClass::Other;
}

namespace {

int mod4(int v) { return ((v % 4) + 4) % 4; }

unsigned bit_of(unsigned x, int qubit) { return (x >> (2 - qubit)) & 1u; }

unsigned x_of_mask(unsigned mask) {
  unsigned x = 0;
  for (int q = 0; q < 3; ++q) {
    if (mask & (1u << q)) x |= 1u << (2 - q);
  }
  return x;
}

constexpr Qubit kQubits[3] = {Qubit::Spin, Qubit::Cyclotron, Qubit::Axial};

GateRecipe phase_on(Qubit q, int quarter_turns, LambDicke eta) {
  const double angle = quarter_turns == 3 ? -kPi / 2 : quarter_turns * kPi / 2;
  switch (q) {
    case Qubit::Spin:
      return phase_gate_spin(angle);
    case Qubit::Cyclotron:
      return single_qubit_on_cyclotron(ideal::phase(angle));
    case Qubit::Axial:
      return single_qubit_on_axial(ideal::phase(angle), eta);
  }
  throw std::logic_error("unreachable");
}

GateRecipe cnot_for_pair(int a, int b, LambDicke eta) {
  if (a == 0 && b == 1) return cnot_sc();
  if (a == 0 && b == 2) return cnot_sa(eta);
  return cnot_cyclotron_to_axial(eta);
}

}  // namespace

int PhasePoly::quarter_turns(unsigned x) const {
  int q = k;
  for (int i = 0; i < 3; ++i) q += c[i] * int(bit_of(x, i));
  for (int p = 0; p < 3; ++p) {
    q += d[p] * int(bit_of(x, kPairs[p][0]) ^ bit_of(x, kPairs[p][1]));
  }
  return mod4(q);
}

std::array<int, 8> mobius_coefficients(const BoolFn3& f) {
  std::array<int, 8> a{};
  for (unsigned t = 0; t < 8; ++t) {
    for (unsigned s = 0; s < 8; ++s) {
      if ((s & ~t) != 0) continue;
      const int sign = (std::popcount(t) - std::popcount(s)) % 2 ? -1 : 1;
      a[t] += sign * int(f(x_of_mask(s)));
    }
  }
  return a;
}

PhasePoly synthesize_phase_poly(const BoolFn3& f) {
  if (classify(f) == FnClass::Other) {
    throw NotSynthesizable(
        "f_" + f.hex() + " has weight " + std::to_string(f.weight()) +
        "; only constant or balanced functions are synthesized");
  }
  const std::array<int, 8> a = mobius_coefficients(f);
  if (a[7] % 2 != 0) {
    throw NotSynthesizable(
        "f_" + f.hex() + " has an odd cubic coefficient; it is not reachable "
        "from Z, S and J gates");
  }
  // 2f mod 4, with 2 x_i x_j = x_i + x_j − (x_i ⊕ x_j).
  PhasePoly p;
  p.k = mod4(2 * a[0]);
  for (int i = 0; i < 3; ++i) p.c[i] = 2 * a[1u << i];
  for (int n = 0; n < 3; ++n) {
    const int i = PhasePoly::kPairs[n][0], j = PhasePoly::kPairs[n][1];
    const int aij = a[(1u << i) | (1u << j)];
    p.c[i] += aij;
    p.c[j] += aij;
    p.d[n] = mod4(-aij);
    // 2 (x_i ⊕ x_j) ≡ 2 x_i + 2 x_j, so a half-turn pair term is two Z's.
    if (p.d[n] == 2) {
      p.d[n] = 0;
      p.c[i] += 2;
      p.c[j] += 2;
    }
  }
  for (int& ci : p.c) ci = mod4(ci);
  return p;
}

Schedule oracle_schedule(const PhasePoly& p, LambDicke eta) {
  Schedule s;
  s.name = "oracle";
  for (int i = 0; i < 3; ++i) {
    if (p.c[i] == 0) continue;
    s = s.then(phase_on(kQubits[i], p.c[i], eta).schedule);
  }
  for (int n = 0; n < 3; ++n) {
    if (p.d[n] == 0) continue;
    // J_ij(±π/2) = CNOT_ij · S±_j · CNOT_ij; d = 2 is J(+π/2) twice.
    const int i = PhasePoly::kPairs[n][0], j = PhasePoly::kPairs[n][1];
    const GateRecipe cnot = cnot_for_pair(i, j, eta);
    const GateRecipe s_target = phase_on(kQubits[j], p.d[n] == 3 ? 3 : 1, eta);
    const int reps = p.d[n] == 2 ? 2 : 1;
    for (int r = 0; r < reps; ++r) {
      s = s.then(cnot.schedule).then(s_target.schedule).then(cnot.schedule);
    }
  }
  s.global_phase = canonical_phase(s.global_phase + p.k * kPi / 2);
  s.name = "oracle";
  return s;
}

Operator uf_operator(const BoolFn3& f, const SpaceConfig& cfg, LambDicke eta) {
  const Schedule s = oracle_schedule(synthesize_phase_poly(f), eta);
  if (s.pulses.empty()) {
    return Operator::identity(cfg) * std::exp(i_ * s.global_phase);
  }
  return compose(s, cfg, eta);
}

DJResult run_dj(const BoolFn3& f, const SpaceConfig& cfg, LambDicke eta) {
  const Schedule hadamards = hadamard_spin()
                                 .schedule.then(single_qubit_on_cyclotron(ideal::hadamard()).schedule)
                                 .then(single_qubit_on_axial(ideal::hadamard(), eta).schedule);
  const Schedule circuit = hadamards.then(oracle_schedule(synthesize_phase_poly(f), eta))
                               .then(hadamards)
                               .renamed("dj_" + f.hex());
  const Trajectory t =
      run_schedule(circuit, StateVector::computational(cfg, 0), eta);
  DJResult r;
  for (unsigned x = 0; x < 8; ++x) {
    r.probabilities[x] = t.final_state.population(computational_index(x, cfg));
  }
  r.leakage = leakage(t.final_state);
  r.boundary = t.boundary_max;
  r.pulse_count = circuit.pulses.size();
  r.decision = r.probabilities[0] > 0.5 ? FnClass::Constant : FnClass::Balanced;
  return r;
}

std::array<std::uint64_t, 9> sample_measurement(
    std::span<const double> probabilities, std::uint64_t seed,
    std::uint64_t shots) {
  if (probabilities.size() != 8) {
    throw std::invalid_argument("expected 8 outcome probabilities");
  }
  std::array<double, 9> w{};
  double total = 0.0;
  for (std::size_t x = 0; x < 8; ++x) {
    const double p = probabilities[x];
    if (!(p >= -1e-12)) {
      std::ostringstream msg;
      msg << "negative probability " << p << " for outcome " << x;
      throw std::invalid_argument(msg.str());
    }
    w[x] = std::max(p, 0.0);
    total += w[x];
  }
  if (total > 1.0 + 1e-9) {
    throw std::invalid_argument("probabilities sum to more than 1");
  }
  w[8] = std::max(0.0, 1.0 - total);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> dist(w.begin(), w.end());
  std::array<std::uint64_t, 9> counts{};
  for (std::uint64_t s = 0; s < shots; ++s) ++counts[dist(rng)];
  return counts;
}

}  // namespace trapq

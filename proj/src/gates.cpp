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

#include "trapq/gates.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace trapq {

std::string_view to_string(Qubit q) {
  switch (q) {
    case Qubit::Spin:
      return "spin";
    case Qubit::Cyclotron:
      return "cyclotron";
    case Qubit::Axial:
      return "axial";
  }
  return "?";
}

namespace ideal {

Eigen::Matrix2cd identity() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd z() { return phase(kPi); }

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Eigen::Matrix2cd phase(double varphi) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  m(1, 1) = std::exp(i_ * varphi);
  return m;
}

Eigen::Matrix4cd cnot() {
  Eigen::Matrix4cd m;
  // clang-format off
  m << 1, 0, 0, 0,
       0, 1, 0, 0,
       0, 0, 0, 1,
       0, 0, 1, 0;
  // clang-format on
  return m;
}

Eigen::Matrix4cd cz() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(3, 3) = -1;
  return m;
}

Eigen::Matrix4cd swap() {
  Eigen::Matrix4cd m;
  // clang-format off
  m << 1, 0, 0, 0,
       0, 0, 1, 0,
       0, 1, 0, 0,
       0, 0, 0, 1;
  // clang-format on
  return m;
}

Eigen::Matrix4cd cphase() {
  Eigen::Matrix4cd m = -Eigen::Matrix4cd::Identity();
  m(0, 0) = 1;
  return m;
}

Matrix8 lift(const CMatrix& u, const std::vector<Qubit>& qubits) {
  const std::size_t k = qubits.size();
  if (u.rows() != Eigen::Index(1u << k) || u.cols() != u.rows()) {
    throw std::invalid_argument("lift: matrix size does not match qubit count");
  }
  unsigned mask = 0;
  for (Qubit q : qubits) mask |= 1u << (2 - int(q));
  auto sub = [&](unsigned x) {
    unsigned s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      s |= ((x >> (2 - int(qubits[i]))) & 1u) << (k - 1 - i);
    }
    return s;
  };
  Matrix8 out = Matrix8::Zero();
  for (unsigned r = 0; r < 8; ++r) {
    for (unsigned c = 0; c < 8; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      out(r, c) = u(sub(r), sub(c));
    }
  }
  return out;
}

}  // namespace ideal

namespace {

const SpaceConfig kAnalysisSpace{3, 3};
const LambDicke kDefaultEta{2.0};

// Fits the bookkept global phase so that the composed block matches `target`.
GateRecipe primitive(
    std::string name, std::vector<Qubit> targets, Schedule schedule,
    const Matrix8& target, LambDicke eta) {
  schedule.name = name;
  schedule.global_phase = 0.0;
  const Matrix8 block = computational_block(compose(schedule, kAnalysisSpace, eta));
  const Complex overlap = (target.adjoint() * block).trace();
  schedule.global_phase = canonical_phase(-std::arg(overlap));
  return GateRecipe{
      name, std::move(targets), std::move(schedule), GateSpec(name, target),
      std::nullopt, std::nullopt, true, {}};
}

// Parts in temporal order. `extra_phase` absorbs the constant in
// identities such as X·X·CPHASE·X·X = −CZ.
GateRecipe composite(
    std::string name, std::vector<Qubit> targets,
    const std::vector<const GateRecipe*>& parts, const Matrix8& target,
    double extra_phase = 0.0) {
  Schedule s;
  Matrix8 product = Matrix8::Identity();
  bool exact = true;
  for (const GateRecipe* part : parts) {
    s = s.then(part->schedule);
    product = part->ideal.ideal * product;
    exact = exact && part->exact_ratio;
  }
  s.name = name;
  s.global_phase += extra_phase;
  if ((std::exp(i_ * extra_phase) * product - target).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::logic_error("composite '" + name + "' does not reproduce its target");
  }
  return GateRecipe{
      name, std::move(targets), std::move(s), GateSpec(name, target),
      std::nullopt, std::nullopt, exact, {}};
}

Matrix8 swapping_ideal(Qubit partner, double alpha) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(3, 3) = 1;
  m(2, 1) = std::exp(i_ * alpha);
  m(1, 2) = -std::exp(-i_ * alpha);
  return ideal::lift(m, {Qubit::Spin, partner});
}

// Spin-cyclotron pulses rewritten as spin-axial pulses with phases offset
// by −π/2; the two block forms then coincide.
Schedule to_axial(const Schedule& s) {
  Schedule out = s;
  for (Pulse& p : out.pulses) {
    if (p.kind == PulseKind::SC) {
      p.kind = PulseKind::SA;
      p.phi -= kPi / 2;
    }
  }
  return out;
}

Schedule raw_swapping_sc() {
  const double phi_s = swapping_phase();
  const double r2 = std::sqrt(2.0);
  return {"swapping_sc",
          {p_sc(kPi / r2, 0.0), p_sc(2 * kPi / r2, phi_s), p_sc(kPi / r2, 0.0)},
          0.0};
}

Schedule raw_cphase_sc() {
  const double r2 = std::sqrt(2.0);
  return {"cphase_sc",
          {p_sc(kPi, 0.0), p_sc(kPi / r2, kPi / 2), p_sc(kPi, 0.0),
           p_sc(kPi / r2, kPi / 2)},
          0.0};
}

GateRecipe swapping_from(const Schedule& raw, Qubit partner, LambDicke eta) {
  const Matrix8 block = computational_block(compose(raw, kAnalysisSpace, eta));
  // ⟨1 0⟩ ← |0 1⟩ amplitude on the (spin, partner) pair.
  const unsigned from = partner == Qubit::Cyclotron ? 2u : 1u;
  const double alpha = std::arg(block(4, from));
  const std::string name =
      partner == Qubit::Cyclotron ? "SWAPPING_sc" : "SWAPPING_sa";
  GateRecipe r = primitive(
      name, {Qubit::Spin, partner}, raw, swapping_ideal(partner, alpha), eta);
  r.phi_s = swapping_phase();
  r.alpha = alpha;
  return r;
}

// Phase pre-pulses, swapping composite, phase post-pulses, then the
// controlled phase that fixes the sign of |00⟩.
GateRecipe swap_full_from(
    const GateRecipe& swapping, const GateRecipe& cphase, Qubit partner,
    const std::string& name) {
  const double alpha = *swapping.alpha;
  const GateRecipe pre = phase_gate_spin(alpha);
  const GateRecipe post = phase_gate_spin(kPi - alpha);
  GateRecipe r = composite(
      name, {Qubit::Spin, partner}, {&pre, &swapping, &post, &cphase},
      ideal::lift(ideal::swap(), {Qubit::Spin, partner}));
  r.phi_s = swapping.phi_s;
  r.alpha = alpha;
  return r;
}

std::string suffix_for(Qubit q) {
  switch (q) {
    case Qubit::Spin:
      return "_s";
    case Qubit::Cyclotron:
      return "_c";
    case Qubit::Axial:
      return "_a";
  }
  return "";
}

std::string base_name(const std::string& spin_name) {
  return spin_name.substr(0, spin_name.size() - 2);
}

GateRecipe single_qubit_via_swap(
    const Eigen::Matrix2cd& u, Qubit q, const GateRecipe& swapping,
    const GateRecipe& swap_full, LambDicke eta) {
  const std::optional<GateRecipe> spin = spin_recipe_for(u);
  if (!spin) {
    std::ostringstream msg;
    msg << "no spin recipe registered for the requested single-qubit gate\n"
        << u;
    throw std::invalid_argument(msg.str());
  }
  const std::string name = base_name(spin->name) + suffix_for(q);
  // Spin factor of spin ⊗ I ⊗ I sits at rows/cols 0 and 4.
  Eigen::Matrix2cd spin_u;
  spin_u << spin->ideal.ideal(0, 0), spin->ideal.ideal(0, 4),
      spin->ideal.ideal(4, 0), spin->ideal.ideal(4, 4);
  const Matrix8 target = ideal::lift(spin_u, {q});

  GateRecipe fallback =
      composite(name, {q}, {&swap_full, &*spin, &swap_full}, target);

  if (base_name(spin->name) == "T") {
    if (!swapping.exact_ratio) {
      fallback.note = "T shortcut skipped off the exact sideband ratio";
      return fallback;
    }
    const Schedule shortcut = swapping.schedule.then(spin->schedule)
                                  .then(swapping.schedule.with_phase_offset(kPi));
    Schedule raw = shortcut;
    raw.global_phase = 0.0;
    const Operator u_short = compose(raw, kAnalysisSpace, eta);
    const double fid = gate_fidelity(u_short, GateSpec(name, target));
    const double leak = max_leakage(u_short);
    if (fid >= 1.0 - kFidelityTol && leak <= kLeakageTol) {
      GateRecipe r = primitive(name, {q}, raw, target, eta);
      r.note = "swapping / T / swapping(+pi) shortcut verified";
      return r;
    }
    std::ostringstream msg;
    msg << "T shortcut on " << to_string(q) << " rejected (fidelity " << fid
        << ", leakage " << leak << "); using SWAP.T.SWAP";
    std::clog << "trapq: " << msg.str() << '\n';
    fallback.note = msg.str();
  }
  return fallback;
}

}  // namespace

double swapping_phase() {
  const double cot = 1.0 / std::tan(kPi / std::sqrt(2.0));
  return std::acos(cot * cot);
}

bool is_exact_ratio(LambDicke eta) {
  const double ratio = std::abs(theta_l(1.0, 1, eta));
  return std::abs(ratio - std::sqrt(2.0)) <= 1e-12;
}

GateRecipe phase_gate_spin(double varphi) {
  struct Named {
    double angle;
    const char* name;
  };
  static constexpr Named kNames[] = {
      {0.0, "I_s"},         {kPi / 4, "T_s"},     {-kPi / 4, "Tdg_s"},
      {kPi / 2, "S_s"},     {-kPi / 2, "Sdg_s"},  {kPi, "Z_s"}};
  std::string name = "PHASE_s";
  for (const Named& n : kNames) {
    if (std::abs(canonical_phase(varphi - n.angle)) < 1e-12) name = n.name;
  }
  return primitive(
      name, {Qubit::Spin}, {name, {p_s(kPi, varphi / 2), p_s(kPi, 0.0)}, 0.0},
      ideal::lift(ideal::phase(varphi), {Qubit::Spin}), kDefaultEta);
}

GateRecipe hadamard_spin() {
  return primitive(
      "H_s", {Qubit::Spin}, {"H_s", {p_s(kPi, -kPi), p_s(kPi / 2, kPi / 2)}, 0.0},
      ideal::lift(ideal::hadamard(), {Qubit::Spin}), kDefaultEta);
}

GateRecipe not_spin() {
  return primitive(
      "X_s", {Qubit::Spin}, {"X_s", {p_s(kPi, 0.0)}, 0.0},
      ideal::lift(ideal::x(), {Qubit::Spin}), kDefaultEta);
}

std::optional<GateRecipe> spin_recipe_for(const Eigen::Matrix2cd& u) {
  if (unitarity_error(u) > 1e-9) return std::nullopt;
  auto matches = [&](const Eigen::Matrix2cd& v) {
    return std::abs((v.adjoint() * u).trace()) / 2.0 >= 1.0 - 1e-12;
  };
  if (std::abs(u(0, 1)) < 1e-12 && std::abs(u(1, 0)) < 1e-12) {
    return phase_gate_spin(std::arg(u(1, 1) / u(0, 0)));
  }
  if (matches(ideal::x())) return not_spin();
  if (matches(ideal::hadamard())) return hadamard_spin();
  return std::nullopt;
}

GateRecipe swapping_sc() {
  return swapping_from(raw_swapping_sc(), Qubit::Cyclotron, kDefaultEta);
}

GateRecipe cphase_sc() {
  return primitive(
      "CPHASE_sc", {Qubit::Spin, Qubit::Cyclotron}, raw_cphase_sc(),
      ideal::lift(ideal::cphase(), {Qubit::Spin, Qubit::Cyclotron}),
      kDefaultEta);
}

GateRecipe swap_sc_full() {
  return swap_full_from(swapping_sc(), cphase_sc(), Qubit::Cyclotron, "SWAP_sc");
}

GateRecipe single_qubit_on_cyclotron(const Eigen::Matrix2cd& u) {
  return single_qubit_via_swap(
      u, Qubit::Cyclotron, swapping_sc(), swap_sc_full(), kDefaultEta);
}

GateRecipe cz_sc() {
  const GateRecipe xs = not_spin();
  const GateRecipe xc = single_qubit_on_cyclotron(ideal::x());
  const GateRecipe cp = cphase_sc();
  return composite(
      "CZ_sc", {Qubit::Spin, Qubit::Cyclotron}, {&xs, &xc, &cp, &xs, &xc},
      ideal::lift(ideal::cz(), {Qubit::Spin, Qubit::Cyclotron}), kPi);
}

GateRecipe cnot_sc() {
  const GateRecipe hc = single_qubit_on_cyclotron(ideal::hadamard());
  const GateRecipe cz = cz_sc();
  return composite(
      "CNOT_sc", {Qubit::Spin, Qubit::Cyclotron}, {&hc, &cz, &hc},
      ideal::lift(ideal::cnot(), {Qubit::Spin, Qubit::Cyclotron}));
}

GateRecipe cnot_cs() {
  const GateRecipe hs = hadamard_spin();
  const GateRecipe cz = cz_sc();
  return composite(
      "CNOT_cs", {Qubit::Cyclotron, Qubit::Spin}, {&hs, &cz, &hs},
      ideal::lift(ideal::cnot(), {Qubit::Cyclotron, Qubit::Spin}));
}

GateRecipe swapping_sa(LambDicke eta) {
  GateRecipe r = swapping_from(to_axial(raw_swapping_sc()), Qubit::Axial, eta);
  r.exact_ratio = is_exact_ratio(eta);
  return r;
}

GateRecipe cphase_sa(LambDicke eta) {
  GateRecipe r = primitive(
      "CPHASE_sa", {Qubit::Spin, Qubit::Axial}, to_axial(raw_cphase_sc()),
      ideal::lift(ideal::cphase(), {Qubit::Spin, Qubit::Axial}), eta);
  r.exact_ratio = is_exact_ratio(eta);
  return r;
}

GateRecipe swap_sa_full(LambDicke eta) {
  return swap_full_from(swapping_sa(eta), cphase_sa(eta), Qubit::Axial, "SWAP_sa");
}

GateRecipe single_qubit_on_axial(const Eigen::Matrix2cd& u, LambDicke eta) {
  return single_qubit_via_swap(
      u, Qubit::Axial, swapping_sa(eta), swap_sa_full(eta), eta);
}

GateRecipe cz_sa(LambDicke eta) {
  const GateRecipe xs = not_spin();
  const GateRecipe xa = single_qubit_on_axial(ideal::x(), eta);
  const GateRecipe cp = cphase_sa(eta);
  return composite(
      "CZ_sa", {Qubit::Spin, Qubit::Axial}, {&xs, &xa, &cp, &xs, &xa},
      ideal::lift(ideal::cz(), {Qubit::Spin, Qubit::Axial}), kPi);
}

GateRecipe cnot_sa(LambDicke eta) {
  const GateRecipe ha = single_qubit_on_axial(ideal::hadamard(), eta);
  const GateRecipe cz = cz_sa(eta);
  return composite(
      "CNOT_sa", {Qubit::Spin, Qubit::Axial}, {&ha, &cz, &ha},
      ideal::lift(ideal::cnot(), {Qubit::Spin, Qubit::Axial}));
}

GateRecipe cnot_as(LambDicke eta) {
  const GateRecipe hs = hadamard_spin();
  const GateRecipe cz = cz_sa(eta);
  return composite(
      "CNOT_as", {Qubit::Axial, Qubit::Spin}, {&hs, &cz, &hs},
      ideal::lift(ideal::cnot(), {Qubit::Axial, Qubit::Spin}));
}

GateRecipe cnot_cyclotron_to_axial(LambDicke eta) {
  // s → s⊕c, a → a⊕s⊕c, s → s, a → a⊕c.
  const GateRecipe cs = cnot_cs();
  const GateRecipe sa = cnot_sa(eta);
  return composite(
      "CNOT_ca", {Qubit::Cyclotron, Qubit::Axial}, {&cs, &sa, &cs, &sa},
      ideal::lift(ideal::cnot(), {Qubit::Cyclotron, Qubit::Axial}));
}

Schedule eigenstate_transfer_000_to_111(const std::array<double, 5>& phases) {
  return {"transfer_000_111",
          {p_s(kPi, phases[0]), p_sa(kPi, phases[1]), p_s(kPi, phases[2]),
           p_sc(kPi, phases[3]), p_s(kPi, phases[4])},
          0.0};
}

std::vector<GateRecipe> gate_catalog(LambDicke eta) {
  std::vector<GateRecipe> out;
  out.push_back(phase_gate_spin(kPi / 4));
  out.push_back(phase_gate_spin(kPi / 3));
  out.push_back(hadamard_spin());
  out.push_back(not_spin());
  out.push_back(swapping_sc());
  out.push_back(cphase_sc());
  out.push_back(swap_sc_full());
  out.push_back(cz_sc());
  out.push_back(cnot_sc());
  out.push_back(cnot_cs());
  out.push_back(single_qubit_on_cyclotron(ideal::hadamard()));
  out.push_back(single_qubit_on_cyclotron(ideal::t()));
  out.push_back(swapping_sa(eta));
  out.push_back(cphase_sa(eta));
  out.push_back(swap_sa_full(eta));
  out.push_back(cz_sa(eta));
  out.push_back(cnot_sa(eta));
  out.push_back(cnot_as(eta));
  out.push_back(single_qubit_on_axial(ideal::hadamard(), eta));
  out.push_back(single_qubit_on_axial(ideal::t(), eta));
  out.push_back(cnot_cyclotron_to_axial(eta));
  return out;
}

GateRecipe catalog_recipe(const std::string& name, LambDicke eta) {
  for (GateRecipe& r : gate_catalog(eta)) {
    if (r.name == name) return std::move(r);
  }
  throw std::invalid_argument("no gate named '" + name + "' in the catalog");
}

RecipeReport verify_recipe(
    const GateRecipe& recipe, const SpaceConfig& cfg, LambDicke eta) {
  RecipeReport rep;
  rep.name = recipe.name;
  rep.pulse_count = recipe.schedule.pulses.size();
  rep.exact_ratio = recipe.exact_ratio;
  const ComposeResult res = compose_with_diagnostics(recipe.schedule, cfg, eta);
  rep.fidelity = gate_fidelity(res.op, recipe.ideal);
  rep.leakage = max_leakage(res.op);
  rep.boundary = res.boundary_max;
  rep.phase_error =
      (computational_block(res.op) - recipe.ideal.ideal).cwiseAbs().maxCoeff();
  rep.pass = rep.fidelity >= 1.0 - kFidelityTol && rep.leakage <= kLeakageTol &&
             rep.boundary <= kBoundaryWarning && rep.phase_error <= kPhaseTol;
  return rep;
}

}  // namespace trapq

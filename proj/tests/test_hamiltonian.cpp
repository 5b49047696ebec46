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

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "catch_amalgamated.hpp"
#include "trapq/hamiltonian.hpp"

using namespace trapq;
using Catch::Matchers::WithinAbs;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

CMatrix expm_minus_i(const CMatrix& h, double t) {
  const CMatrix a = (-i_ * t) * h;
  return a.exp();
}

DriveSpec drive(PulseKind kind, double rabi, double phase) {
  DriveSpec d;
  d.kind = kind;
  d.rabi = rabi;
  d.phase = phase;
  return d;
}

// ω_z a†a − (Δ/2) σ_z on the full space.
CMatrix frame_generator(const DriveSpec& d, const SpaceConfig& cfg) {
  const auto n = Eigen::Index(cfg.dim());
  CMatrix a = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < cfg.dim(); ++k) {
    const BasisIndex b = unflatten(k, cfg);
    const double sz = b.j == 1 ? 1.0 : -1.0;
    a(Eigen::Index(k), Eigen::Index(k)) = d.omega_z * b.l - d.detuning * sz / 2;
  }
  return a;
}

// H(t) = W(t) H(0) W(t)†, W = e^{iAt}, so U(T) = W(T) e^{−i(H(0) + A)T}.
CMatrix frame_oracle(const DriveSpec& d, const SpaceConfig& cfg, double duration) {
  const CMatrix a = frame_generator(d, cfg);
  const CMatrix k = build_h_sa(0.0, d, cfg).matrix();
  const CMatrix w = expm_minus_i(-a, duration);
  return w * expm_minus_i(k + a, duration);
}

}  // namespace

TEST_CASE("spin Hamiltonian") {
  const SpaceConfig cfg;
  const DriveSpec d = drive(PulseKind::S, 2.5, 0.0);
  const CMatrix h = build_h_s(d, cfg).matrix();
  CHECK(std::abs(h.trace()) < 1e-15);
  CHECK(max_abs(h - h.adjoint()) == 0.0);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  CHECK_THAT(es.eigenvalues().cwiseAbs().maxCoeff(), WithinAbs(d.rabi / 2, 1e-14));
  const double t = kPi / d.rabi;
  CHECK(max_abs(expm_minus_i(h, t) - propagator_s(kPi, 0.0, cfg).matrix()) <= 1e-12);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int k = 0; k < 5; ++k) {
    const DriveSpec r = drive(PulseKind::S, 1.0, u(rng));
    const double tt = std::abs(u(rng));
    CHECK(max_abs(expm_minus_i(build_h_s(r, cfg).matrix(), tt) -
                  propagator_s(r.rabi * tt, r.phase, cfg).matrix()) <= 1e-12);
  }
  CHECK_THROWS_AS(build_h_s(drive(PulseKind::SA, 1.0, 0.0), cfg), std::invalid_argument);
  CHECK_THROWS_AS(build_h_s(drive(PulseKind::S, 0.0, 0.0), cfg), std::invalid_argument);
}

TEST_CASE("spin-cyclotron Hamiltonian") {
  const SpaceConfig cfg;
  const DriveSpec d = drive(PulseKind::SC, 1.7, 0.4);
  const CMatrix h = build_h_sc(d, cfg).matrix();
  CHECK(max_abs(h - h.adjoint()) == 0.0);

  // θ(t) = −κ t; |θ| = π is reached at t = π/κ.
  const double t = kPi / d.rabi;
  CHECK_THAT(sc_theta(d, t), WithinAbs(-kPi, 1e-15));
  const CMatrix u = expm_minus_i(h, t);
  CHECK(max_abs(u - propagator_sc(sc_theta(d, t), d.phase, cfg).matrix()) <= 1e-12);
  CHECK(max_abs(u - propagator_sc(kPi, d.phase + kPi, cfg).matrix()) <= 1e-12);

  const auto up0 = Eigen::Index(flat_index(1, 0, 0, cfg));
  const auto dn1 = Eigen::Index(flat_index(0, 1, 0, cfg));
  const auto up1 = Eigen::Index(flat_index(1, 1, 0, cfg));
  const auto dn2 = Eigen::Index(flat_index(0, 2, 0, cfg));
  CHECK_THAT(std::abs(h(up1, dn2)) / std::abs(h(up0, dn1)), WithinAbs(std::sqrt(2.0), 1e-14));

  for (int l = 0; l < cfg.n_ax; ++l) {
    const auto dark = Eigen::Index(flat_index(0, 0, l, cfg));
    CHECK(h.col(dark).norm() == 0.0);
  }
}

TEST_CASE("spin-axial Hamiltonian") {
  const SpaceConfig cfg(2, 30);
  DriveSpec d = drive(PulseKind::SA, 1.3, 0.0);
  d.omega_z = 1.0;
  d.eta = LambDicke(0.7);

  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  d.detuning = -1.0;
  for (int k = 0; k < 100; ++k) {
    const CMatrix h = build_h_sa(u(rng), d, cfg).matrix();
    CHECK(max_abs(h - h.adjoint()) <= 1e-12);
  }

  // ⟨↓ l=1| H |↑ l=0⟩ at t = 0 with Δ = φ = 0.
  d.detuning = 0.0;
  const CMatrix h0 = build_h_sa(0.0, d, cfg).matrix();
  const auto dn1 = Eigen::Index(flat_index(0, 0, 1, cfg));
  const auto up0 = Eigen::Index(flat_index(1, 0, 0, cfg));
  const double eta = d.eta.value();
  CHECK_THAT(std::abs(h0(dn1, up0)), WithinAbs(d.rabi / 2 * eta * std::exp(-eta * eta / 2), 1e-12));

  // η = 0: the carrier Hamiltonian with phase φ + Δt.
  DriveSpec flat = d;
  flat.eta = LambDicke(0.0);
  flat.detuning = 0.3;
  flat.phase = 0.2;
  const double t = 1.9;
  const CMatrix hs = build_h_s(drive(PulseKind::S, flat.rabi, 0.2 + 0.3 * t), cfg).matrix();
  CHECK(max_abs(build_h_sa(t, flat, cfg).matrix() - hs) <= 1e-12);
}

TEST_CASE("rotated model matches the direct construction") {
  const SpaceConfig cfg(2, 10);
  DriveSpec d = drive(PulseKind::SA, 0.2, 0.7);
  d.omega_z = 1.3;
  d.detuning = -1.3;
  d.eta = LambDicke(1.1);
  const Hamiltonian model = model_sa(d, cfg);
  for (double t : {0.0, 0.37, 5.0, 123.4}) {
    CHECK(max_abs(model.at(t) - build_h_sa(t, d, cfg).matrix()) <= 1e-12);
  }
}

TEST_CASE("integrator reproduces the time-independent propagators") {
  const SpaceConfig cfg;
  const StepPolicy policy;

  const DriveSpec s = drive(PulseKind::S, 3.0, 0.0);
  const Operator us = integrate(model_s(s, cfg), kPi / s.rabi, policy);
  CHECK(unitarity_error(us.matrix()) <= 1e-12);
  CHECK(max_abs(us.matrix() - propagator_s(kPi, 0.0, cfg).matrix()) <= 1e-8);

  const DriveSpec c = drive(PulseKind::SC, 0.8, 0.6);
  const double t = kPi / c.rabi;
  const Operator uc = integrate(model_sc(c, cfg), t, policy);
  CHECK(unitarity_error(uc.matrix()) <= 1e-12);
  CHECK(max_abs(uc.matrix() - propagator_sc(sc_theta(c, t), c.phase, cfg).matrix()) <= 1e-8);
}

TEST_CASE("integrator matches the exact frame transformation") {
  const SpaceConfig cfg(2, 8);
  DriveSpec d = drive(PulseKind::SA, 0.1, 0.3);
  d.omega_z = 1.0;
  d.detuning = -1.0;
  d.eta = LambDicke(0.5);
  const double duration = 7.0;
  const Operator u = integrate(model_sa(d, cfg), duration, StepPolicy{});
  CHECK(unitarity_error(u.matrix()) <= 1e-12);
  CHECK(max_abs(u.matrix() - frame_oracle(d, cfg, duration)) <= 1e-8);
}

TEST_CASE("step policy") {
  const SpaceConfig cfg(2, 2);
  const DriveSpec s = drive(PulseKind::S, 1.0, 0.0);
  const Hamiltonian h = model_s(s, cfg);
  CHECK(step_count(h, 2 * kPi, StepPolicy{}) == 200);
  CHECK_THROWS_AS(step_count(h, 1e9, StepPolicy{}), StepLimitExceeded);
  CHECK_THROWS_AS(step_count(h, -1.0, StepPolicy{}), std::invalid_argument);
  const Operator a = integrate(h, 1.0, StepPolicy{});
  const Operator b = integrate(h, 1.0, StepPolicy{});
  CHECK((a.matrix() - b.matrix()).norm() == 0.0);
}

TEST_CASE("rotating-wave error shrinks with the drive strength") {
  const auto points = rwa_sweep({1e-1, 1e-2, 1e-3}, RwaSetup{});
  REQUIRE(points.size() == 3);
  CHECK(points[0].angle_error > points[1].angle_error);
  CHECK(points[1].angle_error > points[2].angle_error);
  CHECK(points[2].angle_error <= 1e-3);
  for (std::size_t k = 1; k < 3; ++k) {
    CHECK(points[k].angle_error <= 5e-3 * points[k].ratio * kPi);
  }
}

TEST_CASE("sideband selectivity") {
  const SpaceConfig cfg(2, 8);
  DriveSpec d = drive(PulseKind::SA, 0.01, 0.0);
  d.omega_z = 1.0;
  d.eta = LambDicke(0.5);
  const double duration = (kPi / 2) / sa_theta0(d, 1.0);
  const auto dn0 = Eigen::Index(flat_index(0, 0, 0, cfg));
  const auto dn1 = Eigen::Index(flat_index(0, 0, 1, cfg));
  const auto up0 = Eigen::Index(flat_index(1, 0, 0, cfg));
  CMatrix init = CMatrix::Zero(Eigen::Index(cfg.dim()), 2);
  init(dn1, 0) = 1.0;
  init(dn0, 1) = 1.0;

  // On resonance |↓01⟩ moves to |↑00⟩ and the dark state |↓00⟩ stays put.
  d.detuning = -d.omega_z;
  const CMatrix on = integrate_columns(model_sa(d, cfg), duration, StepPolicy{}, init);
  CHECK_THAT(std::norm(on(up0, 0)), WithinAbs(0.5, 1e-2));
  CHECK(std::norm(on(dn0, 1)) >= 1 - 1e-3);

  // Detuned by δ ≫ Ω: transfer suppressed to order (Ω/δ)².
  const double delta = 0.2;
  d.detuning = -d.omega_z + delta;
  const CMatrix off = integrate_columns(model_sa(d, cfg), duration, StepPolicy{}, init);
  CHECK(std::norm(off(up0, 0)) <= 4 * std::pow(d.rabi / delta, 2));
}

TEST_CASE("drive constants") {
  CHECK(spin_rabi(1e-6) > 0);
  DriveSpec d = drive(PulseKind::SA, 2.0, 0.0);
  d.eta = LambDicke(2.0);
  CHECK_THAT(sa_theta0(d, 1.5), WithinAbs(2.0 * 1.5 * 2.0 * std::exp(-2.0), 1e-15));
  CHECK(sc_coupling(1e-6, 1e12) > 0);
}

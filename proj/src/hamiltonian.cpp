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

#include "trapq/hamiltonian.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "trapq/trapcalc.hpp"

namespace trapq {

void DriveSpec::validate(PulseKind expected) const {
  if (kind != expected) {
    throw std::invalid_argument(
        "drive kind '" + std::string(to_string(kind)) + "' where '" +
        std::string(to_string(expected)) + "' is required");
  }
  if (!(rabi > 0) || !std::isfinite(rabi)) {
    throw std::invalid_argument("drive rate must be finite and > 0");
  }
  if (kind == PulseKind::SA && !(omega_z > 0)) {
    throw std::invalid_argument("axial frequency must be > 0");
  }
}

double spin_rabi(double b_tesla) {
  using namespace constants;
  return g_e * e * b_tesla / (2 * m_e);
}

double sc_coupling(double b_tesla, double omega_c_tilde) {
  using namespace constants;
  return g_e * mu_B * b_tesla / std::sqrt(2 * m_e * hbar * omega_c_tilde);
}

double sa_theta0(const DriveSpec& d, double t) {
  const double eta = d.eta.value();
  return d.rabi * t * eta * std::exp(-eta * eta / 2);
}

namespace {

// Truncated axial annihilation operator.
CMatrix lowering(int n) {
  CMatrix a = CMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(double(k));
  return a;
}

// exp(i G) for Hermitian G, via its eigendecomposition.
CMatrix exp_i_hermitian(const CMatrix& g) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g);
  const Eigen::VectorXcd phases =
      (i_ * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// (Ω/2)(σ₊ ⊗ M + h.c.), M acting on the axial mode, identity on cyclotron.
CMatrix assemble_sa(const CMatrix& m, double half_rabi, const SpaceConfig& cfg) {
  const auto d = Eigen::Index(cfg.dim());
  CMatrix h = CMatrix::Zero(d, d);
  for (int n = 0; n < cfg.n_cyc; ++n) {
    for (int k = 0; k < cfg.n_ax; ++k) {
      for (int l = 0; l < cfg.n_ax; ++l) {
        const Complex v = half_rabi * m(k, l);
        const auto up = Eigen::Index(flat_index(1, n, k, cfg));
        const auto down = Eigen::Index(flat_index(0, n, l, cfg));
        h(up, down) = v;
        h(down, up) = std::conj(v);
      }
    }
  }
  return h;
}

CMatrix h_s_matrix(const DriveSpec& drive, const SpaceConfig& cfg) {
  const auto d = Eigen::Index(cfg.dim());
  CMatrix h = CMatrix::Zero(d, d);
  const Complex v = drive.rabi / 2 * std::exp(-i_ * drive.phase);
  for (int n = 0; n < cfg.n_cyc; ++n) {
    for (int l = 0; l < cfg.n_ax; ++l) {
      const auto up = Eigen::Index(flat_index(1, n, l, cfg));
      const auto down = Eigen::Index(flat_index(0, n, l, cfg));
      h(up, down) = v;
      h(down, up) = std::conj(v);
    }
  }
  return h;
}

CMatrix h_sc_matrix(const DriveSpec& drive, const SpaceConfig& cfg) {
  const auto d = Eigen::Index(cfg.dim());
  CMatrix h = CMatrix::Zero(d, d);
  // σ₊ a_c e^{−iφ}: |↓ n l⟩ → √n |↑ n−1 l⟩.
  for (int n = 1; n < cfg.n_cyc; ++n) {
    const Complex v =
        drive.rabi / 2 * std::sqrt(double(n)) * std::exp(-i_ * drive.phase);
    for (int l = 0; l < cfg.n_ax; ++l) {
      const auto up = Eigen::Index(flat_index(1, n - 1, l, cfg));
      const auto down = Eigen::Index(flat_index(0, n, l, cfg));
      h(up, down) = v;
      h(down, up) = std::conj(v);
    }
  }
  return h;
}

}  // namespace

Operator build_h_s(const DriveSpec& drive, const SpaceConfig& cfg) {
  drive.validate(PulseKind::S);
  return Operator(cfg, h_s_matrix(drive, cfg), false);
}

Operator build_h_sc(const DriveSpec& drive, const SpaceConfig& cfg) {
  drive.validate(PulseKind::SC);
  return Operator(cfg, h_sc_matrix(drive, cfg), false);
}

Operator build_h_sa(double t, const DriveSpec& drive, const SpaceConfig& cfg) {
  drive.validate(PulseKind::SA);
  const CMatrix a = lowering(cfg.n_ax);
  const Complex rot = std::exp(i_ * drive.omega_z * t);
  const CMatrix gen =
      drive.eta.value() * (a.adjoint() * rot + a * std::conj(rot));
  const CMatrix m = exp_i_hermitian(gen) *
                    std::exp(-i_ * (drive.detuning * t + drive.phase));
  return Operator(cfg, assemble_sa(m, drive.rabi / 2, cfg), false);
}

Hamiltonian model_s(const DriveSpec& drive, const SpaceConfig& cfg) {
  drive.validate(PulseKind::S);
  CMatrix h = h_s_matrix(drive, cfg);
  return {cfg, [h](double) { return h; }, drive.rabi};
}

Hamiltonian model_sc(const DriveSpec& drive, const SpaceConfig& cfg) {
  drive.validate(PulseKind::SC);
  CMatrix h = h_sc_matrix(drive, cfg);
  return {cfg, [h](double) { return h; },
          drive.rabi * std::sqrt(double(cfg.n_cyc - 1))};
}

Hamiltonian model_sa(const DriveSpec& drive, const SpaceConfig& cfg) {
  drive.validate(PulseKind::SA);
  // exp(iG(t)) = R(t) exp(iG(0)) R(t)†, R(t) = exp(i ω_z t a†a), so the
  // displacement is diagonalized once and rotated exactly per time.
  const CMatrix a = lowering(cfg.n_ax);
  const CMatrix e0 = exp_i_hermitian(drive.eta.value() * (a + a.adjoint()));
  const double max_freq = (cfg.n_ax - 1) * drive.omega_z +
                          std::abs(drive.detuning) + drive.rabi;
  auto at = [e0, drive, cfg](double t) {
    Eigen::VectorXcd rot(cfg.n_ax);
    for (int k = 0; k < cfg.n_ax; ++k) {
      rot[k] = std::exp(i_ * (drive.omega_z * t * k));
    }
    const CMatrix m = rot.asDiagonal() * e0 * rot.conjugate().asDiagonal() *
                      std::exp(-i_ * (drive.detuning * t + drive.phase));
    return assemble_sa(m, drive.rabi / 2, cfg);
  };
  return {cfg, std::move(at), max_freq};
}

std::size_t step_count(
    const Hamiltonian& h, double duration, const StepPolicy& policy) {
  if (!(duration > 0) || !std::isfinite(duration)) {
    throw std::invalid_argument("integration duration must be finite and > 0");
  }
  const double max_step = 2 * kPi / (policy.steps_per_period * h.max_frequency);
  const double steps = h.max_frequency > 0 ? std::ceil(duration / max_step) : 1.0;
  if (!(steps <= double(policy.max_steps))) {
    std::ostringstream msg;
    msg << "integration needs " << steps << " steps (duration " << duration
        << ", f_max " << h.max_frequency << " rad/s), limit is "
        << policy.max_steps;
    throw StepLimitExceeded(msg.str());
  }
  return std::max<std::size_t>(1, std::size_t(steps));
}

CMatrix integrate_columns(
    const Hamiltonian& h, double duration, const StepPolicy& policy,
    const CMatrix& initial) {
  const std::size_t n = step_count(h, duration, policy);
  const double dt = duration / double(n);
  CMatrix x = initial;
  CMatrix k1, k2, k3, k4;
  for (std::size_t s = 0; s < n; ++s) {
    const double t = double(s) * dt;
    const CMatrix h0 = h.at(t);
    const CMatrix hm = h.at(t + dt / 2);
    const CMatrix h1 = h.at(t + dt);
    k1.noalias() = -i_ * (h0 * x);
    k2.noalias() = -i_ * (hm * (x + (dt / 2) * k1));
    k3.noalias() = -i_ * (hm * (x + (dt / 2) * k2));
    k4.noalias() = -i_ * (h1 * (x + dt * k3));
    x += (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  // Polar projection onto the nearest isometry.
  Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Operator integrate(
    const Hamiltonian& h, double duration, const StepPolicy& policy) {
  const auto d = Eigen::Index(h.cfg.dim());
  return Operator(
      h.cfg,
      integrate_columns(h, duration, policy, CMatrix::Identity(d, d)), true);
}

RwaPoint rwa_block_angle_error(double ratio, const RwaSetup& setup) {
  if (!(ratio > 0)) throw std::invalid_argument("Ω/ω_z must be > 0");
  DriveSpec drive;
  drive.kind = PulseKind::SA;
  drive.omega_z = 1.0;
  drive.rabi = ratio * drive.omega_z;
  drive.detuning = -drive.omega_z;
  drive.phase = setup.phi;
  drive.eta = LambDicke(setup.eta);
  const double duration = setup.theta0 / sa_theta0(drive, 1.0);

  const Hamiltonian h = model_sa(drive, setup.cfg);
  const auto d = Eigen::Index(setup.cfg.dim());
  const auto from = Eigen::Index(flat_index(0, 0, 1, setup.cfg));
  const auto to = Eigen::Index(flat_index(1, 0, 0, setup.cfg));
  CMatrix init = CMatrix::Zero(d, 1);
  init(from, 0) = 1.0;
  const CMatrix out = integrate_columns(h, duration, setup.policy, init);

  const double amp = std::min(1.0, std::abs(out(to, 0)));
  const double angle = 2 * std::asin(amp);
  return {ratio, std::abs(angle - std::abs(setup.theta0)),
          step_count(h, duration, setup.policy)};
}

std::vector<RwaPoint> rwa_sweep(
    const std::vector<double>& ratios, const RwaSetup& setup) {
  std::vector<RwaPoint> out;
  out.reserve(ratios.size());
  for (double r : ratios) out.push_back(rwa_block_angle_error(r, setup));
  return out;
}

}  // namespace trapq

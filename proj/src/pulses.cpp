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

#include "trapq/pulses.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace trapq {

std::string_view to_string(PulseKind kind) {
  switch (kind) {
    case PulseKind::S:
      return "s";
    case PulseKind::SA:
      return "sa";
    case PulseKind::SC:
      return "sc";
  }
  return "?";
}

PulseKind parse_pulse_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](char c) {
    return char(std::tolower(static_cast<unsigned char>(c)));
  });
  if (lower == "s") return PulseKind::S;
  if (lower == "sa") return PulseKind::SA;
  if (lower == "sc") return PulseKind::SC;
  throw std::invalid_argument(
      "unknown pulse kind '" + std::string(text) + "' (expected s, sa, sc)");
}

double canonical_phase(double phi) {
  double r = std::remainder(phi, 2 * kPi);
  if (r <= -kPi) r += 2 * kPi;
  return r;
}

bool Pulse::equivalent(const Pulse& other, double tol) const {
  return kind == other.kind && std::abs(theta - other.theta) <= tol &&
         std::abs(canonical_phase(phi - other.phi)) <= tol;
}

LambDicke::LambDicke(double eta) : eta_(eta) {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    std::ostringstream msg;
    msg << "Lamb-Dicke parameter must be finite and >= 0, got " << eta;
    throw std::invalid_argument(msg.str());
  }
}

Schedule Schedule::then(const Schedule& later) const {
  Schedule out;
  out.name = name;
  out.pulses = pulses;
  out.pulses.insert(out.pulses.end(), later.pulses.begin(), later.pulses.end());
  out.global_phase = canonical_phase(global_phase + later.global_phase);
  return out;
}

Schedule Schedule::with_phase_offset(double offset) const {
  Schedule out = *this;
  for (Pulse& p : out.pulses) p.phi += offset;
  return out;
}

Schedule Schedule::renamed(std::string new_name) const {
  Schedule out = *this;
  out.name = std::move(new_name);
  return out;
}

double laguerre_assoc(int n, int m, double x) {
  if (n < 0 || m < 0) throw std::invalid_argument("laguerre order < 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + m - x;
  for (int k = 1; k < n; ++k) {
    // (k+1) L_{k+1} = (2k + 1 + m − x) L_k − (k + m) L_{k−1}
    const double next = ((2 * k + 1 + m - x) * cur - (k + m) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double theta_l(double theta0, int l, LambDicke eta) {
  if (l < 0) throw std::invalid_argument("axial level must be >= 0");
  const double x = eta.value() * eta.value();
  return theta0 * std::sqrt(1.0 / (l + 1)) * laguerre_assoc(l, 1, x) /
         laguerre_assoc(0, 1, x);
}

// Basis (|↓ n l⟩, |↑ n l⟩).
Eigen::Matrix2cd block_s(double angle, double phi) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  Eigen::Matrix2cd b;
  b << c, -i_ * std::exp(i_ * phi) * s, -i_ * std::exp(-i_ * phi) * s, c;
  return b;
}

// Basis (|↓ n l+1⟩, |↑ n l⟩).
Eigen::Matrix2cd block_sa(double angle, double phi) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  Eigen::Matrix2cd b;
  b << c, -std::exp(i_ * phi) * s, std::exp(-i_ * phi) * s, c;
  return b;
}

// Basis (|↓ n l⟩, |↑ n−1 l⟩).
Eigen::Matrix2cd block_sc(double angle, double phi) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  Eigen::Matrix2cd b;
  b << c, i_ * std::exp(i_ * phi) * s, i_ * std::exp(-i_ * phi) * s, c;
  return b;
}

namespace {

// Calls fn(a, b, block) for every coupled pair of the pulse.
template <typename Fn>
void for_each_block(
    const Pulse& p, LambDicke eta, const SpaceConfig& cfg, Fn&& fn) {
  switch (p.kind) {
    case PulseKind::S: {
      const Eigen::Matrix2cd b = block_s(p.theta, p.phi);
      for (int n = 0; n < cfg.n_cyc; ++n)
        for (int l = 0; l < cfg.n_ax; ++l)
          fn(flat_index(0, n, l, cfg), flat_index(1, n, l, cfg), b);
      break;
    }
    case PulseKind::SA: {
      for (int l = 0; l + 1 < cfg.n_ax; ++l) {
        const Eigen::Matrix2cd b = block_sa(theta_l(p.theta, l, eta), p.phi);
        for (int n = 0; n < cfg.n_cyc; ++n)
          fn(flat_index(0, n, l + 1, cfg), flat_index(1, n, l, cfg), b);
      }
      break;
    }
    case PulseKind::SC: {
      for (int n = 1; n < cfg.n_cyc; ++n) {
        const Eigen::Matrix2cd b = block_sc(std::sqrt(double(n)) * p.theta, p.phi);
        for (int l = 0; l < cfg.n_ax; ++l)
          fn(flat_index(0, n, l, cfg), flat_index(1, n - 1, l, cfg), b);
      }
      break;
    }
  }
}

std::vector<Eigen::Index> boundary_indices(const SpaceConfig& cfg) {
  std::vector<Eigen::Index> out;
  for (std::size_t k = 0; k < cfg.dim(); ++k) {
    const BasisIndex b = unflatten(k, cfg);
    if (b.n == cfg.n_cyc - 1 || b.l == cfg.n_ax - 1) {
      out.push_back(Eigen::Index(k));
    }
  }
  return out;
}

double worst_boundary(
    const CMatrix& columns, const std::vector<Eigen::Index>& rows) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    double pop = 0.0;
    for (Eigen::Index r : rows) pop += std::norm(columns(r, c));
    worst = std::max(worst, pop);
  }
  return worst;
}

void require_pulses(const Schedule& schedule) {
  if (schedule.pulses.empty()) {
    throw EmptySchedule(
        "schedule '" + schedule.name + "' has no pulses to compose");
  }
}

}  // namespace

Operator propagator(const Pulse& p, LambDicke eta, const SpaceConfig& cfg) {
  const auto d = Eigen::Index(cfg.dim());
  CMatrix u = CMatrix::Identity(d, d);
  for_each_block(p, eta, cfg, [&](std::size_t a, std::size_t b, const auto& m) {
    const auto ia = Eigen::Index(a), ib = Eigen::Index(b);
    u(ia, ia) = m(0, 0);
    u(ia, ib) = m(0, 1);
    u(ib, ia) = m(1, 0);
    u(ib, ib) = m(1, 1);
  });
  return Operator(cfg, std::move(u), true);
}

Operator propagator_s(double theta, double phi, const SpaceConfig& cfg) {
  return propagator(p_s(theta, phi), LambDicke(0.0), cfg);
}

Operator propagator_sa(
    double theta0, double phi, LambDicke eta, const SpaceConfig& cfg) {
  return propagator(p_sa(theta0, phi), eta, cfg);
}

Operator propagator_sc(double theta, double phi, const SpaceConfig& cfg) {
  return propagator(p_sc(theta, phi), LambDicke(0.0), cfg);
}

void apply_pulse(
    const Pulse& p, LambDicke eta, const SpaceConfig& cfg, CMatrix& columns) {
  if (std::size_t(columns.rows()) != cfg.dim()) {
    throw InvalidConfig("apply_pulse: row count does not match config");
  }
  for_each_block(p, eta, cfg, [&](std::size_t a, std::size_t b, const auto& m) {
    const auto ia = Eigen::Index(a), ib = Eigen::Index(b);
    for (Eigen::Index c = 0; c < columns.cols(); ++c) {
      const Complex xa = columns(ia, c), xb = columns(ib, c);
      columns(ia, c) = m(0, 0) * xa + m(0, 1) * xb;
      columns(ib, c) = m(1, 0) * xa + m(1, 1) * xb;
    }
  });
}

ComposeResult compose_with_diagnostics(
    const Schedule& schedule, const SpaceConfig& cfg, LambDicke eta) {
  require_pulses(schedule);
  const auto d = Eigen::Index(cfg.dim());
  CMatrix u = CMatrix::Identity(d, d);
  const auto rows = boundary_indices(cfg);
  std::vector<Eigen::Index> comp_cols;
  for (unsigned x = 0; x < 8; ++x) {
    comp_cols.push_back(Eigen::Index(computational_index(x, cfg)));
  }
  double worst = 0.0;
  for (const Pulse& p : schedule.pulses) {
    apply_pulse(p, eta, cfg, u);
    worst = std::max(worst, worst_boundary(u(Eigen::all, comp_cols), rows));
  }
  u *= std::exp(i_ * schedule.global_phase);
  return {Operator(cfg, std::move(u), true), worst};
}

Operator compose(
    const Schedule& schedule, const SpaceConfig& cfg, LambDicke eta) {
  require_pulses(schedule);
  const auto d = Eigen::Index(cfg.dim());
  CMatrix u = CMatrix::Identity(d, d);
  for (const Pulse& p : schedule.pulses) apply_pulse(p, eta, cfg, u);
  u *= std::exp(i_ * schedule.global_phase);
  return Operator(cfg, std::move(u), true);
}

double boundary_population(const StateVector& state) {
  const auto rows = boundary_indices(state.config());
  return worst_boundary(state.amplitudes(), rows);
}

Trajectory run_schedule(
    const Schedule& schedule, const StateVector& initial, LambDicke eta) {
  const SpaceConfig& cfg = initial.config();
  const auto rows = boundary_indices(cfg);
  CMatrix psi = initial.amplitudes();
  double worst = worst_boundary(psi, rows);
  for (const Pulse& p : schedule.pulses) {
    apply_pulse(p, eta, cfg, psi);
    worst = std::max(worst, worst_boundary(psi, rows));
  }
  psi *= std::exp(i_ * schedule.global_phase);
  return {StateVector(cfg, psi.col(0), 1e-10), worst};
}

}  // namespace trapq

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

#include "trapq/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace trapq {

SpaceConfig::SpaceConfig(int cyc, int ax) : n_cyc(cyc), n_ax(ax) {
  if (n_cyc < 2 || n_ax < 2) {
    std::ostringstream msg;
    msg << "truncation must keep at least two levels per oscillator (n_cyc="
        << n_cyc << ", n_ax=" << n_ax << ")";
    throw InvalidConfig(msg.str());
  }
}

std::size_t flat_index(int j, int n, int l, const SpaceConfig& cfg) {
  if (j < 0 || j > 1 || n < 0 || n >= cfg.n_cyc || l < 0 || l >= cfg.n_ax) {
    std::ostringstream msg;
    msg << "basis label |" << j << ' ' << n << ' ' << l
        << "> outside truncation (n_cyc=" << cfg.n_cyc << ", n_ax=" << cfg.n_ax
        << ")";
    throw IndexError(msg.str());
  }
  return (std::size_t(j) * cfg.n_cyc + std::size_t(n)) * cfg.n_ax +
         std::size_t(l);
}

BasisIndex unflatten(std::size_t index, const SpaceConfig& cfg) {
  if (index >= cfg.dim()) {
    throw IndexError(
        "flat index " + std::to_string(index) + " >= dimension " +
        std::to_string(cfg.dim()));
  }
  const int l = int(index % cfg.n_ax);
  const std::size_t rest = index / cfg.n_ax;
  return {int(rest / cfg.n_cyc), int(rest % cfg.n_cyc), l};
}

std::size_t computational_index(unsigned x, const SpaceConfig& cfg) {
  if (x > 7) throw IndexError("computational label must be 0..7");
  return flat_index(int((x >> 2) & 1u), int((x >> 1) & 1u), int(x & 1u), cfg);
}

bool is_computational(const BasisIndex& b) { return b.n <= 1 && b.l <= 1; }

StateVector::StateVector(SpaceConfig cfg, CVector amplitudes, double norm_tol)
    : cfg_(cfg), amps_(std::move(amplitudes)) {
  if (std::size_t(amps_.size()) != cfg_.dim()) {
    throw InvalidConfig(
        "state has " + std::to_string(amps_.size()) +
        " amplitudes, expected " + std::to_string(cfg_.dim()));
  }
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > norm_tol) {
    std::ostringstream msg;
    msg << "state is not normalized: sum |a|^2 = " << norm2;
    throw std::invalid_argument(msg.str());
  }
  amps_ /= std::sqrt(norm2);
}

StateVector StateVector::basis(const SpaceConfig& cfg, const BasisIndex& b) {
  CVector v = CVector::Zero(Eigen::Index(cfg.dim()));
  v[Eigen::Index(flat_index(b, cfg))] = 1.0;
  return StateVector(cfg, std::move(v));
}

StateVector StateVector::computational(const SpaceConfig& cfg, unsigned x) {
  CVector v = CVector::Zero(Eigen::Index(cfg.dim()));
  v[Eigen::Index(computational_index(x, cfg))] = 1.0;
  return StateVector(cfg, std::move(v));
}

double unitarity_error(const CMatrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  const CMatrix d = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

Operator::Operator(SpaceConfig cfg, CMatrix entries, bool unitary)
    : cfg_(cfg), m_(std::move(entries)), unitary_(unitary) {
  const auto d = Eigen::Index(cfg_.dim());
  if (m_.rows() != d || m_.cols() != d) {
    throw InvalidConfig(
        "operator is " + std::to_string(m_.rows()) + "x" +
        std::to_string(m_.cols()) + ", expected dimension " +
        std::to_string(d));
  }
  if (unitary_) {
    const double err = unitarity_error(m_);
    if (!(err <= kUnitaryTol)) {
      std::ostringstream msg;
      msg << "operator flagged unitary but |U^dag U - I|_max = " << err;
      throw NotUnitary(msg.str());
    }
  }
}

Operator Operator::identity(const SpaceConfig& cfg) {
  const auto d = Eigen::Index(cfg.dim());
  return Operator(cfg, CMatrix::Identity(d, d), true);
}

Operator Operator::operator*(const Operator& rhs) const {
  if (!(cfg_ == rhs.cfg_)) throw InvalidConfig("operator configs differ");
  return Operator(cfg_, m_ * rhs.m_, unitary_ && rhs.unitary_);
}

Operator Operator::operator*(Complex scalar) const {
  const bool unit = unitary_ && std::abs(std::abs(scalar) - 1.0) < 1e-13;
  return Operator(cfg_, m_ * scalar, unit);
}

StateVector Operator::apply(const StateVector& psi) const {
  if (!(cfg_ == psi.config())) throw InvalidConfig("state config differs");
  return StateVector(cfg_, m_ * psi.amplitudes());
}

Operator Operator::adjoint() const {
  return Operator(cfg_, m_.adjoint(), unitary_);
}

GateSpec::GateSpec(std::string n, const Matrix8& m)
    : name(std::move(n)), ideal(m) {
  if (unitarity_error(m) > kUnitaryTol) {
    throw NotUnitary("gate spec '" + name + "' is not unitary");
  }
}

Operator subspace_projector(const SpaceConfig& cfg) {
  const auto d = Eigen::Index(cfg.dim());
  CMatrix p = CMatrix::Zero(d, d);
  for (unsigned x = 0; x < 8; ++x) {
    const auto k = Eigen::Index(computational_index(x, cfg));
    p(k, k) = 1.0;
  }
  return Operator(cfg, std::move(p), false);
}

double leakage(const StateVector& state) {
  double inside = 0.0;
  for (unsigned x = 0; x < 8; ++x) {
    inside += state.population(computational_index(x, state.config()));
  }
  return std::clamp(1.0 - inside, 0.0, 1.0);
}

Matrix8 computational_block(const Operator& op) {
  Matrix8 b;
  const auto& cfg = op.config();
  for (unsigned r = 0; r < 8; ++r) {
    for (unsigned c = 0; c < 8; ++c) {
      b(r, c) = op.matrix()(
          Eigen::Index(computational_index(r, cfg)),
          Eigen::Index(computational_index(c, cfg)));
    }
  }
  return b;
}

Operator embed(const Matrix8& block, const SpaceConfig& cfg) {
  const auto d = Eigen::Index(cfg.dim());
  CMatrix m = CMatrix::Identity(d, d);
  for (unsigned r = 0; r < 8; ++r) {
    for (unsigned c = 0; c < 8; ++c) {
      m(Eigen::Index(computational_index(r, cfg)),
        Eigen::Index(computational_index(c, cfg))) = block(r, c);
    }
  }
  return Operator(cfg, std::move(m), unitarity_error(block) <= kUnitaryTol);
}

double gate_fidelity(const Operator& actual, const GateSpec& spec) {
  const Matrix8 a = computational_block(actual);
  return std::abs((spec.ideal.adjoint() * a).trace()) / 8.0;
}

double max_leakage(const Operator& op) {
  const Matrix8 a = computational_block(op);
  double worst = 0.0;
  for (int c = 0; c < 8; ++c) {
    worst = std::max(worst, 1.0 - a.col(c).squaredNorm());
  }
  return std::clamp(worst, 0.0, 1.0);
}

}  // namespace trapq

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

#include "catch_amalgamated.hpp"
#include "trapq/core.hpp"

using namespace trapq;
using Catch::Matchers::WithinAbs;

TEST_CASE("flat index of named states") {
  const SpaceConfig cfg;
  CHECK(flat_index(0, 0, 0, cfg) == 0);
  CHECK(flat_index(0, 0, 0, SpaceConfig(3, 4)) == 0);
  CHECK(flat_index(1, 1, 1, cfg) == 43);
  CHECK(flat_index(1, 0, 0, cfg) == 36);
}

TEST_CASE("flat index rejects out of range labels") {
  const SpaceConfig cfg(3, 4);
  CHECK_THROWS_AS(flat_index(2, 0, 0, cfg), IndexError);
  CHECK_THROWS_AS(flat_index(0, 3, 0, cfg), IndexError);
  CHECK_THROWS_AS(flat_index(0, 0, 4, cfg), IndexError);
  CHECK_THROWS_AS(flat_index(0, -1, 0, cfg), IndexError);
  CHECK_THROWS_AS(unflatten(cfg.dim(), cfg), IndexError);
  CHECK_THROWS_AS(computational_index(8, cfg), IndexError);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(SpaceConfig(1, 6), InvalidConfig);
  CHECK_THROWS_AS(SpaceConfig(6, 0), InvalidConfig);
  CHECK(SpaceConfig(2, 2).dim() == 8);
  CHECK(SpaceConfig().dim() == 72);
}

TEST_CASE("flat index is a bijection") {
  for (int nc = 2; nc <= 7; ++nc) {
    for (int na = 2; na <= 7; ++na) {
      const SpaceConfig cfg(nc, na);
      std::vector<int> seen(cfg.dim(), 0);
      for (int j = 0; j < 2; ++j) {
        for (int n = 0; n < nc; ++n) {
          for (int l = 0; l < na; ++l) {
            const auto i = flat_index(j, n, l, cfg);
            REQUIRE(i < cfg.dim());
            ++seen[i];
            CHECK(unflatten(i, cfg) == BasisIndex{j, n, l});
          }
        }
      }
      for (int s : seen) CHECK(s == 1);
    }
  }
}

TEST_CASE("computational labels put spin first") {
  const SpaceConfig cfg;
  for (unsigned x = 0; x < 8; ++x) {
    const BasisIndex b = unflatten(computational_index(x, cfg), cfg);
    CHECK(b.j == int(x >> 2));
    CHECK(b.n == int((x >> 1) & 1));
    CHECK(b.l == int(x & 1));
    CHECK(is_computational(b));
  }
  CHECK_FALSE(is_computational({0, 2, 0}));
}

TEST_CASE("subspace projector") {
  const Operator p2 = subspace_projector(SpaceConfig(2, 2));
  CHECK((p2.matrix() - CMatrix::Identity(8, 8)).norm() == 0.0);

  const Operator p = subspace_projector(SpaceConfig());
  const CMatrix& m = p.matrix();
  CHECK_THAT(m.trace().real(), WithinAbs(8.0, 1e-15));
  Eigen::FullPivLU<CMatrix> lu(m);
  CHECK(lu.rank() == 8);
  CHECK((m * m - m).norm() < 1e-15);
}

TEST_CASE("leakage") {
  const SpaceConfig cfg;
  CHECK(leakage(StateVector::computational(cfg, 0)) == 0.0);
  CHECK_THAT(leakage(StateVector::basis(cfg, {0, 2, 0})), WithinAbs(1.0, 1e-15));
  CVector v = CVector::Zero(Eigen::Index(cfg.dim()));
  v[Eigen::Index(flat_index(0, 0, 0, cfg))] = 1 / std::sqrt(2.0);
  v[Eigen::Index(flat_index(0, 2, 0, cfg))] = 1 / std::sqrt(2.0);
  CHECK_THAT(leakage(StateVector(cfg, v)), WithinAbs(0.5, 1e-15));
}

TEST_CASE("state norm is validated") {
  const SpaceConfig cfg(2, 2);
  CVector v = CVector::Zero(8);
  v[0] = 1.0 + 2e-9;
  CHECK_THROWS_AS(StateVector(cfg, v), std::invalid_argument);
  v[0] = 1.0 + 1e-12;
  CHECK_THAT(StateVector(cfg, v).amplitudes().norm(), WithinAbs(1.0, 1e-15));
  CHECK_THROWS(StateVector(cfg, CVector::Zero(7)));
}

TEST_CASE("gate fidelity") {
  const SpaceConfig cfg;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  Matrix8 diag = Matrix8::Zero();
  for (int k = 0; k < 8; ++k) diag(k, k) = std::exp(i_ * u(rng));
  const GateSpec spec("D", diag);

  CHECK_THAT(gate_fidelity(embed(diag, cfg), spec), WithinAbs(1.0, 1e-14));
  CHECK_THAT(
      gate_fidelity(embed(diag, cfg) * std::exp(i_ * kPi / 3.0), spec), WithinAbs(1.0, 1e-14));

  Matrix8 flip = Matrix8::Identity();
  flip(7, 7) = -1;
  CHECK_THAT(gate_fidelity(embed(diag * flip, cfg), spec), WithinAbs(0.75, 1e-14));
}

TEST_CASE("fidelity is invariant under random global phases") {
  const SpaceConfig cfg(3, 3);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  Matrix8 h = Matrix8::Identity();
  const double r = 1 / std::sqrt(2.0);
  h.block(0, 0, 2, 2) << r, r, r, -r;
  const GateSpec spec("H0", h);
  for (int k = 0; k < 16; ++k) {
    const Operator op = embed(h, cfg) * std::exp(i_ * u(rng));
    CHECK(op.is_unitary());
    CHECK_THAT(gate_fidelity(op, spec), WithinAbs(1.0, 1e-14));
  }
}

TEST_CASE("unitarity is checked") {
  const SpaceConfig cfg(2, 2);
  CMatrix m = CMatrix::Identity(8, 8);
  m(3, 3) = 1.0 + 1e-9;
  CHECK_THROWS_AS(Operator(cfg, m, true), NotUnitary);
  CHECK_NOTHROW(Operator(cfg, m, false));
  CHECK_THROWS_AS(GateSpec("bad", Matrix8::Zero()), NotUnitary);
  CHECK(unitarity_error(CMatrix::Identity(8, 8)) == 0.0);
}

TEST_CASE("embed and block are inverse") {
  const SpaceConfig cfg;
  Matrix8 m = Matrix8::Identity();
  m.block(2, 2, 2, 2) << 0, 1, 1, 0;
  const Operator op = embed(m, cfg);
  CHECK((computational_block(op) - m).norm() == 0.0);
  CHECK(max_leakage(op) == 0.0);
  const auto leaked = Eigen::Index(flat_index(1, 4, 3, cfg));
  CHECK(op.matrix()(leaked, leaked) == Complex(1.0));
}

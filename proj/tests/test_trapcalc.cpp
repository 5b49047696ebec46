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
#include "trapq/trapcalc.hpp"

using namespace trapq;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Random stable parameters: ω_z kept well under ω_c/√2.
std::vector<TrapParameters> random_traps(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> b(0.5, 10.0), v(0.1, 100.0), d(1e-3, 1e-2);
  std::vector<TrapParameters> out;
  while (out.size() < count) {
    TrapParameters p{b(rng), v(rng), d(rng)};
    const double wc = constants::e * p.B / constants::m_e;
    const double wz2 = constants::e * p.V0 / (constants::m_e * p.d * p.d);
    if (wc * wc > 2 * wz2) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("example trap") {
  const Frequencies f = frequencies_from(TrapParameters{});
  const double two_pi = constants::two_pi;
  CHECK_THAT(f.omega_z / two_pi, WithinRel(64e6, 5e-3));
  CHECK_THAT(f.omega_c / two_pi, WithinRel(148.3e9, 1e-3));
  CHECK_THAT(f.omega_s / f.omega_c, WithinAbs(constants::g_e / 2, 1e-15));
  CHECK_THAT(f.omega_s / f.omega_c, WithinAbs(1.00116, 1e-5));
  // Spin and cyclotron in GHz, axial in MHz.
  for (double w : {f.omega_s, f.omega_c_prime}) {
    CHECK(w / two_pi >= 1e9);
    CHECK(w / two_pi < 1e12);
  }
  CHECK(f.omega_z / two_pi >= 1e6);
  CHECK(f.omega_z / two_pi < 1e9);
  CHECK(f.omega_m < f.omega_z);
  CHECK(f.omega_z < f.omega_c_prime);
}

TEST_CASE("frequency identities") {
  for (const TrapParameters& p : random_traps(100, 41)) {
    const Frequencies f = frequencies_from(p);
    CHECK_THAT(f.omega_c_prime + f.omega_m, WithinRel(f.omega_c, 1e-9));
    CHECK_THAT(f.omega_c_prime * f.omega_m, WithinRel(f.omega_z * f.omega_z / 2, 1e-9));
    CHECK(f.omega_m < f.omega_z);
    CHECK(f.omega_z < f.omega_c_prime);
    CHECK(f.omega_c_tilde < f.omega_c);
    CHECK_THAT(f.omega_sa, WithinRel(f.omega_s - f.omega_z, 1e-15));
    CHECK_THAT(f.omega_sc, WithinRel(f.omega_s - f.omega_c_prime, 1e-12));
  }
}

TEST_CASE("limits and monotonicity") {
  TrapParameters p;
  p.V0 = 1e-12;
  const Frequencies f = frequencies_from(p);
  CHECK_THAT(f.omega_c_tilde, WithinRel(f.omega_c, 1e-15));

  double prev_c = 0, prev_s = 0;
  for (double b = 0.5; b <= 10.0; b += 0.5) {
    TrapParameters q;
    q.B = b;
    const Frequencies g = frequencies_from(q);
    CHECK(g.omega_c > prev_c);
    CHECK(g.omega_s > prev_s);
    prev_c = g.omega_c;
    prev_s = g.omega_s;
  }
}

TEST_CASE("stability and validation errors") {
  TrapParameters p;
  p.B = 1e-3;
  try {
    frequencies_from(p);
    FAIL("unstable trap accepted");
  } catch (const TrapUnstable& e) {
    const std::string msg = e.what();
    CHECK(msg.find("omega_c^2") != std::string::npos);
    CHECK(msg.find("2 omega_z^2") != std::string::npos);
  }
  p = TrapParameters{};
  p.d = 0.0;
  CHECK_THROWS_AS(frequencies_from(p), std::invalid_argument);
  p = TrapParameters{};
  p.V0 = -1.0;
  CHECK_THROWS_AS(frequencies_from(p), std::invalid_argument);
}

TEST_CASE("physical Lamb-Dicke parameter") {
  const Frequencies f = frequencies_from(TrapParameters{});
  CHECK(physical_eta(f, 0.0) == 0.0);
  Frequencies g = f;
  g.omega_z *= 2;
  CHECK_THAT(physical_eta(g, 1e3), WithinRel(physical_eta(f, 1e3) / std::sqrt(2.0), 1e-14));
  const double k = sideband_wavenumber(f);
  CHECK_THAT(k, WithinRel(f.omega_sa / constants::c, 1e-15));
  const double eta = physical_eta(f, k);
  CHECK(eta > 0);
  CHECK(eta < 1e-2);
  CHECK_THROWS_AS(physical_eta(f, -1.0), std::invalid_argument);
}

// Copyright 2026 The xyquench Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "xyquench/errors.hpp"
#include "xyquench/oracle.hpp"
#include "xyquench/thermo.hpp"
#include "xyquench/work_stats.hpp"

using namespace xyq;

namespace {

// Product over modes of the six-outcome bracket, written out term by term with
// plain exponentials. Only usable where nothing overflows.
cplx naive_chi(const QuenchSetup& s, double u) {
  cplx chi = 1.0;
  const double b = s.beta;
  for (double k : k_grid(s.params)) {
    const double g = s.params.gamma();
    const double e = epsilon(k, s.h0, g);
    const double et = epsilon(k, s.hf, g);
    const double ds = s.params.D() * std::sin(k);
    const double th = 0.5 * (std::atan2(g * std::sin(k), s.hf - std::cos(k)) -
                             std::atan2(g * std::sin(k), s.h0 - std::cos(k)));
    const double c2 = std::cos(th) * std::cos(th);
    const double s2 = std::sin(th) * std::sin(th);
    const cplx I{0.0, 1.0};
    const cplx bracket = std::exp(2 * b * e) * (c2 * std::exp(I * u * (2 * e - 2 * et)) +
                                                s2 * std::exp(I * u * (2 * e + 2 * et))) +
                         std::exp(-2 * b * e) * (s2 * std::exp(I * u * (-2 * e - 2 * et)) +
                                                 c2 * std::exp(I * u * (-2 * e + 2 * et))) +
                         std::exp(4 * b * ds) + std::exp(-4 * b * ds);
    chi *= bracket / (2 * std::cosh(2 * b * e) + 2 * std::cosh(4 * b * ds));
  }
  return chi;
}

}  // namespace

TEST_CASE("characteristic function against a direct product") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  const QuenchSetup s(ModelParams(10, 0.6, 0.35), 0.4, 1.3, 0.8);
  const CharacteristicFunction chi(s);
  for (int i = 0; i < 20; ++i) {
    const double u = U(rng);
    const cplx want = naive_chi(s, u);
    const cplx got = chi(cplx{u, 0.0}).value;
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("characteristic function identities") {
  const QuenchSetup s(ModelParams(12, -0.4, 0.6), 1.1, 0.2, 3.0);
  SUBCASE("normalization") {
    const auto v = char_fn(s, 0.0);
    CHECK(std::abs(v.value - 1.0) < 1e-14);
  }
  SUBCASE("Jarzynski point") {
    const auto v = char_fn(s, cplx{0.0, s.beta});
    CHECK(std::fabs(v.log_value.real() + s.beta * delta_free_energy(s)) < 1e-12);
    CHECK(std::fabs(v.log_value.imag()) < 1e-15);
    CHECK_FALSE(v.beyond_strip);
  }
  SUBCASE("identity quench") {
    const QuenchSetup id(ModelParams(12, -0.4, 0.6), 1.1, 1.1, 3.0);
    for (double u : {-5.0, 0.3, 17.0}) CHECK(std::abs(char_fn(id, u).value - 1.0) < 1e-14);
  }
  SUBCASE("strip flag and overflow") {
    CHECK(char_fn(s, cplx{0.0, 2.5 * s.beta}).beyond_strip);
    CHECK_THROWS_AS(char_fn(s, cplx{0.0, -1e308}), NumericError);
  }
}

TEST_CASE("closed-form moments") {
  SUBCASE("L=4 reference") {
    // Term-by-term 30-digit evaluation of the six-outcome sums.
    const auto m = mean_and_variance(QuenchSetup(ModelParams(4, 0.5, 0.3), 0.5, 1.5, 2.0));
    CHECK(m.mean == doctest::Approx(-1.39496598999479636474118188537).epsilon(1e-13));
    CHECK(m.variance == doctest::Approx(2.16958508576267808296373562288).epsilon(1e-13));
  }
  SUBCASE("identity quench") {
    const auto m = mean_and_variance(QuenchSetup(ModelParams(20, 0.5, 0.3), 0.9, 0.9, 2.0));
    CHECK(m.mean == 0.0);
    CHECK(m.variance == 0.0);
  }
  SUBCASE("block oracle at L=2") {
    const QuenchSetup s(ModelParams(2, 0.5, 0.3), 1.0, 1.01, 1.0);
    const auto closed = mean_and_variance(s);
    const auto brute = oracle::brute_force_work_stats(s, std::numbers::pi / 2);
    CHECK(std::fabs(closed.mean - brute.mean) <= 1e-12 * std::fabs(brute.mean));
    CHECK(std::fabs(closed.variance - brute.variance) <= 1e-12 * brute.variance);
  }
  SUBCASE("mean is linear and variance quadratic in the quench size") {
    const ModelParams p(200, 0.5, 0.4);
    const auto ref = mean_and_variance(QuenchSetup(p, 0.7, 0.7 + 1e-2, 5.0));
    for (double dh : {1e-3, 1e-1}) {
      const auto m = mean_and_variance(QuenchSetup(p, 0.7, 0.7 + dh, 5.0));
      CHECK(m.mean / dh == doctest::Approx(ref.mean / 1e-2).epsilon(1e-12));
      CHECK(m.variance / (dh * dh) == doctest::Approx(ref.variance / 1e-4).epsilon(1e-12));
    }
  }
  SUBCASE("cold and large L stays finite") {
    const auto m = mean_and_variance(QuenchSetup(ModelParams(5000, 0.5, 0.8), 1.2, 1.21, 1e4));
    CHECK(std::isfinite(m.mean));
    CHECK(m.variance >= 0.0);
  }
}

TEST_CASE("numerical cumulants") {
  SUBCASE("first two match the closed forms") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
      const QuenchSetup s(ModelParams(2 + 2 * static_cast<int>(20 * U(rng)), 2 * U(rng) - 1, 2 * U(rng) - 1),
                          2.5 * U(rng), 2.5 * U(rng), 0.05 + 5 * U(rng));
      const auto mv = mean_and_variance(s);
      const auto c = cumulants_numeric(s, 2);
      REQUIRE(c.size() == 2);
      CHECK(std::fabs(c[0].value - mv.mean) <= 1e-8 * std::max(std::fabs(mv.mean), 1e-3));
      CHECK(std::fabs(c[1].value - mv.variance) <= 1e-6 * std::max(mv.variance, 1e-3));
    }
  }
  SUBCASE("identity quench") {
    const auto c = cumulants_numeric(QuenchSetup(ModelParams(8, 0.5, 0.3), 1.0, 1.0, 1.0), 4);
    for (const auto& e : c) CHECK(std::fabs(e.value) < 1e-12);
  }
  SUBCASE("order is validated") {
    CHECK_THROWS_AS(cumulants_numeric(QuenchSetup(ModelParams(8, 0.5, 0.3), 1.0, 1.2, 1.0), 5), ConfigError);
  }
}

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
#include <sstream>
#include <string>

#include "xyquench/config.hpp"
#include "xyquench/errors.hpp"
#include "xyquench/sweep.hpp"

using namespace xyq;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("grid specs") {
  CHECK(parse_grid("h0", "0.5") == std::vector<double>{0.5});
  CHECK(parse_grid("h0", "0:1:3") == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(parse_grid("D", "0.1, 0.2,0.4") == std::vector<double>{0.1, 0.2, 0.4});
  const auto g = parse_grid("h0", "0.5:2.0:301");
  CHECK(g.size() == 301);
  CHECK(g.back() == 2.0);
  CHECK(g[1] - g[0] == doctest::Approx(0.005));

  CHECK(error_of([] { parse_grid("h0", "  "); }) == "config key 'h0': empty grid");
  CHECK(error_of([] { parse_grid("D", "0.3,0.2"); }).find("config key 'D': non-monotone") == 0);
  CHECK(error_of([] { parse_grid("D", "1:0:4"); }).find("non-monotone") != std::string::npos);
  CHECK(error_of([] { parse_grid("beta", "1:2"); }).find("config key 'beta'") == 0);
  CHECK(error_of([] { parse_grid("beta", "x"); }).find("not a number") != std::string::npos);
}

TEST_CASE("key=value config") {
  const auto cfg = KeyValueConfig::from_string("# header\ngamma = 0.5\n\nh0=0:2:5  # grid\nL=8\n", "run.cfg");
  CHECK(cfg.get_double("gamma", 0.0) == 0.5);
  CHECK(cfg.get_grid("h0", "1").size() == 5);
  CHECK(cfg.get_int("L", 0) == 8);
  CHECK(cfg.echo() == "# L=8\n# gamma=0.5\n# h0=0:2:5\n");
  CHECK(cfg.checksum().size() == 16);
  auto other = cfg;
  other.set("gamma", "0.6");
  CHECK(other.checksum() != cfg.checksum());
  CHECK(error_of([] { KeyValueConfig::from_string("a=1\nbogus\n", "run.cfg"); }) ==
        "run.cfg:2: expected key=value");
  CHECK_THROWS_AS(cfg.get_bool("gamma", false), ConfigError);
}

TEST_CASE("sweep config validation") {
  auto with = [](const std::string& text) { return SweepConfig::from(KeyValueConfig::from_string(text)); };
  CHECK(with("").L == std::vector<int>{kDefaultL});
  CHECK(error_of([&] { with("L=7"); }).find("config key 'L'") == 0);
  CHECK(error_of([&] { with("gamma=2"); }).find("config key 'gamma'") == 0);
  CHECK(error_of([&] { with("beta=0"); }).find("config key 'beta'") == 0);
  CHECK(error_of([&] { with("h0=1,0.5"); }).find("config key 'h0'") == 0);
}

TEST_CASE("sweep rows") {
  SweepConfig c;
  c.L = {40, 80};
  c.gamma = {0.5};
  c.beta = {5.0, 100.0};
  c.D = {0.0, 0.6};
  c.h0 = parse_grid("h0", "0:2:9");
  c.delta_f = true;

  SUBCASE("bytes do not depend on the worker count") {
    std::string ref;
    for (unsigned w : {1u, 3u, 8u}) {
      c.workers = w;
      std::ostringstream os;
      write_sweep_csv(os, run_sweep(c), c);
      if (ref.empty()) ref = os.str();
      CHECK(os.str() == ref);
    }
  }
  SUBCASE("order, derivatives and row identities") {
    const auto rows = run_sweep(c);
    REQUIRE(rows.size() == 2 * 2 * 2 * 9);
    CHECK(rows[1].h0 == doctest::Approx(0.25));
    CHECK(rows[9].D == 0.6);
    CHECK(rows[18].beta == 100.0);
    CHECK(rows[36].L == 80);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const bool interior = i % 9 != 0 && i % 9 != 8;
      CHECK(r.d_mean_dh0.has_value() == interior);
      CHECK(r.variance >= 0.0);
      CHECK(r.s_irr >= -1e-12);
      CHECK(std::fabs(r.s_irr - r.beta * (r.mean_work - *r.delta_F)) <= 1e-9 * std::max(1.0, r.s_irr));
    }
  }
  SUBCASE("header") {
    std::ostringstream os;
    write_sweep_csv(os, run_sweep(c), c, "# note\n");
    std::istringstream in(os.str());
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    CHECK(first == "# note");
    CHECK(second == "h0,hf,D,gamma,beta,L,mean_work,variance,s_irr,d_mean_dh0,d_var_dh0,delta_F");
    std::string row;
    std::getline(in, row);
    CHECK(split_csv(row).size() == 12);
  }
  SUBCASE("identity quench gives zeros") {
    SweepConfig z;
    z.L = {100};
    z.dh = 0.0;
    z.D = {0.3};
    const auto rows = run_sweep(z);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].mean_work == 0.0);
    CHECK(rows[0].variance == 0.0);
    CHECK(rows[0].s_irr == 0.0);
    std::ostringstream os;
    write_sweep_csv(os, rows, z);
    CHECK(os.str() == "h0,hf,D,gamma,beta,L,mean_work,variance,s_irr\n1,1,0.29999999999999999,0.5,100,100,0,0,0\n");
  }
}

TEST_CASE("large preset stays finite") {
  // h0 in [0, 2] x D in [0, 1] at the default chain length.
  SweepConfig c;
  c.h0 = parse_grid("h0", "0:2:401");
  c.D = parse_grid("D", "0:1:101");
  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 40501);
  bool finite = true;
  for (const auto& r : rows) {
    finite = finite && std::isfinite(r.mean_work) && std::isfinite(r.variance) && std::isfinite(r.s_irr) &&
             r.variance >= 0.0 && r.s_irr >= -1e-12;
  }
  CHECK(finite);
}

TEST_CASE("critical field") {
  CHECK(critical_field(0.5, 0.5) == doctest::Approx(std::sqrt(1.75)).epsilon(1e-15));
  CHECK(critical_field(0.5, 0.1) == 1.0);
  // Both branches meet at D = gamma / 2.
  CHECK(critical_field(0.5, 0.25) == 1.0);
  CHECK(std::sqrt(4 * 0.25 * 0.25 - 0.25 + 1) == 1.0);
  CHECK(critical_field(-0.5, -0.5) == critical_field(0.5, 0.5));
}

TEST_CASE("local minima") {
  std::vector<double> x, y;
  for (int i = 0; i <= 20; ++i) {
    x.push_back(0.1 * i);
    y.push_back((x.back() - 1.234) * (x.back() - 1.234) - 2.0);
  }
  const auto m = find_local_minima(x, y);
  REQUIRE(m.size() == 1);
  CHECK(m[0].h0 == doctest::Approx(1.234).epsilon(1e-12));
  CHECK(m[0].value == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(find_local_minima(x, std::vector<double>(x.size(), 1.0)).empty());

  const std::vector<double> xs{0, 1, 2, 3, 4, 5, 6};
  const std::vector<double> two{3, 1, 3, 3, -1, 3, 3};
  const auto both = find_local_minima(xs, two);
  REQUIRE(both.size() == 2);
  CHECK(both[0].grid_index == 4);
}

TEST_CASE("critical scan") {
  SweepConfig c;
  c.gamma = {0.5};
  c.beta = {100.0};
  c.D = {0.1, 0.5};
  c.h0 = parse_grid("h0", "0.8:1.6:161");
  const auto est = critical_scan(c);
  REQUIRE(est.size() == 2);
  const double spacing = 0.005;
  CHECK(est[0].h_theory == 1.0);
  REQUIRE(est[0].h_star_mean.has_value());
  CHECK(std::fabs(*est[0].h_star_mean - 1.0) <= 2 * spacing);
  CHECK(est[1].h_theory == doctest::Approx(1.3228756555322954));
  REQUIRE(est[1].h_star_mean.has_value());
  CHECK(std::fabs(*est[1].h_star_mean - est[1].h_theory) <= 2 * spacing);
  for (const auto& e : est) {
    for (const auto* list : {&e.mean_minima, &e.var_minima}) {
      for (const auto& m : *list) {
        CHECK(m.h0 >= 0.8);
        CHECK(m.h0 <= 1.6);
      }
    }
  }

  SweepConfig few = c;
  few.h0 = parse_grid("h0", "1:1.1:5");
  CHECK_THROWS_AS(critical_scan(few), ConfigError);
  SweepConfig multi = c;
  multi.beta = {1.0, 2.0};
  CHECK_THROWS_AS(critical_scan(multi), ConfigError);
}

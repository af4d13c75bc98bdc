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

#include <string>

#include "xyquench/verify.hpp"

using namespace xyq;

TEST_CASE("verification suites pass on the shipped build") {
  const auto results = run_verification({});
  REQUIRE(results.size() == 7);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.metric << " > " << r.tolerance << " " << r.detail);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("negative control trips the branch guard") {
  VerifyOptions o;
  o.inject_naive_arctan = true;
  const auto r = suite_branch_guard(o.seed, AngleConvention::naive_arctan);
  CHECK_FALSE(r.passed);
  CHECK(r.metric > 1e-3);
}

TEST_CASE("reports are reproducible") {
  const auto a = run_verification({7, false});
  const auto b = run_verification({7, false});
  CHECK(format_verification_table(a) == format_verification_table(b));
  CHECK(verification_json(a, {7, false}) == verification_json(b, {7, false}));
  CHECK(verification_json(a, {7, false}).find("\"passed\":true") != std::string::npos);
}

TEST_CASE("relative error floor") {
  CHECK(relative_error(1.0, 2.0) == 0.5);
  CHECK(relative_error(1e-20, 0.0, 1.0) == 1e-20);
  CHECK(relative_error(0.0, 0.0) == 0.0);
}

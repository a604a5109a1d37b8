// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <vector>

#include "qboson/deformed.hpp"
#include "qboson/errors.hpp"

using namespace qboson;

namespace {

// φ(n) in factored form: n(m + 1 - n)/m for fermions, n(m - 1 + n)/m for bosons.
Rational phi_oracle(int n, int m, Statistics s) {
  return s == Statistics::fermionic ? Rational(n * (m + 1 - n), m) : Rational(n * (m - 1 + n), m);
}

}  // namespace

TEST_CASE("structure function values") {
  for (int m = 1; m <= 10; ++m) {
    for (auto s : {Statistics::fermionic, Statistics::bosonic}) {
      const DeformationSpec spec(s, m);
      for (int n = 0; n <= 12; ++n) CHECK(structure_function(n, spec) == phi_oracle(n, m, s));
    }
  }
  CHECK(structure_function(1, {Statistics::fermionic, 3}) == 1);
  CHECK(structure_function(2, {Statistics::fermionic, 2}) == 1);
  CHECK(structure_function(3, {Statistics::fermionic, 2}) == 0);
  CHECK(structure_function(2, {Statistics::bosonic, 2}) == 3);
  CHECK_THROWS_AS(DeformationSpec(Statistics::bosonic, 0), ParameterError);
}

TEST_CASE("phi factorial matches closed forms") {
  for (int m = 1; m <= 10; ++m) {
    for (auto s : {Statistics::fermionic, Statistics::bosonic}) {
      const DeformationSpec spec(s, m);
      Rational running = 1;
      for (int n = 0; n <= 12; ++n) {
        if (n > 0) running *= phi_oracle(n, m, s);
        CHECK(phi_factorial(n, spec) == running);
        CHECK(phi_factorial_closed_form(n, spec) == running);
      }
    }
  }
  CHECK(phi_factorial(2, {Statistics::fermionic, 3}) == Rational(4, 3));
  CHECK(phi_factorial(2, {Statistics::bosonic, 2}) == 3);
}

TEST_CASE("fermionic phi factorial vanishes beyond m") {
  for (int m = 1; m <= 8; ++m) {
    const DeformationSpec spec(Statistics::fermionic, m);
    CHECK(phi_factorial(m, spec) > 0);
    CHECK(phi_factorial(m + 1, spec) == 0);
  }
}

TEST_CASE("quadratic recurrence holds exactly") {
  for (int m = 1; m <= 10; ++m) {
    for (auto s : {Statistics::fermionic, Statistics::bosonic}) CHECK(check_recurrence({s, m}, 10));
  }
}

TEST_CASE("recurrence detects non-quadratic structure functions") {
  std::vector<Rational> phi;
  for (int n = 0; n <= 11; ++n) phi.emplace_back(Rational(n * n * n, 7) + n);
  CHECK_FALSE(check_recurrence(phi, 10));
  std::vector<Rational> quadratic;
  for (int n = 0; n <= 11; ++n) quadratic.emplace_back(Rational(3 * n * n - 2 * n, 5));
  CHECK(check_recurrence(quadratic, 10));
}

TEST_CASE("chi ratio saturates the lower bound for fermions") {
  for (int m = 2; m <= 10; ++m) {
    const DeformationSpec spec(Statistics::fermionic, m);
    for (int n = 1; n < m; ++n) {
      const Rational chi = chi_ratio(spec, n);
      CHECK(chi == 1 - Rational(n, m));
      CHECK(chi >= 1 - Rational(n, m));
      CHECK(chi <= 1 - Rational(1, m));
    }
  }
}

TEST_CASE("bosonic chi ratio exceeds one") {
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; n <= 5; ++n) CHECK(chi_ratio({Statistics::bosonic, m}, n) == 1 + Rational(n, m));
}

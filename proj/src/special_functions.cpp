// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "qboson/special_functions.hpp"

#include <cmath>
#include <string>

#include "qboson/errors.hpp"

namespace qboson {

SeriesResult sum_series(const std::function<double(int, double)>& term, const SeriesControl& control) {
  SeriesResult out;
  double previous = 0.0;
  int quiet = 0;
  for (int n = 0; n < control.max_terms; ++n) {
    const double t = term(n, previous);
    out.value += t;
    out.terms = n + 1;
    previous = t;
    // A zero sum with a zero term means every later term vanishes too.
    const bool negligible = std::abs(t) < control.rel_tol * std::abs(out.value) || (t == 0.0 && out.value == 0.0);
    quiet = negligible ? quiet + 1 : 0;
    if (quiet >= control.quiet_terms) return out;
  }
  throw ConvergenceError("series did not converge within " + std::to_string(control.max_terms) + " terms");
}

double bessel_i_scaled(int order, double z, const SeriesControl& control) {
  if (order < 0) throw ParameterError("bessel_i: order must be >= 0");
  if (!(z >= 0.0) || !std::isfinite(z)) throw ParameterError("bessel_i: z must be finite and >= 0");
  const double q = 0.25 * z * z;
  return sum_series(
             [&](int j, double prev) {
               if (j == 0) return 1.0 / std::tgamma(order + 1.0);
               return prev * q / (static_cast<double>(j) * static_cast<double>(j + order));
             },
             control)
      .value;
}

double bessel_i(int order, double z, const SeriesControl& control) {
  const double scaled = bessel_i_scaled(order, z, control);
  return order == 0 ? scaled : scaled * std::pow(0.5 * z, order);
}

SeriesResult hyper_0f3_series(double b1, double b2, double b3, double z, const SeriesControl& control) {
  for (double b : {b1, b2, b3}) {
    if (b <= 0.0 && b == std::floor(b)) throw ParameterError("hyper_0f3: parameters must not be nonpositive integers");
  }
  return sum_series(
             [&](int n, double prev) {
               if (n == 0) return 1.0;
               const double k = n - 1;
               return prev * z / ((b1 + k) * (b2 + k) * (b3 + k) * static_cast<double>(n));
             },
             control);
}

double hyper_0f3(double b1, double b2, double b3, double z, const SeriesControl& control) {
  return hyper_0f3_series(b1, b2, b3, z, control).value;
}

}  // namespace qboson

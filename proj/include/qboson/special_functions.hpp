// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace qboson {

/// Stopping rule shared by every series in this library: stop once
/// |term| < rel_tol · |partial sum| for `quiet_terms` consecutive terms.
struct SeriesControl {
  double rel_tol = 1e-16;
  int quiet_terms = 3;
  int max_terms = 10000;
};

struct SeriesResult {
  double value = 0.0;
  int terms = 0;
};

/// Σ_{n≥0} term(n, previous_term). Throws ConvergenceError when the cap is
/// reached first.
SeriesResult sum_series(const std::function<double(int n, double previous)>& term, const SeriesControl& control = {});

/// Modified Bessel function of the first kind, integer order, z ≥ 0, by its
/// power series Σ_j (z/2)^{ν+2j} / (j! (j+ν)!).
double bessel_i(int order, double z, const SeriesControl& control = {});

/// I_ν(z) / (z/2)^ν, finite at z = 0 where it equals 1/ν!.
double bessel_i_scaled(int order, double z, const SeriesControl& control = {});

/// ₀F₃(; b1, b2, b3; z) = Σ_n zⁿ / ((b1)_n (b2)_n (b3)_n n!).
double hyper_0f3(double b1, double b2, double b3, double z, const SeriesControl& control = {});

/// hyper_0f3 together with the number of terms summed.
SeriesResult hyper_0f3_series(double b1, double b2, double b3, double z, const SeriesControl& control = {});

}  // namespace qboson

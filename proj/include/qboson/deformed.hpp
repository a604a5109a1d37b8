// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file deformed.hpp
 * @brief Structure function of the quadratic deformed oscillator and the
 * exact-rational quantities derived from it.
 *
 * With f = 2/m,
 *
 *   φ(n) = (1 + ε f/2) n - ε (f/2) n²,
 *
 * so φ(0) = 0, φ(1) = 1 and φ(2) = 2 - ε f. All arithmetic here is exact.
 */

#pragma once

#include <span>
#include <vector>

#include "qboson/fock.hpp"
#include "qboson/types.hpp"

namespace qboson {

struct DeformationSpec {
  Statistics statistics = Statistics::fermionic;
  int m = 1;

  DeformationSpec() = default;
  DeformationSpec(Statistics s, int block_size);

  [[nodiscard]] int epsilon() const noexcept { return qboson::epsilon(statistics); }
  [[nodiscard]] Rational f() const { return Rational(2, m); }
};

Rational structure_function(int n, const DeformationSpec& spec);

/// φ(n)! = φ(1)·…·φ(n); the empty product is 1.
Rational phi_factorial(int n, const DeformationSpec& spec);

/// Closed forms (n!)² C_m^n / m^n (ε = +1) and (n!)² C_{m+n-1}^n / m^n (ε = -1).
Rational phi_factorial_closed_form(int n, const DeformationSpec& spec);

/// Checks φ(n+1) = Σ_{k=0}^{n} (-1)^{n-k} C(n+1, k) φ(k) for 2 ≤ n ≤ n_max on
/// the tabulated values phi[0..n_max+1].
bool check_recurrence(std::span<const Rational> phi, int n_max);

/// Same check on the structure function of `spec`.
bool check_recurrence(const DeformationSpec& spec, int n_max);

/// χ_{N+1}/χ_N with χ_N = φ(N)!/N!, i.e. φ(N+1)/(N+1).
Rational chi_ratio(const DeformationSpec& spec, int n);

}  // namespace qboson

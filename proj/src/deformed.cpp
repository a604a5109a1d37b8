// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "qboson/deformed.hpp"

#include <string>

#include "qboson/errors.hpp"

namespace qboson {

DeformationSpec::DeformationSpec(Statistics s, int block_size) : statistics(s), m(block_size) {
  if (block_size < 1) throw ParameterError("deformation block size m must be >= 1, got " + std::to_string(block_size));
}

Rational structure_function(int n, const DeformationSpec& spec) {
  if (n < 0) throw ParameterError("structure_function: n must be >= 0");
  const Rational half_f = spec.f() / 2;
  const Rational eps = spec.epsilon();
  const Rational x = n;
  return (1 + eps * half_f) * x - eps * half_f * x * x;
}

Rational phi_factorial(int n, const DeformationSpec& spec) {
  if (n < 0) throw ParameterError("phi_factorial: n must be >= 0");
  Rational product = 1;
  for (int k = 1; k <= n; ++k) product *= structure_function(k, spec);
  return product;
}

Rational phi_factorial_closed_form(int n, const DeformationSpec& spec) {
  if (n < 0) throw ParameterError("phi_factorial_closed_form: n must be >= 0");
  const BigInt nf = factorial(n);
  const BigInt count = spec.statistics == Statistics::fermionic ? binomial(spec.m, n) : binomial(spec.m + n - 1, n);
  BigInt denominator = 1;
  for (int k = 0; k < n; ++k) denominator *= spec.m;
  return Rational(nf * nf * count, denominator);
}

bool check_recurrence(std::span<const Rational> phi, int n_max) {
  if (n_max < 2) throw ParameterError("check_recurrence: n_max must be >= 2");
  if (phi.size() < static_cast<std::size_t>(n_max) + 2) {
    throw ParameterError("check_recurrence: need phi(0..n_max+1)");
  }
  for (int n = 2; n <= n_max; ++n) {
    Rational rhs = 0;
    for (int k = 0; k <= n; ++k) {
      const Rational term = Rational(binomial(n + 1, k)) * phi[static_cast<std::size_t>(k)];
      rhs += ((n - k) % 2 == 0) ? term : -term;
    }
    if (rhs != phi[static_cast<std::size_t>(n) + 1]) return false;
  }
  return true;
}

bool check_recurrence(const DeformationSpec& spec, int n_max) {
  if (n_max < 2) throw ParameterError("check_recurrence: n_max must be >= 2");
  std::vector<Rational> table;
  for (int k = 0; k <= n_max + 1; ++k) table.push_back(structure_function(k, spec));
  return check_recurrence(table, n_max);
}

Rational chi_ratio(const DeformationSpec& spec, int n) {
  if (n < 1) throw ParameterError("chi_ratio: N must be >= 1");
  return structure_function(n + 1, spec) / (n + 1);
}

}  // namespace qboson

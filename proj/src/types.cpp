// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "qboson/types.hpp"

#include "qboson/errors.hpp"

namespace qboson {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: the running product is C(n-k+i, i)
  }
  return result;
}

BigInt factorial(long n) {
  if (n < 0) throw ParameterError("factorial of negative number");
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

double to_double(const BigInt& n) { return n.convert_to<double>(); }

}  // namespace qboson

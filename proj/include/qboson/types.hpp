// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace qboson {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Exact n!.
BigInt factorial(long n);

double to_double(const Rational& q);
double to_double(const BigInt& n);

}  // namespace qboson

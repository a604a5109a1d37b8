// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "qboson/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "qboson/errors.hpp"

namespace qboson {

std::size_t SchmidtSpectrum::rank() const {
  if (lambdas.empty()) return 0;
  const double cut = kRankThreshold * lambdas.front();
  return static_cast<std::size_t>(std::count_if(lambdas.begin(), lambdas.end(), [cut](double x) { return x > cut; }));
}

double SchmidtSpectrum::sum_of_squares() const {
  double s = 0.0;
  for (double x : lambdas) s += x * x;
  return s;
}

SchmidtDecomposition schmidt_decompose(const Matrix& coefficients, bool with_vectors) {
  const double norm = coefficients.norm();
  if (norm == 0.0) throw ValidationError("schmidt_decompose: zero matrix carries no state");

  SchmidtDecomposition out;
  Matrix m = coefficients;
  if (std::abs(norm - 1.0) > 1e-8) {
    m /= norm;
    out.renormalized = true;
  }

  const unsigned options = with_vectors ? (Eigen::ComputeThinU | Eigen::ComputeThinV) : 0U;
  Eigen::JacobiSVD<Matrix> svd(m, options);
  const auto& sv = svd.singularValues();
  out.spectrum.lambdas.assign(sv.data(), sv.data() + sv.size());  // already nonincreasing
  if (with_vectors) {
    out.left = svd.matrixU();
    out.right = svd.matrixV().conjugate();
  }
  return out;
}

EntanglementReport report(const SchmidtSpectrum& spectrum) {
  EntanglementReport r;
  r.rank = spectrum.rank();
  double fourth = 0.0;
  double entropy = 0.0;
  for (double lambda : spectrum.lambdas) {
    const double p = lambda * lambda;
    fourth += p * p;
    if (p > 0.0) entropy -= p * std::log(p);
  }
  r.purity = fourth;
  r.schmidt_number = 1.0 / fourth;
  r.entropy = entropy;
  if (r.rank > 1) {
    const double rank = static_cast<double>(r.rank);
    r.concurrence = std::sqrt(std::max(0.0, rank / (rank - 1.0) * (1.0 - fourth)));
  }
  return r;
}

namespace {

struct ReducedValues {
  double schmidt_number;
  double entropy;
  double uniform_residual;
};

ReducedValues analyse_reduced(const Matrix& rho, std::size_t rank) {
  const double purity = (rho * rho).trace().real();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const double mu = eig.eigenvalues()(i);
    if (mu > 0.0) entropy -= mu * std::log(mu);
  }
  const double r = static_cast<double>(std::max<std::size_t>(rank, 1));
  const double uniform = (rho * rho - rho / r).norm();
  return {1.0 / purity, entropy, uniform};
}

}  // namespace

DensityMatrixCheck reduced_density_check(const StateVector& state, double tolerance) {
  const Matrix m = bipartite_reshape(state.is_normalized() ? state : state.normalized());

  DensityMatrixCheck check;
  check.tolerance = tolerance;
  check.spectrum_route = report(schmidt_decompose(m).spectrum);

  // ρ_a = Tr_b |ψ⟩⟨ψ| = M M†, ρ_b = Tr_a |ψ⟩⟨ψ| = Mᵀ M̄.
  const Matrix rho_a = m * m.adjoint();
  const Matrix rho_b = m.transpose() * m.conjugate();
  const auto a = analyse_reduced(rho_a, check.spectrum_route.rank);
  const auto b = analyse_reduced(rho_b, check.spectrum_route.rank);
  check.schmidt_number_a = a.schmidt_number;
  check.schmidt_number_b = b.schmidt_number;
  check.entropy_a = a.entropy;
  check.entropy_b = b.entropy;
  check.uniform_mixture_residual = a.uniform_residual;

  const double k = check.spectrum_route.schmidt_number;
  const double s = check.spectrum_route.entropy;
  check.max_deviation = std::max({std::abs(a.schmidt_number - k), std::abs(b.schmidt_number - k),
                                  std::abs(a.entropy - s), std::abs(b.entropy - s)});
  return check;
}

}  // namespace qboson

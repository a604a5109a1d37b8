// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qboson/fock.hpp"
#include "qboson/types.hpp"

namespace qboson {

/// Relative threshold below which a Schmidt coefficient counts as zero.
inline constexpr double kRankThreshold = 1e-12;

/// Schmidt coefficients of a bipartite vector, nonincreasing.
struct SchmidtSpectrum {
  std::vector<double> lambdas;

  /// Number of λ_k above kRankThreshold · λ_max.
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] double sum_of_squares() const;
};

struct SchmidtDecomposition {
  SchmidtSpectrum spectrum;
  /// Columns are |v_k⟩ and |w_k⟩ respectively (only when requested). The
  /// input equals left · diag(λ) · right^T, so w_k are the conjugated right
  /// singular vectors.
  std::optional<Matrix> left;
  std::optional<Matrix> right;
  /// Set when the input was rescaled to unit Frobenius norm.
  bool renormalized = false;
};

/// Singular value decomposition of a coefficient matrix. Inputs whose
/// Frobenius norm deviates from 1 by more than 1e-8 are normalized first.
/// Throws ValidationError for the zero matrix.
SchmidtDecomposition schmidt_decompose(const Matrix& coefficients, bool with_vectors = false);

struct EntanglementReport {
  std::size_t rank = 0;
  double schmidt_number = 0.0;  ///< K = 1 / Σ λ⁴
  double purity = 0.0;          ///< P = Σ λ⁴
  double entropy = 0.0;         ///< S = -Σ λ² ln λ², nats
  double concurrence = 0.0;     ///< √(r/(r-1) · (1 - Σ λ⁴)), 0 for r = 1
};

EntanglementReport report(const SchmidtSpectrum& spectrum);

/// Both reduced density matrices of a bipartite pure state, evaluated
/// independently of the SVD route.
struct DensityMatrixCheck {
  EntanglementReport spectrum_route;
  double schmidt_number_a = 0.0;  ///< 1 / Tr(ρ_a²)
  double schmidt_number_b = 0.0;
  double entropy_a = 0.0;         ///< -Tr ρ_a ln ρ_a
  double entropy_b = 0.0;
  /// Largest disagreement among the four density-matrix values and the
  /// spectrum-route K and S.
  double max_deviation = 0.0;
  /// ‖ρ_a² - ρ_a / r‖_F: zero iff ρ_a is a uniform mixture of r states.
  double uniform_mixture_residual = 0.0;
  double tolerance = 1e-10;

  [[nodiscard]] bool consistent() const noexcept { return max_deviation < tolerance; }
};

DensityMatrixCheck reduced_density_check(const StateVector& state, double tolerance = 1e-10);

}  // namespace qboson

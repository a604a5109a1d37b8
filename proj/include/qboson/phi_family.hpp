// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file phi_family.hpp
 * @brief Coefficient matrices Φ_α of quasiboson creation operators that
 * realize a deformed oscillator, and their validation.
 *
 * A family of D modes with block size m is
 *
 *   Φ_α = U_1 · diag{0, …, √(1/m) U_α(m), …, 0} · U_2†,
 *
 * with the m×m block of mode α (0-based) at rows/columns [α·m, (α+1)·m).
 * Any unitaries U_1 (d_a), U_2 (d_b), U_α (m) give a valid family; the
 * deformation parameter is f = 2/m.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qboson/entanglement.hpp"
#include "qboson/fock.hpp"
#include "qboson/types.hpp"

namespace qboson {

struct UnitarySpec {
  enum class Kind { identity, seeded_random, explicit_matrix };

  Kind kind = Kind::identity;
  std::uint64_t seed = 0;
  Matrix matrix;

  static UnitarySpec identity() { return {}; }
  static UnitarySpec seeded(std::uint64_t seed) { return {Kind::seeded_random, seed, {}}; }
  static UnitarySpec explicit_matrix(Matrix u) { return {Kind::explicit_matrix, 0, std::move(u)}; }
};

std::string_view to_string(UnitarySpec::Kind kind) noexcept;

/// Haar-distributed unitary: QR of a seeded complex Gaussian matrix with the
/// phases of R's diagonal moved into Q. `stream` decorrelates several draws
/// from the same seed.
Matrix haar_unitary(int dim, std::uint64_t seed, std::uint64_t stream = 0);

/// Realizes a spec at the given dimension. Explicit matrices must be square
/// of that size and unitary within 1e-10 (ValidationError otherwise).
Matrix make_unitary(const UnitarySpec& spec, int dim, std::uint64_t stream = 0);

/// max |U†U - 1| entry.
double unitarity_defect(const Matrix& u);

struct PhiMatrix {
  int label = 0;
  Matrix entries;
  int block_start = 0;
};

struct FamilyConfig {
  int d_a = 1;
  int d_b = 1;
  int m = 1;
  int n_modes = 1;
  Statistics statistics = Statistics::fermionic;
  UnitarySpec u1;
  UnitarySpec u2;
  UnitarySpec block;
};

struct PhiFamily {
  Statistics statistics = Statistics::fermionic;
  int m = 1;
  int d_a = 1;
  int d_b = 1;
  UnitarySpec u1;
  UnitarySpec u2;
  UnitarySpec block;
  std::vector<PhiMatrix> matrices;

  [[nodiscard]] Rational f() const { return Rational(2, m); }
  [[nodiscard]] int n_modes() const noexcept { return static_cast<int>(matrices.size()); }
};

PhiFamily build_phi_family(const FamilyConfig& config);

/// Family from hand-supplied matrices, e.g. loaded from JSON. Nothing is
/// checked beyond shapes; use validate_family.
PhiFamily family_from_matrices(Statistics statistics, int m, std::vector<Matrix> matrices);

struct ValidationReport {
  double orthonormality = 0.0;     ///< max |Tr(Φ_α Φ_β†) - δ_αβ|
  double cross_mode = 0.0;         ///< max ‖Φ_β Φ_α† Φ_γ + Φ_γ Φ_α† Φ_β‖, α ≠ β
  double cubic = 0.0;              ///< max ‖Φ_α Φ_α† Φ_α - (f/2) Φ_α‖
  std::vector<double> f_hat;       ///< 2 Tr((Φ_α† Φ_α)²) per mode
  double f_deviation = 0.0;        ///< max |f̂ - 2/m|
  double tolerance = 1e-10;

  [[nodiscard]] bool orthonormality_ok() const noexcept { return orthonormality < tolerance; }
  [[nodiscard]] bool cross_mode_ok() const noexcept { return cross_mode < tolerance; }
  [[nodiscard]] bool cubic_ok() const noexcept { return cubic < tolerance; }
  [[nodiscard]] bool f_ok() const noexcept { return f_deviation < tolerance; }
  [[nodiscard]] bool passed() const noexcept { return orthonormality_ok() && cross_mode_ok() && cubic_ok() && f_ok(); }
  /// Names of the failing checks.
  [[nodiscard]] std::vector<std::string> failures() const;
};

ValidationReport validate_family(const PhiFamily& family, double tolerance = 1e-10);

SchmidtSpectrum schmidt_of_phi(const PhiMatrix& phi);

}  // namespace qboson

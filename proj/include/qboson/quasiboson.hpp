// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quasiboson.hpp
 * @brief Quasiboson operators A†_α = Σ Φ_α^{μν} a†_μ b†_ν on explicit
 * constituent Fock spaces, and the check that they obey the deformed
 * oscillator algebra on the span of quasiboson states.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qboson/deformed.hpp"
#include "qboson/fock.hpp"
#include "qboson/phi_family.hpp"

namespace qboson {

/// A†_α on `space` for coefficient matrix `phi` (d_a × d_b).
SparseOperator quasiboson_creation(const ProductSpace& space, const Matrix& phi);

class QuasibosonSystem {
 public:
  /// Constituent spaces have d_a and d_b modes and the given total-quanta
  /// cutoffs; their statistics is the family's.
  QuasibosonSystem(PhiFamily family, int max_quanta_a, int max_quanta_b);

  [[nodiscard]] const ProductSpace& space() const noexcept { return space_; }
  [[nodiscard]] const PhiFamily& family() const noexcept { return family_; }
  [[nodiscard]] DeformationSpec deformation() const { return {family_.statistics, family_.m}; }
  [[nodiscard]] std::size_t n_modes() const noexcept { return creation_.size(); }

  [[nodiscard]] const SparseOperator& creation(std::size_t alpha) const { return creation_.at(alpha); }
  [[nodiscard]] const SparseOperator& annihilation(std::size_t alpha) const { return annihilation_.at(alpha); }

  /// Largest number of quasibosons whose states are represented without
  /// truncation: min of the two cutoffs, unbounded species count as infinite.
  [[nodiscard]] int exact_degree() const noexcept;

  /// (A†_α)^p |0⟩.
  [[nodiscard]] Vector power_on_vacuum(std::size_t alpha, int p) const;

 private:
  PhiFamily family_;
  ProductSpace space_;
  std::vector<SparseOperator> creation_;
  std::vector<SparseOperator> annihilation_;
};

/// Δ_αβ = Σ (Φ_β Φ_α†)^{μ'μ} a†_μ' a_μ + Σ (Φ_α† Φ_β)^{νν'} b†_ν' b_ν.
SparseOperator deviation_operator(const QuasibosonSystem& system, std::size_t alpha, std::size_t beta);

/// ⟨0| A_α^n (A†_α)^n |0⟩ evaluated with explicit matrices.
double vacuum_power_norm(const QuasibosonSystem& system, std::size_t alpha, int n);

struct SpanVector {
  std::vector<int> degrees;  ///< exponent of each A†_γ in the generating monomial
  Vector state;              ///< orthonormalized
};

struct QuasibosonSpan {
  int max_degree = 0;
  std::vector<SpanVector> basis;
  std::size_t dropped = 0;  ///< monomials that vanished or were linearly dependent
};

/// Orthonormal basis of span{Π_γ (A†_γ)^{k_γ} |0⟩ : Σ k_γ ≤ n_max} by
/// modified Gram-Schmidt with one re-orthogonalization pass. Monomials whose
/// norm or residual falls below 1e-10 are dropped.
QuasibosonSpan quasiboson_span(const QuasibosonSystem& system, int n_max);

struct RealizationReport {
  int n_max = 0;
  std::size_t span_dim = 0;
  double cross_mode = 0.0;          ///< max ‖[A_α, A†_β] v‖, α ≠ β
  double ladder = 0.0;              ///< max ‖([N_α, A†_α] - A†_α) v‖ and ‖([N_α, A_α] + A_α) v‖
  double structure = 0.0;           ///< max ‖([A_α, A†_α] - φ(N_α+1) + φ(N_α)) v‖
  double deviation_identity = 0.0;  ///< max ‖([A_α, A†_β] - δ_αβ + ε Δ_αβ) v‖
  /// Per mode: smallest p with ‖(A†)^p|0⟩‖ < 1e-12, searched up to `nilpotency_search`.
  std::vector<std::optional<int>> nilpotency;
  int nilpotency_search = 0;
  double tolerance = 1e-10;

  [[nodiscard]] bool passed() const noexcept {
    return cross_mode < tolerance && ladder < tolerance && structure < tolerance && deviation_identity < tolerance;
  }
  [[nodiscard]] std::vector<std::string> failures() const;
};

/// Checks the deformed oscillator relations on the quasiboson span of
/// degree ≤ n_max. N_α acts on the span as the A†_α-degree of each basis
/// monomial. Requires every checked commutator to be free of cutoff effects:
/// both species must hold n_max + 1 quanta (or be complete fermionic spaces).
RealizationReport verify_realization(const QuasibosonSystem& system, int n_max, double tolerance = 1e-10);

}  // namespace qboson

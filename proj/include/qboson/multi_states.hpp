// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file multi_states.hpp
 * @brief Bipartite (all a-constituents vs all b-constituents) entanglement of
 * multi-quasiboson states.
 *
 * A state Σ Ψ({m_γ}) Π_γ (A†_γ)^{m_γ} |0⟩ has an extended Schmidt
 * decomposition whose coefficients are
 *
 *   Λ({m_γ}) = Ψ({m_γ}) · m^{-Σ m_γ / 2} · Π_γ m_γ!,
 *
 * each repeated Π_γ N_m^{m_γ} times, where N_m^k counts the ordered
 * multi-indices of one mode (C_m^k for fermions, C_{m+k-1}^{m-1} for
 * bosons). Closed forms below follow from that; `oracle_measures` rebuilds
 * the state in explicit constituent Fock spaces instead.
 */

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qboson/deformed.hpp"
#include "qboson/phi_family.hpp"
#include "qboson/special_functions.hpp"
#include "qboson/types.hpp"

namespace qboson {

using ModeLabel = std::string;

/// Occupation per mode; absent modes are empty.
using OccupationConfig = std::map<ModeLabel, int>;

struct Amplitude {
  OccupationConfig config;
  cplx value;
};

struct Wavefunction {
  DeformationSpec deformation;
  std::vector<ModeLabel> modes;
  std::vector<Amplitude> amplitudes;

  /// Σ |Ψ|² Π_γ φ(m_γ)!, which is ⟨Ψ|Ψ⟩ for orthonormal Φ families.
  [[nodiscard]] double norm_squared() const;

  /// Checks labels, occupations, and the fermionic bound m_γ ≤ m.
  /// Throws ParameterError or DomainError.
  void check_configs() const;
};

/// N_m^{k}: C_m^k for fermionic constituents, C_{m+k-1}^{m-1} for bosonic.
/// DomainError for fermionic k > m.
BigInt multiplicity(int m, int occupation, Statistics statistics);

struct Measures {
  double schmidt_number = 0.0;
  double entropy = 0.0;  ///< nats
};

/// Generalized Schmidt number and entropy of an arbitrary wavefunction.
/// ValidationError if the wavefunction norm deviates from 1 by more than 1e-8.
Measures general_state_measures(const Wavefunction& psi);

/// Normalized Fock state [φ(k)!]^{-1/2} (A†)^k |0⟩.
Measures fock_state_measures(int m, int occupation, Statistics statistics);

/// A†_1 ⋯ A†_n |0⟩ with all modes distinct.
Measures distinct_modes_measures(int m, int n);

/// Wavefunction of the normalized Fock state in one mode labelled "0".
Wavefunction fock_wavefunction(int m, int occupation, Statistics statistics);

/// Wavefunction of A†_0 ⋯ A†_{n-1} |0⟩.
Wavefunction distinct_modes_wavefunction(int m, int n, Statistics statistics);

struct CoherentParams {
  cplx amplitude;
  int m = 1;
  SeriesControl series;
};

struct CoherentNormalization {
  double value = 0.0;   ///< closed form via I_{m-1}
  double series = 0.0;  ///< direct Σ |𝒜|^{2n} / φ(n)!
  int terms = 0;
};

/// C̃(𝒜; m) for bosonic constituents. ConvergenceError if the two routes
/// disagree by more than 1e-10 relative.
CoherentNormalization coherent_normalization(const CoherentParams& p);

struct CoherentSchmidtNumber {
  double value = 0.0;   ///< C̃⁻⁴ / ₀F₃(m, m, m; |𝒜|⁴ m²)
  double direct = 0.0;  ///< C̃⁻⁴ / Σ (C^n_{n+m-1})⁻³ (|𝒜|² m)^{2n} / (n!)⁴
  int terms = 0;
};

CoherentSchmidtNumber coherent_K(const CoherentParams& p);

/// Entanglement entropy of the coherent state by its Schmidt-weight series.
SeriesResult coherent_entropy(const CoherentParams& p);

struct TruncatedCoherent {
  Wavefunction psi;
  int max_occupation = 0;  ///< n*: configurations 0..n* are kept
  double tail = 0.0;       ///< normalized weight of the dropped configurations
};

/// Coherent wavefunction Ψ(n) = C̃ 𝒜ⁿ / φ(n)! truncated at the smallest n*
/// whose dropped tail weight is below `tail_tolerance`.
TruncatedCoherent truncated_coherent_wavefunction(const CoherentParams& p, double tail_tolerance = 1e-12);

struct OracleOptions {
  int d_a = 0;  ///< 0: number of modes · m
  int d_b = 0;
  int cutoff_a = 0;  ///< 0: largest total occupation in the wavefunction
  int cutoff_b = 0;
  UnitarySpec u1;
  UnitarySpec u2;
  UnitarySpec block;
};

struct OracleResult {
  Measures measures;
  std::size_t rank = 0;
  int d_a = 0;
  int d_b = 0;
  int cutoff_a = 0;
  int cutoff_b = 0;
  std::size_t product_dim = 0;
};

/// Builds Σ Ψ Π (A†_γ)^{m_γ} |0⟩ in explicit Fock spaces, reshapes a vs b and
/// returns K and S from its singular values.
OracleResult oracle_measures(const Wavefunction& psi, const OracleOptions& options = {});

}  // namespace qboson

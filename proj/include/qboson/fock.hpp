// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Truncated occupation-number spaces for one constituent species,
 * sparse ladder operators on them, and the bipartite a ⊗ b product.
 *
 * Conventions:
 *  - Basis order is graded by total quanta; inside a grade, occupation
 *    vectors are sorted lexicographically with mode 0 most significant and
 *    larger occupations first ({00, 10, 01, 11} for two fermionic modes).
 *    The vacuum is always index 0.
 *  - Fermionic creation carries the Jordan-Wigner sign (-1)^(occupied modes
 *    with smaller index).
 *  - `max_quanta` is a hard cutoff on the total quanta of a species. Bosonic
 *    creation into a state at the cutoff grade yields zero, so [a, a†] = 1
 *    holds exactly only below the cutoff grade.
 *  - The two species are tensor factors: b-operators carry no sign across
 *    the a-factor.
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/SparseCore>

#include "qboson/types.hpp"

namespace qboson {

enum class Statistics { fermionic, bosonic };

/// ε = +1 for fermionic constituents, -1 for bosonic ones.
constexpr int epsilon(Statistics s) noexcept { return s == Statistics::fermionic ? 1 : -1; }

Statistics statistics_from_epsilon(int eps);
std::string_view to_string(Statistics s) noexcept;

using Occupation = std::vector<int>;

class FockSpace {
 public:
  FockSpace(Statistics statistics, int n_modes, int max_quanta);

  [[nodiscard]] Statistics statistics() const noexcept { return statistics_; }
  [[nodiscard]] int n_modes() const noexcept { return n_modes_; }
  [[nodiscard]] int max_quanta() const noexcept { return max_quanta_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }

  [[nodiscard]] const Occupation& occupation(std::size_t index) const { return basis_.at(index); }
  [[nodiscard]] std::optional<std::size_t> index_of(const Occupation& occ) const;
  [[nodiscard]] int grade(std::size_t index) const;

  /// True when the space is the complete fermionic Fock space, so that no
  /// operator is affected by truncation.
  [[nodiscard]] bool is_complete() const noexcept {
    return statistics_ == Statistics::fermionic && max_quanta_ == n_modes_;
  }

 private:
  Statistics statistics_;
  int n_modes_;
  int max_quanta_;
  std::vector<Occupation> basis_;
  std::map<Occupation, std::size_t> index_;
};

FockSpace make_space(Statistics statistics, int n_modes, int max_quanta);

/// Linear map between finite spaces, stored row-major with canonicalized
/// entries (duplicates summed, exact zeros dropped).
class SparseOperator {
 public:
  using Storage = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

  struct Entry {
    std::size_t row;
    std::size_t col;
    cplx value;
  };

  SparseOperator(std::size_t dim_out, std::size_t dim_in);
  SparseOperator(std::size_t dim_out, std::size_t dim_in, std::span<const Entry> entries);
  explicit SparseOperator(Storage matrix);

  static SparseOperator identity(std::size_t dim);

  [[nodiscard]] std::size_t dim_out() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  [[nodiscard]] std::size_t dim_in() const noexcept { return static_cast<std::size_t>(matrix_.cols()); }
  [[nodiscard]] std::size_t nnz() const noexcept { return static_cast<std::size_t>(matrix_.nonZeros()); }
  [[nodiscard]] const Storage& matrix() const noexcept { return matrix_; }

  /// Entries in row-major order.
  [[nodiscard]] std::vector<Entry> entries() const;
  [[nodiscard]] cplx coeff(std::size_t row, std::size_t col) const;
  [[nodiscard]] double max_abs() const;
  [[nodiscard]] Matrix dense() const;

  [[nodiscard]] SparseOperator adjoint() const;

  friend SparseOperator operator*(const SparseOperator& x, const SparseOperator& y);
  friend Vector operator*(const SparseOperator& x, const Vector& v);
  friend SparseOperator operator+(const SparseOperator& x, const SparseOperator& y);
  friend SparseOperator operator-(const SparseOperator& x, const SparseOperator& y);
  friend SparseOperator operator*(cplx s, const SparseOperator& x);

 private:
  Storage matrix_;
};

/// a†_mode on `space`. The annihilation operator is its adjoint.
SparseOperator creation_op(const FockSpace& space, int mode);
SparseOperator annihilation_op(const FockSpace& space, int mode);

/// xy - yx, or xy + yx when `anti` is set.
SparseOperator commutator(const SparseOperator& x, const SparseOperator& y, bool anti = false);

/// Kronecker product x ⊗ y with row index i_x * dim(y) + i_y.
SparseOperator kron(const SparseOperator& x, const SparseOperator& y);

/// The bipartite space a ⊗ b. Product index is i_a * dim_b + i_b.
class ProductSpace {
 public:
  ProductSpace(FockSpace a, FockSpace b);

  [[nodiscard]] const FockSpace& a() const noexcept { return a_; }
  [[nodiscard]] const FockSpace& b() const noexcept { return b_; }
  [[nodiscard]] std::size_t dim() const noexcept { return a_.dim() * b_.dim(); }
  [[nodiscard]] std::size_t index(std::size_t ia, std::size_t ib) const noexcept { return ia * b_.dim() + ib; }

  /// op ⊗ 1 and 1 ⊗ op.
  [[nodiscard]] SparseOperator lift_a(const SparseOperator& op) const;
  [[nodiscard]] SparseOperator lift_b(const SparseOperator& op) const;

  [[nodiscard]] Vector vacuum() const;

 private:
  FockSpace a_;
  FockSpace b_;
};

/// Dense amplitudes on a single space or on a declared product space.
class StateVector {
 public:
  static StateVector on_space(Vector amplitudes);
  static StateVector on_product(std::size_t dim_a, std::size_t dim_b, Vector amplitudes);

  [[nodiscard]] bool is_product() const noexcept { return dim_b_.has_value(); }
  [[nodiscard]] std::size_t dim_a() const noexcept { return dim_a_; }
  [[nodiscard]] std::size_t dim_b() const { return dim_b_.value(); }
  [[nodiscard]] const Vector& amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] double norm() const { return amplitudes_.norm(); }
  [[nodiscard]] bool is_normalized() const noexcept { return normalized_; }

  /// Copy scaled to unit norm; throws ValidationError for the zero vector.
  [[nodiscard]] StateVector normalized() const;

 private:
  StateVector(std::size_t dim_a, std::optional<std::size_t> dim_b, Vector amplitudes);

  std::size_t dim_a_;
  std::optional<std::size_t> dim_b_;
  Vector amplitudes_;
  bool normalized_ = false;
};

/// M[i][j] = amplitude of |i⟩_a ⊗ |j⟩_b.
Matrix bipartite_reshape(const StateVector& state);

}  // namespace qboson

// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "qboson/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qboson/errors.hpp"

namespace qboson {

Statistics statistics_from_epsilon(int eps) {
  if (eps == 1) return Statistics::fermionic;
  if (eps == -1) return Statistics::bosonic;
  throw ParameterError("epsilon must be +1 (fermionic) or -1 (bosonic), got " + std::to_string(eps));
}

std::string_view to_string(Statistics s) noexcept {
  return s == Statistics::fermionic ? "fermionic" : "bosonic";
}

namespace {

// Appends every occupation vector of total `remaining` over modes [mode, n),
// mode 0 most significant, larger occupations first.
void enumerate_grade(Occupation& current, int mode, int remaining, int cap, std::vector<Occupation>& out) {
  const int n = static_cast<int>(current.size());
  if (mode == n) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (int k = std::min(remaining, cap); k >= 0; --k) {
    current[mode] = k;
    enumerate_grade(current, mode + 1, remaining - k, cap, out);
  }
  current[mode] = 0;
}

}  // namespace

FockSpace::FockSpace(Statistics statistics, int n_modes, int max_quanta)
    : statistics_(statistics), n_modes_(n_modes), max_quanta_(max_quanta) {
  if (n_modes < 1) throw ParameterError("FockSpace: n_modes must be >= 1");
  if (max_quanta < 0) throw ParameterError("FockSpace: max_quanta must be >= 0");
  if (statistics == Statistics::fermionic && max_quanta > n_modes) {
    throw ParameterError("FockSpace: fermionic max_quanta (" + std::to_string(max_quanta) +
                         ") exceeds n_modes (" + std::to_string(n_modes) + ")");
  }
  const int cap = statistics == Statistics::fermionic ? 1 : max_quanta;
  Occupation current(static_cast<std::size_t>(n_modes), 0);
  for (int g = 0; g <= max_quanta; ++g) enumerate_grade(current, 0, g, cap, basis_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> FockSpace::index_of(const Occupation& occ) const {
  const auto it = index_.find(occ);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FockSpace::grade(std::size_t index) const {
  const auto& occ = basis_.at(index);
  return std::accumulate(occ.begin(), occ.end(), 0);
}

FockSpace make_space(Statistics statistics, int n_modes, int max_quanta) {
  return FockSpace(statistics, n_modes, max_quanta);
}

// ---------------------------------------------------------------------------
// SparseOperator

SparseOperator::SparseOperator(std::size_t dim_out, std::size_t dim_in)
    : matrix_(static_cast<Eigen::Index>(dim_out), static_cast<Eigen::Index>(dim_in)) {}

SparseOperator::SparseOperator(std::size_t dim_out, std::size_t dim_in, std::span<const Entry> entries)
    : SparseOperator(dim_out, dim_in) {
  std::vector<Eigen::Triplet<cplx>> triplets;
  triplets.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.row >= dim_out || e.col >= dim_in) throw ParameterError("SparseOperator: entry index out of bounds");
    triplets.emplace_back(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col), e.value);
  }
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
  matrix_.prune(cplx(0.0));
}

SparseOperator::SparseOperator(Storage matrix) : matrix_(std::move(matrix)) {
  matrix_.prune(cplx(0.0));
  matrix_.makeCompressed();
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  Storage id(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  id.setIdentity();
  return SparseOperator(std::move(id));
}

std::vector<SparseOperator::Entry> SparseOperator::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (Eigen::Index r = 0; r < matrix_.outerSize(); ++r) {
    for (Storage::InnerIterator it(matrix_, r); it; ++it) {
      out.push_back({static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()), it.value()});
    }
  }
  return out;
}

cplx SparseOperator::coeff(std::size_t row, std::size_t col) const {
  return matrix_.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (Eigen::Index k = 0; k < matrix_.nonZeros(); ++k) m = std::max(m, std::abs(matrix_.valuePtr()[k]));
  return m;
}

Matrix SparseOperator::dense() const { return Matrix(matrix_); }

SparseOperator SparseOperator::adjoint() const { return SparseOperator(Storage(matrix_.adjoint())); }

SparseOperator operator*(const SparseOperator& x, const SparseOperator& y) {
  if (x.dim_in() != y.dim_out()) throw ParameterError("SparseOperator product: dimension mismatch");
  return SparseOperator(SparseOperator::Storage(x.matrix_ * y.matrix_));
}

Vector operator*(const SparseOperator& x, const Vector& v) {
  if (x.dim_in() != static_cast<std::size_t>(v.size())) throw ParameterError("SparseOperator apply: dimension mismatch");
  return x.matrix_ * v;
}

SparseOperator operator+(const SparseOperator& x, const SparseOperator& y) {
  if (x.dim_out() != y.dim_out() || x.dim_in() != y.dim_in()) throw ParameterError("SparseOperator sum: dimension mismatch");
  return SparseOperator(SparseOperator::Storage(x.matrix_ + y.matrix_));
}

SparseOperator operator-(const SparseOperator& x, const SparseOperator& y) {
  if (x.dim_out() != y.dim_out() || x.dim_in() != y.dim_in()) throw ParameterError("SparseOperator difference: dimension mismatch");
  return SparseOperator(SparseOperator::Storage(x.matrix_ - y.matrix_));
}

SparseOperator operator*(cplx s, const SparseOperator& x) {
  return SparseOperator(SparseOperator::Storage(s * x.matrix_));
}

// ---------------------------------------------------------------------------
// Ladder operators

SparseOperator creation_op(const FockSpace& space, int mode) {
  if (mode < 0 || mode >= space.n_modes()) {
    throw ParameterError("creation_op: mode " + std::to_string(mode) + " out of range [0, " +
                         std::to_string(space.n_modes()) + ")");
  }
  const bool fermionic = space.statistics() == Statistics::fermionic;
  std::vector<SparseOperator::Entry> entries;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (space.grade(i) + 1 > space.max_quanta()) continue;
    Occupation target = space.occupation(i);
    const int n = target[static_cast<std::size_t>(mode)];
    double value = 0.0;
    if (fermionic) {
      if (n == 1) continue;
      const int below = std::accumulate(target.begin(), target.begin() + mode, 0);
      value = (below % 2 == 0) ? 1.0 : -1.0;
    } else {
      value = std::sqrt(static_cast<double>(n + 1));
    }
    target[static_cast<std::size_t>(mode)] = n + 1;
    entries.push_back({space.index_of(target).value(), i, cplx(value)});
  }
  return SparseOperator(space.dim(), space.dim(), entries);
}

SparseOperator annihilation_op(const FockSpace& space, int mode) { return creation_op(space, mode).adjoint(); }

SparseOperator commutator(const SparseOperator& x, const SparseOperator& y, bool anti) {
  if (x.dim_out() != x.dim_in() || y.dim_out() != y.dim_in() || x.dim_in() != y.dim_in()) {
    throw ParameterError("commutator: operators must be square with equal dimensions");
  }
  return anti ? x * y + y * x : x * y - y * x;
}

SparseOperator kron(const SparseOperator& x, const SparseOperator& y) {
  const auto ex = x.entries();
  const auto ey = y.entries();
  std::vector<SparseOperator::Entry> out;
  out.reserve(ex.size() * ey.size());
  for (const auto& a : ex) {
    for (const auto& b : ey) {
      out.push_back({a.row * y.dim_out() + b.row, a.col * y.dim_in() + b.col, a.value * b.value});
    }
  }
  return SparseOperator(x.dim_out() * y.dim_out(), x.dim_in() * y.dim_in(), out);
}

// ---------------------------------------------------------------------------
// Product space and states

ProductSpace::ProductSpace(FockSpace a, FockSpace b) : a_(std::move(a)), b_(std::move(b)) {}

SparseOperator ProductSpace::lift_a(const SparseOperator& op) const {
  return kron(op, SparseOperator::identity(b_.dim()));
}

SparseOperator ProductSpace::lift_b(const SparseOperator& op) const {
  return kron(SparseOperator::identity(a_.dim()), op);
}

Vector ProductSpace::vacuum() const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim()));
  v(0) = 1.0;
  return v;
}

StateVector::StateVector(std::size_t dim_a, std::optional<std::size_t> dim_b, Vector amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::on_space(Vector amplitudes) {
  const auto n = static_cast<std::size_t>(amplitudes.size());
  return StateVector(n, std::nullopt, std::move(amplitudes));
}

StateVector StateVector::on_product(std::size_t dim_a, std::size_t dim_b, Vector amplitudes) {
  if (dim_a * dim_b != static_cast<std::size_t>(amplitudes.size())) {
    throw ParameterError("StateVector: amplitude count does not match dim_a * dim_b");
  }
  return StateVector(dim_a, dim_b, std::move(amplitudes));
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw ValidationError("cannot normalize the zero vector");
  StateVector out(dim_a_, dim_b_, amplitudes_ / n);
  out.normalized_ = true;
  return out;
}

Matrix bipartite_reshape(const StateVector& state) {
  if (!state.is_product()) throw UsageError("bipartite_reshape: state is not declared on a product space");
  const auto rows = static_cast<Eigen::Index>(state.dim_a());
  const auto cols = static_cast<Eigen::Index>(state.dim_b());
  // Product index i_a * dim_b + i_b is row-major.
  return Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      state.amplitudes().data(), rows, cols);
}

}  // namespace qboson

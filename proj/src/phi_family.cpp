// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "qboson/phi_family.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/QR>

#include "qboson/errors.hpp"

namespace qboson {

std::string_view to_string(UnitarySpec::Kind kind) noexcept {
  switch (kind) {
    case UnitarySpec::Kind::identity: return "identity";
    case UnitarySpec::Kind::seeded_random: return "seeded-random";
    case UnitarySpec::Kind::explicit_matrix: return "explicit";
  }
  return "identity";
}

Matrix haar_unitary(int dim, std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = cplx(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

Matrix make_unitary(const UnitarySpec& spec, int dim, std::uint64_t stream) {
  switch (spec.kind) {
    case UnitarySpec::Kind::identity:
      return Matrix::Identity(dim, dim);
    case UnitarySpec::Kind::seeded_random:
      return haar_unitary(dim, spec.seed, stream);
    case UnitarySpec::Kind::explicit_matrix:
      if (spec.matrix.rows() != dim || spec.matrix.cols() != dim) {
        throw ParameterError("explicit unitary must be " + std::to_string(dim) + "x" + std::to_string(dim));
      }
      if (const double defect = unitarity_defect(spec.matrix); defect > 1e-10) {
        throw ValidationError("explicit matrix is not unitary (defect " + std::to_string(defect) + ")");
      }
      return spec.matrix;
  }
  return Matrix::Identity(dim, dim);
}

PhiFamily build_phi_family(const FamilyConfig& c) {
  if (c.d_a < 1 || c.d_b < 1 || c.m < 1 || c.n_modes < 1) {
    throw ParameterError("build_phi_family: dimensions, m and mode count must be positive");
  }
  if (c.n_modes * c.m > std::min(c.d_a, c.d_b)) {
    throw ParameterError("build_phi_family: " + std::to_string(c.n_modes) + " blocks of size " + std::to_string(c.m) +
                         " do not fit in min(d_a, d_b) = " + std::to_string(std::min(c.d_a, c.d_b)));
  }
  // Streams 0 and 1 keep U_1 and U_2 distinct when they share a seed; blocks
  // use streams 2 + α.
  const Matrix u1 = make_unitary(c.u1, c.d_a, 0);
  const Matrix u2 = make_unitary(c.u2, c.d_b, 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(c.m));

  PhiFamily family{c.statistics, c.m, c.d_a, c.d_b, c.u1, c.u2, c.block, {}};
  for (int alpha = 0; alpha < c.n_modes; ++alpha) {
    const Matrix block = make_unitary(c.block, c.m, 2 + static_cast<std::uint64_t>(alpha));
    Matrix inner = Matrix::Zero(c.d_a, c.d_b);
    const int start = alpha * c.m;
    inner.block(start, start, c.m, c.m) = scale * block;
    family.matrices.push_back({alpha, u1 * inner * u2.adjoint(), start});
  }
  return family;
}

PhiFamily family_from_matrices(Statistics statistics, int m, std::vector<Matrix> matrices) {
  if (m < 1) throw ParameterError("family_from_matrices: m must be positive");
  if (matrices.empty()) throw ParameterError("family_from_matrices: no matrices");
  PhiFamily family;
  family.statistics = statistics;
  family.m = m;
  family.d_a = static_cast<int>(matrices.front().rows());
  family.d_b = static_cast<int>(matrices.front().cols());
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (matrices[i].rows() != family.d_a || matrices[i].cols() != family.d_b) {
      throw ParameterError("family_from_matrices: matrices have different shapes");
    }
    const int label = static_cast<int>(i);
    family.matrices.push_back({label, std::move(matrices[i]), label * m});
  }
  family.u1.kind = UnitarySpec::Kind::explicit_matrix;
  family.u2.kind = UnitarySpec::Kind::explicit_matrix;
  family.block.kind = UnitarySpec::Kind::explicit_matrix;
  return family;
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  if (!orthonormality_ok()) out.emplace_back("orthonormality");
  if (!cross_mode_ok()) out.emplace_back("cross_mode_cubic");
  if (!cubic_ok()) out.emplace_back("cubic_deformation");
  if (!f_ok()) out.emplace_back("deformation_parameter");
  return out;
}

ValidationReport validate_family(const PhiFamily& family, double tolerance) {
  ValidationReport rep;
  rep.tolerance = tolerance;
  const auto& phis = family.matrices;
  const double half_f = 1.0 / static_cast<double>(family.m);
  const std::size_t n = phis.size();

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const cplx overlap = (phis[a].entries * phis[b].entries.adjoint()).trace();
      rep.orthonormality = std::max(rep.orthonormality, std::abs(overlap - cplx(a == b ? 1.0 : 0.0)));
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    const Matrix a_dag = phis[a].entries.adjoint();
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      const Matrix left = phis[b].entries * a_dag;
      for (std::size_t g = 0; g < n; ++g) {
        const Matrix sum = left * phis[g].entries + phis[g].entries * a_dag * phis[b].entries;
        rep.cross_mode = std::max(rep.cross_mode, sum.norm());
      }
    }
  }

  for (const auto& phi : phis) {
    const Matrix& x = phi.entries;
    rep.cubic = std::max(rep.cubic, (x * x.adjoint() * x - half_f * x).norm());
    const Matrix g = x.adjoint() * x;
    const double f_hat = 2.0 * (g * g).trace().real();
    rep.f_hat.push_back(f_hat);
    rep.f_deviation = std::max(rep.f_deviation, std::abs(f_hat - 2.0 * half_f));
  }
  return rep;
}

SchmidtSpectrum schmidt_of_phi(const PhiMatrix& phi) {
  // Φ is already unit-norm for a valid family; no renormalization wanted.
  Eigen::JacobiSVD<Matrix> svd(phi.entries);
  const auto& sv = svd.singularValues();
  return SchmidtSpectrum{std::vector<double>(sv.data(), sv.data() + sv.size())};
}

}  // namespace qboson

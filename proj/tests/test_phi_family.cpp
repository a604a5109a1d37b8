// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qboson/errors.hpp"
#include "qboson/phi_family.hpp"
#include "support.hpp"

using namespace qboson;
using qboson::testing::Gen;

namespace {

FamilyConfig config(int d, int m, int modes, Statistics s, const UnitarySpec& u) { return {d, d, m, modes, s, u, u, u}; }

}  // namespace

TEST_CASE("Haar unitaries are unitary and reproducible") {
  for (int dim = 1; dim <= 8; ++dim) {
    const Matrix u = haar_unitary(dim, 42);
    CHECK(unitarity_defect(u) < 1e-13);
    CHECK((u - haar_unitary(dim, 42)).norm() == 0.0);
    if (dim > 1) {
      CHECK((u - haar_unitary(dim, 43)).norm() > 1e-3);
      CHECK((u - haar_unitary(dim, 42, 1)).norm() > 1e-3);
    }
  }
}

TEST_CASE("explicit unitaries are validated") {
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(make_unitary(UnitarySpec::explicit_matrix(bad), 2), ValidationError);
  CHECK_THROWS_AS(make_unitary(UnitarySpec::explicit_matrix(Matrix::Identity(3, 3)), 2), ParameterError);
  CHECK((make_unitary(UnitarySpec::identity(), 3) - Matrix::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("identity unitaries give block-diagonal scaled identities") {
  const auto fam = build_phi_family(config(6, 2, 3, Statistics::fermionic, UnitarySpec::identity()));
  REQUIRE(fam.n_modes() == 3);
  for (int alpha = 0; alpha < 3; ++alpha) {
    Matrix expected = Matrix::Zero(6, 6);
    for (int k = 0; k < 2; ++k) expected(2 * alpha + k, 2 * alpha + k) = 1.0 / std::sqrt(2.0);
    CHECK((fam.matrices[alpha].entries - expected).norm() < 1e-15);
    CHECK(fam.matrices[alpha].block_start == 2 * alpha);
  }
}

TEST_CASE("blocks that do not fit are rejected") {
  CHECK_THROWS_AS(build_phi_family({2, 2, 3, 1, Statistics::fermionic, {}, {}, {}}), ParameterError);
  CHECK_THROWS_AS(build_phi_family({4, 3, 2, 2, Statistics::bosonic, {}, {}, {}}), ParameterError);
  CHECK_NOTHROW(build_phi_family({4, 3, 3, 1, Statistics::bosonic, {}, {}, {}}));
}

TEST_CASE("property: seeded families satisfy the realization conditions") {
  Gen g(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = g.integer(1, 4);
    const int modes = g.integer(1, 3);
    const int d_a = modes * m + g.integer(0, 2);
    const int d_b = modes * m + g.integer(0, 2);
    const auto s = g.integer(0, 1) == 0 ? Statistics::fermionic : Statistics::bosonic;
    const auto fam = build_phi_family({d_a, d_b, m, modes, s, UnitarySpec::seeded(g.seed()),
                                       UnitarySpec::seeded(g.seed()), UnitarySpec::seeded(g.seed())});
    const auto rep = validate_family(fam);
    CHECK(rep.passed());
    CHECK(rep.failures().empty());

    // Independent recomputation of the defining relations.
    for (int a = 0; a < modes; ++a) {
      const Matrix& pa = fam.matrices[a].entries;
      CHECK((pa * pa.adjoint() * pa - pa / double(m)).norm() < 1e-12);
      const Matrix ph = pa.adjoint() * pa;
      CHECK(2.0 * (ph * ph).trace().real() == doctest::Approx(2.0 / m).epsilon(1e-12));
      for (int b = 0; b < modes; ++b) {
        const cplx overlap = (pa * fam.matrices[b].entries.adjoint()).trace();
        CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("singular values of every Φ are 1/sqrt(m), m times") {
  Gen g(5);
  for (int m = 1; m <= 6; ++m) {
    for (auto s : {Statistics::fermionic, Statistics::bosonic}) {
      const auto fam = build_phi_family(config(m + 2, m, 1, s, UnitarySpec::seeded(g.seed())));
      const auto spec = schmidt_of_phi(fam.matrices[0]);
      CHECK(spec.rank() == std::size_t(m));
      for (std::size_t k = 0; k < std::size_t(m); ++k) CHECK(std::abs(spec.lambdas[k] - 1.0 / std::sqrt(m)) < 1e-12);
    }
  }
}

TEST_CASE("tampered matrices fail named checks") {
  auto fam = build_phi_family(config(4, 2, 2, Statistics::fermionic, UnitarySpec::seeded(3)));
  fam.matrices[1].entries(0, 0) += 0.05;
  const auto rep = validate_family(fam);
  CHECK_FALSE(rep.passed());
  const auto f = rep.failures();
  CHECK(std::find(f.begin(), f.end(), "orthonormality") != f.end());
  CHECK(std::find(f.begin(), f.end(), "cubic_deformation") != f.end());
}

TEST_CASE("overlapping blocks violate the cross-mode relation") {
  // Two orthonormal Φ with the same support: orthonormal, but the cross-mode cubic relation fails.
  Matrix p1 = Matrix::Zero(2, 2);
  Matrix p2 = Matrix::Zero(2, 2);
  p1(0, 0) = p1(1, 1) = 1.0 / std::sqrt(2.0);
  p2(0, 1) = p2(1, 0) = 1.0 / std::sqrt(2.0);
  const auto fam = family_from_matrices(Statistics::fermionic, 2, {p1, p2});
  const auto rep = validate_family(fam);
  CHECK(rep.orthonormality_ok());
  CHECK(rep.cubic_ok());
  CHECK_FALSE(rep.cross_mode_ok());
}

TEST_CASE("wrong block size shows up in the deformation parameter") {
  const auto fam = build_phi_family(config(3, 3, 1, Statistics::fermionic, UnitarySpec::identity()));
  auto relabeled = family_from_matrices(Statistics::fermionic, 2, {fam.matrices[0].entries});
  const auto rep = validate_family(relabeled);
  CHECK_FALSE(rep.f_ok());
  CHECK(rep.f_hat[0] == doctest::Approx(2.0 / 3.0));
}

// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "qboson/errors.hpp"
#include "qboson/fock.hpp"
#include "qboson/types.hpp"

using namespace qboson;

namespace {

// Number of occupation vectors with total ≤ max_quanta, counted directly.
std::size_t count_states(Statistics s, int modes, int max_quanta) {
  std::size_t total = 0;
  for (int q = 0; q <= max_quanta; ++q) {
    total += s == Statistics::fermionic ? to_double(binomial(modes, q)) : to_double(binomial(q + modes - 1, q));
  }
  return total;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("basis ordering puts mode 0 first within each grade") {
  const FockSpace f(Statistics::fermionic, 2, 2);
  REQUIRE(f.dim() == 4);
  CHECK(f.occupation(0) == Occupation{0, 0});
  CHECK(f.occupation(1) == Occupation{1, 0});
  CHECK(f.occupation(2) == Occupation{0, 1});
  CHECK(f.occupation(3) == Occupation{1, 1});
  CHECK(f.grade(3) == 2);
  CHECK(f.index_of({0, 1}) == std::size_t{2});
  CHECK_FALSE(f.index_of({2, 0}).has_value());
}

TEST_CASE("dimensions match direct counting") {
  for (int modes = 1; modes <= 5; ++modes) {
    for (int q = 0; q <= 4; ++q) {
      CHECK(FockSpace(Statistics::bosonic, modes, q).dim() == count_states(Statistics::bosonic, modes, q));
      if (q <= modes) {
        CHECK(FockSpace(Statistics::fermionic, modes, q).dim() == count_states(Statistics::fermionic, modes, q));
      }
    }
  }
}

TEST_CASE("invalid spaces are rejected") {
  CHECK_THROWS_AS(FockSpace(Statistics::fermionic, 2, 3), ParameterError);
  CHECK_THROWS_AS(FockSpace(Statistics::bosonic, 0, 1), ParameterError);
  CHECK_THROWS_AS(FockSpace(Statistics::bosonic, 2, -1), ParameterError);
  CHECK_THROWS_AS(statistics_from_epsilon(0), ParameterError);
}

TEST_CASE("fermionic operators obey canonical anticommutation on the complete space") {
  const FockSpace f(Statistics::fermionic, 4, 4);
  for (int i = 0; i < 4; ++i) {
    const auto ci = creation_op(f, i);
    for (int j = 0; j < 4; ++j) {
      const auto cj = creation_op(f, j);
      const auto aj = annihilation_op(f, j);
      Matrix expected = Matrix::Zero(f.dim(), f.dim());
      if (i == j) expected.setIdentity();
      CHECK(max_abs(commutator(aj, ci, true).dense() - expected) < 1e-14);
      CHECK(commutator(cj, ci, true).max_abs() < 1e-14);
    }
  }
}

TEST_CASE("Jordan-Wigner sign follows mode order") {
  const FockSpace f(Statistics::fermionic, 2, 2);
  const auto c0 = creation_op(f, 0);
  const auto c1 = creation_op(f, 1);
  Vector vac = Vector::Zero(4);
  vac(0) = 1.0;
  const Vector s01 = c0 * (c1 * vac);
  const Vector s10 = c1 * (c0 * vac);
  CHECK(s01(3) == cplx(1.0));
  CHECK(s10(3) == cplx(-1.0));
}

TEST_CASE("bosonic operators obey [a, a†] = 1 below the cutoff") {
  const int cutoff = 5;
  const FockSpace f(Statistics::bosonic, 3, cutoff);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Matrix c = commutator(annihilation_op(f, i), creation_op(f, j)).dense();
      for (std::size_t col = 0; col < f.dim(); ++col) {
        if (f.grade(col) == cutoff) continue;
        for (std::size_t row = 0; row < f.dim(); ++row) {
          const cplx expected = (i == j && row == col) ? 1.0 : 0.0;
          CHECK(std::abs(c(row, col) - expected) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("bosonic creation amplitude is sqrt(n+1)") {
  const FockSpace f(Statistics::bosonic, 1, 4);
  const auto c = creation_op(f, 0);
  for (int n = 0; n < 4; ++n) CHECK(c.coeff(n + 1, n).real() == doctest::Approx(std::sqrt(n + 1.0)));
  CHECK(c.coeff(0, 4) == cplx(0.0));
}

TEST_CASE("sparse operator algebra matches dense algebra") {
  const FockSpace f(Statistics::bosonic, 2, 3);
  const auto x = creation_op(f, 0);
  const auto y = annihilation_op(f, 1);
  CHECK(max_abs((x * y).dense() - x.dense() * y.dense()) < 1e-14);
  CHECK(max_abs((x + y).dense() - (x.dense() + y.dense())) < 1e-14);
  CHECK(max_abs((x - x).dense()) == 0.0);
  CHECK((x - x).nnz() == 0);
  CHECK(max_abs(x.adjoint().dense() - x.dense().adjoint()) < 1e-14);
  CHECK(max_abs((cplx(0, 2) * x).dense() - cplx(0, 2) * x.dense()) < 1e-14);
  CHECK(max_abs(SparseOperator::identity(3).dense() - Matrix::Identity(3, 3)) == 0.0);
}

TEST_CASE("duplicate entries are summed and zeros dropped") {
  const std::vector<SparseOperator::Entry> entries{{0, 1, 1.0}, {0, 1, 2.0}, {1, 0, 1.0}, {1, 0, -1.0}};
  const SparseOperator op(2, 2, entries);
  CHECK(op.nnz() == 1);
  CHECK(op.coeff(0, 1) == cplx(3.0));
}

TEST_CASE("kron indexes as i_x * dim(y) + i_y") {
  const FockSpace f(Statistics::bosonic, 1, 2);
  const auto c = creation_op(f, 0);
  const auto id = SparseOperator::identity(f.dim());
  const Matrix k = kron(c, id).dense();
  Matrix expected = Matrix::Zero(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int b = 0; b < 3; ++b) expected(i * 3 + b, j * 3 + b) = c.dense()(i, j);
  CHECK(max_abs(k - expected) == 0.0);
}

TEST_CASE("product space lifts commute across species") {
  const ProductSpace p(FockSpace(Statistics::fermionic, 2, 2), FockSpace(Statistics::fermionic, 2, 2));
  const auto a = p.lift_a(creation_op(p.a(), 1));
  const auto b = p.lift_b(creation_op(p.b(), 0));
  CHECK(commutator(a, b).max_abs() < 1e-15);
  const Vector vac = p.vacuum();
  CHECK(vac.norm() == 1.0);
  CHECK(vac(0) == cplx(1.0));
}

TEST_CASE("bipartite reshape is row-major over a-index") {
  Vector v(6);
  for (int i = 0; i < 6; ++i) v(i) = double(i);
  const Matrix m = bipartite_reshape(StateVector::on_product(2, 3, v));
  CHECK(m(1, 2) == cplx(5.0));
  CHECK(m(0, 1) == cplx(1.0));
  CHECK_THROWS_AS(bipartite_reshape(StateVector::on_space(v)), UsageError);
  CHECK_THROWS(StateVector::on_product(4, 2, v));
}

TEST_CASE("normalization of state vectors") {
  Vector v(2);
  v << 3.0, 4.0;
  const auto s = StateVector::on_space(v).normalized();
  CHECK(s.is_normalized());
  CHECK(s.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)StateVector::on_space(Vector::Zero(2)).normalized(), ValidationError);
}

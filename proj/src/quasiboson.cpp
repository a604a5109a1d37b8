// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "qboson/quasiboson.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <numeric>

#include "qboson/errors.hpp"

namespace qboson {

namespace {

constexpr double kDropThreshold = 1e-10;
constexpr double kNilpotencyThreshold = 1e-12;

// All degree tuples of length `modes` with total ≤ n_max, graded by total and
// then lexicographic with larger leading exponents first.
std::vector<std::vector<int>> degree_tuples(std::size_t modes, int n_max) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(modes, 0);
  auto fill = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == modes) {
      current[i] = remaining;
      out.push_back(current);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      current[i] = k;
      self(self, i + 1, remaining - k);
    }
  };
  for (int total = 0; total <= n_max; ++total) fill(fill, 0, total);
  return out;
}

int species_capacity(const FockSpace& s) { return s.is_complete() ? INT_MAX : s.max_quanta(); }

}  // namespace

SparseOperator quasiboson_creation(const ProductSpace& space, const Matrix& phi) {
  const int d_a = space.a().n_modes();
  const int d_b = space.b().n_modes();
  if (phi.rows() != d_a || phi.cols() != d_b) {
    throw ParameterError("quasiboson_creation: Φ is " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
                         " but the spaces have " + std::to_string(d_a) + " and " + std::to_string(d_b) + " modes");
  }
  std::vector<std::vector<SparseOperator::Entry>> a_dag;
  std::vector<std::vector<SparseOperator::Entry>> b_dag;
  for (int mu = 0; mu < d_a; ++mu) a_dag.push_back(creation_op(space.a(), mu).entries());
  for (int nu = 0; nu < d_b; ++nu) b_dag.push_back(creation_op(space.b(), nu).entries());

  const std::size_t dim_b = space.b().dim();
  std::vector<SparseOperator::Entry> entries;
  for (int mu = 0; mu < d_a; ++mu) {
    for (int nu = 0; nu < d_b; ++nu) {
      const cplx c = phi(mu, nu);
      if (c == cplx(0.0)) continue;
      for (const auto& ea : a_dag[static_cast<std::size_t>(mu)]) {
        for (const auto& eb : b_dag[static_cast<std::size_t>(nu)]) {
          entries.push_back({ea.row * dim_b + eb.row, ea.col * dim_b + eb.col, c * ea.value * eb.value});
        }
      }
    }
  }
  return SparseOperator(space.dim(), space.dim(), entries);
}

QuasibosonSystem::QuasibosonSystem(PhiFamily family, int max_quanta_a, int max_quanta_b)
    : family_(std::move(family)),
      space_(FockSpace(family_.statistics, family_.d_a, max_quanta_a),
             FockSpace(family_.statistics, family_.d_b, max_quanta_b)) {
  for (const auto& phi : family_.matrices) {
    creation_.push_back(quasiboson_creation(space_, phi.entries));
    annihilation_.push_back(creation_.back().adjoint());
  }
}

int QuasibosonSystem::exact_degree() const noexcept {
  return std::min(species_capacity(space_.a()), species_capacity(space_.b()));
}

Vector QuasibosonSystem::power_on_vacuum(std::size_t alpha, int p) const {
  Vector v = space_.vacuum();
  for (int k = 0; k < p; ++k) v = creation(alpha) * v;
  return v;
}

SparseOperator deviation_operator(const QuasibosonSystem& system, std::size_t alpha, std::size_t beta) {
  const auto& phis = system.family().matrices;
  if (alpha >= phis.size() || beta >= phis.size()) throw ParameterError("deviation_operator: mode label out of range");
  const Matrix& pa = phis[alpha].entries;
  const Matrix& pb = phis[beta].entries;
  const Matrix coeff_a = pb * pa.adjoint();  // [μ', μ]
  const Matrix coeff_b = pa.adjoint() * pb;  // [ν, ν']

  const auto& sa = system.space().a();
  const auto& sb = system.space().b();
  SparseOperator bilinear_a(sa.dim(), sa.dim());
  for (int mu_p = 0; mu_p < sa.n_modes(); ++mu_p) {
    const auto up = creation_op(sa, mu_p);
    for (int mu = 0; mu < sa.n_modes(); ++mu) {
      if (coeff_a(mu_p, mu) == cplx(0.0)) continue;
      bilinear_a = bilinear_a + coeff_a(mu_p, mu) * (up * annihilation_op(sa, mu));
    }
  }
  SparseOperator bilinear_b(sb.dim(), sb.dim());
  for (int nu_p = 0; nu_p < sb.n_modes(); ++nu_p) {
    const auto up = creation_op(sb, nu_p);
    for (int nu = 0; nu < sb.n_modes(); ++nu) {
      if (coeff_b(nu, nu_p) == cplx(0.0)) continue;
      bilinear_b = bilinear_b + coeff_b(nu, nu_p) * (up * annihilation_op(sb, nu));
    }
  }
  return system.space().lift_a(bilinear_a) + system.space().lift_b(bilinear_b);
}

double vacuum_power_norm(const QuasibosonSystem& system, std::size_t alpha, int n) {
  if (n < 0) throw ParameterError("vacuum_power_norm: n must be >= 0");
  if (n > system.exact_degree()) throw ParameterError("vacuum_power_norm: cutoff too small for n");
  Vector v = system.power_on_vacuum(alpha, n);
  for (int k = 0; k < n; ++k) v = system.annihilation(alpha) * v;
  return v(0).real();
}

QuasibosonSpan quasiboson_span(const QuasibosonSystem& system, int n_max) {
  if (n_max < 0) throw ParameterError("quasiboson_span: n_max must be >= 0");
  if (n_max > system.exact_degree()) {
    throw ParameterError("quasiboson_span: constituent cutoffs hold only " + std::to_string(system.exact_degree()) +
                         " quasibosons, degree " + std::to_string(n_max) + " requested");
  }
  const std::size_t modes = system.n_modes();
  QuasibosonSpan span;
  span.max_degree = n_max;

  std::map<std::vector<int>, Vector> raw;
  for (const auto& t : degree_tuples(modes, n_max)) {
    const auto first = std::find_if(t.begin(), t.end(), [](int k) { return k > 0; });
    Vector v;
    if (first == t.end()) {
      v = system.space().vacuum();
    } else {
      auto parent = t;
      const auto gamma = static_cast<std::size_t>(first - t.begin());
      --parent[gamma];
      v = system.creation(gamma) * raw.at(parent);
    }
    raw.emplace(t, v);

    const double norm = v.norm();
    if (norm < kDropThreshold) {
      ++span.dropped;
      continue;
    }
    Vector u = v / norm;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : span.basis) u -= b.state * b.state.dot(u);
    }
    const double residual = u.norm();
    if (residual < kDropThreshold) {
      ++span.dropped;
      continue;
    }
    span.basis.push_back({t, u / residual});
  }
  return span;
}

std::vector<std::string> RealizationReport::failures() const {
  std::vector<std::string> out;
  if (!(cross_mode < tolerance)) out.emplace_back("cross_mode_commutator");
  if (!(ladder < tolerance)) out.emplace_back("number_ladder");
  if (!(structure < tolerance)) out.emplace_back("structure_function");
  if (!(deviation_identity < tolerance)) out.emplace_back("deviation_identity");
  return out;
}

RealizationReport verify_realization(const QuasibosonSystem& system, int n_max, double tolerance) {
  if (system.exact_degree() < n_max + 1) {
    throw ParameterError("verify_realization: constituent cutoffs must hold n_max + 1 = " + std::to_string(n_max + 1) +
                         " quanta per species");
  }
  RealizationReport rep;
  rep.n_max = n_max;
  rep.tolerance = tolerance;

  const auto span = quasiboson_span(system, n_max);
  rep.span_dim = span.basis.size();
  const std::size_t modes = system.n_modes();
  const auto spec = system.deformation();
  const double eps = spec.epsilon();

  std::vector<std::vector<SparseOperator>> deviation(modes);
  for (std::size_t a = 0; a < modes; ++a) {
    for (std::size_t b = 0; b < modes; ++b) deviation[a].push_back(deviation_operator(system, a, b));
  }
  auto phi_step = [&](int n) { return to_double(structure_function(n + 1, spec) - structure_function(n, spec)); };

  // N_α on the span: Σ_t t_α |v_t⟩⟨v_t|.
  auto number_op = [&](std::size_t alpha, const Vector& w) {
    Vector out = Vector::Zero(w.size());
    for (const auto& b : span.basis) out += static_cast<double>(b.degrees[alpha]) * b.state * b.state.dot(w);
    return out;
  };

  for (const auto& v : span.basis) {
    const int total = std::accumulate(v.degrees.begin(), v.degrees.end(), 0);
    for (std::size_t a = 0; a < modes; ++a) {
      const Vector a_v = system.annihilation(a) * v.state;
      for (std::size_t b = 0; b < modes; ++b) {
        const Vector comm = system.annihilation(a) * (system.creation(b) * v.state) - system.creation(b) * a_v;
        const Vector dev = comm - (a == b ? v.state : Vector::Zero(v.state.size())) + eps * (deviation[a][b] * v.state);
        rep.deviation_identity = std::max(rep.deviation_identity, dev.norm());
        if (a != b) {
          rep.cross_mode = std::max(rep.cross_mode, comm.norm());
        } else {
          const Vector diff = comm - phi_step(v.degrees[a]) * v.state;
          rep.structure = std::max(rep.structure, diff.norm());
        }
      }
      if (total < n_max) {
        const Vector up = system.creation(a) * v.state;
        const double k = v.degrees[a];
        rep.ladder = std::max(rep.ladder, (number_op(a, up) - (k + 1.0) * up).norm());
      }
      const double k = v.degrees[a];
      rep.ladder = std::max(rep.ladder, (number_op(a, a_v) - (k - 1.0) * a_v).norm());
    }
  }

  // Fermionic species that are complete never truncate, and a fermionic
  // product can hold at most min(d_a, d_b) pairs.
  int search = system.exact_degree();
  if (search == INT_MAX) search = std::min(system.family().d_a, system.family().d_b) + 1;
  rep.nilpotency_search = search;
  for (std::size_t a = 0; a < modes; ++a) {
    std::optional<int> order;
    Vector w = system.space().vacuum();
    for (int p = 1; p <= search; ++p) {
      w = system.creation(a) * w;
      if (w.norm() < kNilpotencyThreshold) {
        order = p;
        break;
      }
    }
    rep.nilpotency.push_back(order);
  }
  return rep;
}

}  // namespace qboson

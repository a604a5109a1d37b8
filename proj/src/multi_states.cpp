// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "qboson/multi_states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qboson/entanglement.hpp"
#include "qboson/errors.hpp"
#include "qboson/quasiboson.hpp"

namespace qboson {

namespace {

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

int total_occupation(const OccupationConfig& config) {
  return std::accumulate(config.begin(), config.end(), 0, [](int s, const auto& kv) { return s + kv.second; });
}

// Merges duplicate configurations and strips zero occupations.
std::map<OccupationConfig, cplx> canonical_amplitudes(const Wavefunction& psi) {
  std::map<OccupationConfig, cplx> out;
  for (const auto& amp : psi.amplitudes) {
    OccupationConfig config;
    for (const auto& [label, k] : amp.config) {
      if (k != 0) config.emplace(label, k);
    }
    out[config] += amp.value;
  }
  return out;
}

void check_coherent(const CoherentParams& p) {
  if (p.m < 1) throw ParameterError("coherent state: m must be >= 1");
  if (!std::isfinite(std::abs(p.amplitude))) throw ParameterError("coherent state: amplitude must be finite");
}

}  // namespace

void Wavefunction::check_configs() const {
  const std::set<ModeLabel> known(modes.begin(), modes.end());
  if (known.size() != modes.size()) throw ParameterError("wavefunction: duplicate mode labels");
  for (const auto& amp : amplitudes) {
    for (const auto& [label, k] : amp.config) {
      if (!known.contains(label)) throw ParameterError("wavefunction: unknown mode label '" + label + "'");
      if (k < 0) throw ParameterError("wavefunction: negative occupation for mode '" + label + "'");
      if (deformation.statistics == Statistics::fermionic && k > deformation.m) {
        throw DomainError("wavefunction: occupation " + std::to_string(k) + " of mode '" + label +
                          "' exceeds m = " + std::to_string(deformation.m) + " (A† is nilpotent of order m+1)");
      }
    }
  }
}

double Wavefunction::norm_squared() const {
  double total = 0.0;
  for (const auto& [config, value] : canonical_amplitudes(*this)) {
    Rational weight = 1;
    for (const auto& [label, k] : config) weight *= phi_factorial(k, deformation);
    total += std::norm(value) * to_double(weight);
  }
  return total;
}

BigInt multiplicity(int m, int occupation, Statistics statistics) {
  if (m < 1) throw ParameterError("multiplicity: m must be >= 1");
  if (occupation < 0) throw ParameterError("multiplicity: occupation must be >= 0");
  if (statistics == Statistics::fermionic) {
    if (occupation > m) {
      throw DomainError("multiplicity: fermionic occupation " + std::to_string(occupation) + " exceeds m = " +
                        std::to_string(m));
    }
    return binomial(m, occupation);
  }
  return binomial(m + occupation - 1, m - 1);
}

Measures general_state_measures(const Wavefunction& psi) {
  psi.check_configs();
  const double norm = psi.norm_squared();
  if (std::abs(norm - 1.0) > 1e-8) {
    throw ValidationError("wavefunction is not normalized: Σ|Ψ|²Πφ(m_γ)! = " + std::to_string(norm));
  }
  const int m = psi.deformation.m;
  double sum_fourth = 0.0;
  double entropy = 0.0;
  for (const auto& [config, value] : canonical_amplitudes(psi)) {
    if (value == cplx(0.0)) continue;
    // |Λ|² = |Ψ|² m^{-Σk} Π (k!)², repeated Π N_m^k times.
    BigInt numerator = 1;
    BigInt count = 1;
    BigInt denominator = 1;
    for (const auto& [label, k] : config) {
      const BigInt kf = factorial(k);
      numerator *= kf * kf;
      count *= multiplicity(m, k, psi.deformation.statistics);
      for (int i = 0; i < k; ++i) denominator *= m;
    }
    const double lambda_sq = std::norm(value) * to_double(Rational(numerator, denominator));
    const double n = to_double(count);
    sum_fourth += n * lambda_sq * lambda_sq;
    if (lambda_sq > 0.0) entropy -= n * lambda_sq * std::log(lambda_sq);
  }
  return {1.0 / sum_fourth, entropy};
}

Measures fock_state_measures(int m, int occupation, Statistics statistics) {
  const double k = to_double(multiplicity(m, occupation, statistics));
  return {k, std::log(k)};
}

Measures distinct_modes_measures(int m, int n) {
  if (m < 1 || n < 1) throw ParameterError("distinct_modes_measures: m and n must be >= 1");
  return {std::pow(static_cast<double>(m), n), n * std::log(static_cast<double>(m))};
}

Wavefunction fock_wavefunction(int m, int occupation, Statistics statistics) {
  const DeformationSpec spec(statistics, m);
  multiplicity(m, occupation, statistics);  // domain check
  const double amp = 1.0 / std::sqrt(to_double(phi_factorial(occupation, spec)));
  OccupationConfig config;
  if (occupation > 0) config.emplace("0", occupation);
  return {spec, {"0"}, {{config, cplx(amp)}}};
}

Wavefunction distinct_modes_wavefunction(int m, int n, Statistics statistics) {
  if (n < 1) throw ParameterError("distinct_modes_wavefunction: n must be >= 1");
  Wavefunction psi{DeformationSpec(statistics, m), {}, {}};
  OccupationConfig config;
  for (int i = 0; i < n; ++i) {
    psi.modes.push_back(std::to_string(i));
    config.emplace(std::to_string(i), 1);
  }
  psi.amplitudes.push_back({config, cplx(1.0)});
  return psi;
}

// ---------------------------------------------------------------------------
// Coherent state (bosonic constituents only)

CoherentNormalization coherent_normalization(const CoherentParams& p) {
  check_coherent(p);
  const double a = std::norm(p.amplitude);
  const int m = p.m;
  const double z = 2.0 * std::sqrt(static_cast<double>(m)) * std::abs(p.amplitude);

  CoherentNormalization out;
  if (z == 0.0) {
    out.value = 1.0;
  } else {
    const double bracket = std::tgamma(static_cast<double>(m)) * bessel_i(m - 1, z, p.series) / std::pow(0.5 * z, m - 1);
    out.value = 1.0 / std::sqrt(bracket);
  }

  const DeformationSpec spec(Statistics::bosonic, m);
  const auto series = sum_series(
      [&](int n, double prev) { return n == 0 ? 1.0 : prev * a / to_double(structure_function(n, spec)); }, p.series);
  out.series = 1.0 / std::sqrt(series.value);
  out.terms = series.terms;

  if (std::abs(out.value - out.series) > 1e-10 * out.value) {
    throw ConvergenceError("coherent normalization: Bessel and series routes disagree");
  }
  return out;
}

CoherentSchmidtNumber coherent_K(const CoherentParams& p) {
  const auto norm = coherent_normalization(p);
  const double a = std::norm(p.amplitude);
  const double m = p.m;
  const double c4 = std::pow(norm.value, -4);

  CoherentSchmidtNumber out;
  const auto hyper = hyper_0f3_series(m, m, m, a * a * m * m, p.series);
  out.value = c4 / hyper.value;
  out.terms = hyper.terms;

  const double log_am = std::log(a * m);
  const auto direct = sum_series(
      [&](int n, double) {
        if (n == 0) return 1.0;
        if (a == 0.0) return 0.0;
        return std::exp(-3.0 * log_binomial(n + p.m - 1, n) + 2.0 * n * log_am - 4.0 * std::lgamma(n + 1.0));
      },
      p.series);
  out.direct = c4 / direct.value;

  if (std::abs(out.value - out.direct) > 1e-10 * out.value) {
    throw ConvergenceError("coherent Schmidt number: hypergeometric and direct routes disagree");
  }
  return out;
}

SeriesResult coherent_entropy(const CoherentParams& p) {
  const auto norm = coherent_normalization(p);
  const double a = std::norm(p.amplitude);
  if (a == 0.0) return {0.0, 1};
  const double c2 = norm.value * norm.value;
  const double am = a * p.m;
  double x = 1.0;  // (am)^n / ((n!)² C(n+m-1, n))
  return sum_series(
      [&](int n, double) {
        if (n > 0) x *= am / (static_cast<double>(n) * static_cast<double>(n + p.m - 1));
        const double w = c2 * x;
        if (w == 0.0) return 0.0;
        return w * (log_binomial(n + p.m - 1, n) - std::log(w));
      },
      p.series);
}

TruncatedCoherent truncated_coherent_wavefunction(const CoherentParams& p, double tail_tolerance) {
  const auto norm = coherent_normalization(p);
  const DeformationSpec spec(Statistics::bosonic, p.m);
  const double a = std::norm(p.amplitude);

  // Schmidt weights w_n = C̃² |𝒜|^{2n} / φ(n)! until they stop contributing.
  std::vector<double> weights;
  sum_series(
      [&](int n, double prev) {
        const double w = n == 0 ? norm.value * norm.value : prev * a / to_double(structure_function(n, spec));
        weights.push_back(w);
        return w;
      },
      p.series);

  std::vector<double> tail(weights.size() + 1, 0.0);
  for (std::size_t n = weights.size(); n-- > 0;) tail[n] = tail[n + 1] + weights[n];

  TruncatedCoherent out;
  std::size_t cut = 0;
  while (cut + 1 < weights.size() && tail[cut + 1] >= tail_tolerance) ++cut;
  out.max_occupation = static_cast<int>(cut);
  out.tail = tail[cut + 1];

  out.psi.deformation = spec;
  out.psi.modes = {"0"};
  cplx power = 1.0;
  for (std::size_t n = 0; n <= cut; ++n) {
    const int k = static_cast<int>(n);
    OccupationConfig config;
    if (k > 0) config.emplace("0", k);
    out.psi.amplitudes.push_back({config, norm.value * power / to_double(phi_factorial(k, spec))});
    power *= p.amplitude;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Explicit-construction oracle

OracleResult oracle_measures(const Wavefunction& psi, const OracleOptions& options) {
  psi.check_configs();
  const auto amplitudes = canonical_amplitudes(psi);
  const int m = psi.deformation.m;
  const int modes = std::max<int>(1, static_cast<int>(psi.modes.size()));

  int max_total = 0;
  for (const auto& [config, value] : amplitudes) max_total = std::max(max_total, total_occupation(config));

  OracleResult out;
  out.d_a = options.d_a > 0 ? options.d_a : modes * m;
  out.d_b = options.d_b > 0 ? options.d_b : modes * m;
  out.cutoff_a = options.cutoff_a > 0 ? options.cutoff_a : max_total;
  out.cutoff_b = options.cutoff_b > 0 ? options.cutoff_b : max_total;
  if (out.cutoff_a < max_total || out.cutoff_b < max_total) {
    throw ParameterError("oracle_measures: cutoffs below the largest total occupation " + std::to_string(max_total));
  }
  if (psi.deformation.statistics == Statistics::fermionic && (out.cutoff_a > out.d_a || out.cutoff_b > out.d_b)) {
    throw ParameterError("oracle_measures: fermionic cutoff exceeds the number of constituent modes");
  }

  const FamilyConfig family_config{out.d_a, out.d_b, m, modes, psi.deformation.statistics,
                                   options.u1, options.u2, options.block};
  const QuasibosonSystem system(build_phi_family(family_config), out.cutoff_a, out.cutoff_b);
  out.product_dim = system.space().dim();

  std::map<ModeLabel, std::size_t> mode_index;
  for (std::size_t i = 0; i < psi.modes.size(); ++i) mode_index.emplace(psi.modes[i], i);

  Vector state = Vector::Zero(static_cast<Eigen::Index>(system.space().dim()));
  for (const auto& [config, value] : amplitudes) {
    Vector v = system.space().vacuum();
    for (const auto& [label, k] : config) {
      for (int i = 0; i < k; ++i) v = system.creation(mode_index.at(label)) * v;
    }
    state += value * v;
  }
  if (state.norm() == 0.0) throw ValidationError("oracle_measures: wavefunction builds the zero vector");

  const auto sv = StateVector::on_product(system.space().a().dim(), system.space().b().dim(), state).normalized();
  const auto rep = report(schmidt_decompose(bipartite_reshape(sv)).spectrum);
  out.measures = {rep.schmidt_number, rep.entropy};
  out.rank = rep.rank;
  return out;
}

}  // namespace qboson

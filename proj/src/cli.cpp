// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "qboson/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "qboson/entanglement.hpp"
#include "qboson/errors.hpp"
#include "qboson/multi_states.hpp"
#include "qboson/phi_family.hpp"
#include "qboson/quasiboson.hpp"
#include "qboson/serialize.hpp"

namespace qboson::cli {

namespace {

constexpr double kVerifyTolerance = 1e-10;
constexpr double kOracleTolerance = 1e-8;

struct Settings {
  std::string command;
  std::string format;
  std::string output;
  std::optional<double> tolerance;
  int epsilon = 1;
  int m = 0;
  int d_a = 0;
  int d_b = 0;
  int modes = 1;
  std::optional<std::uint64_t> seed;
  int n_max = 3;
  int cutoff = 0;
  std::string phi_path;
  std::string save_phi_path;
  int occupation = 1;
  int n = 2;
  double amp = 0.0;
  double phase = 0.0;
  double tail = 1e-12;
  bool with_oracle = false;
  bool bits = false;
  std::string input;
  bool renormalize = false;
  std::string family;
  std::string m_grid;
  std::string occupation_grid = "1";
  std::string n_grid = "2";
  std::string amp_grid = "0";
};

struct Outcome {
  Json record;
  std::vector<std::string> failures;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError("invalid JSON in '" + origin + "': " + e.what());
  }
}

UnitarySpec unitary_for(const Settings& s) {
  return s.seed ? UnitarySpec::seeded(*s.seed) : UnitarySpec::identity();
}

Json seed_json(const Settings& s) { return s.seed ? Json(*s.seed) : Json(nullptr); }

void add_entropy(Json& record, double nats, bool bits) {
  record["S_nats"] = nats;
  if (bits) record["S_bits"] = nats / std::numbers::ln2;
}

Json oracle_block(const Measures& closed, const OracleResult& oracle, double tol, bool bits) {
  Json j{{"K", oracle.measures.schmidt_number}};
  add_entropy(j, oracle.measures.entropy, bits);
  j["rank"] = oracle.rank;
  j["d_a"] = oracle.d_a;
  j["d_b"] = oracle.d_b;
  j["cutoff_a"] = oracle.cutoff_a;
  j["cutoff_b"] = oracle.cutoff_b;
  j["product_dim"] = oracle.product_dim;
  const double dk = std::abs(closed.schmidt_number - oracle.measures.schmidt_number);
  const double ds = std::abs(closed.entropy - oracle.measures.entropy);
  j["delta_K"] = dk;
  j["delta_S"] = ds;
  j["tolerance"] = tol;
  j["passed"] = dk < tol && ds < tol;
  return j;
}

void note_oracle(Outcome& o) {
  if (o.record.contains("oracle") && !o.record["oracle"]["passed"].get<bool>()) o.failures.emplace_back("oracle_agreement");
}

OracleOptions oracle_options(const Settings& s) {
  OracleOptions opt;
  opt.d_a = s.d_a;
  opt.d_b = s.d_b;
  opt.cutoff_a = s.cutoff;
  opt.cutoff_b = s.cutoff;
  opt.u1 = opt.u2 = opt.block = unitary_for(s);
  return opt;
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_verify(const Settings& s) {
  const double tol = s.tolerance.value_or(kVerifyTolerance);
  PhiFamily family;
  Json provenance;
  if (!s.phi_path.empty()) {
    family = phi_family_from_json(parse_json_text(read_file(s.phi_path), s.phi_path));
    provenance = Json{{"source", s.phi_path}};
  } else {
    if (s.m < 1) throw ParameterError("verify: --m must be >= 1");
    const int d_a = s.d_a > 0 ? s.d_a : s.modes * s.m;
    const int d_b = s.d_b > 0 ? s.d_b : s.modes * s.m;
    const auto u = unitary_for(s);
    family = build_phi_family({d_a, d_b, s.m, s.modes, statistics_from_epsilon(s.epsilon), u, u, u});
    provenance = Json{{"source", "constructed"}, {"seed", seed_json(s)}};
  }
  if (!s.save_phi_path.empty()) {
    std::ofstream f(s.save_phi_path);
    if (!f) throw ParameterError("cannot write '" + s.save_phi_path + "'");
    f << dump_json(to_json(family));
  }

  const bool fermionic = family.statistics == Statistics::fermionic;
  const int cutoff = s.cutoff > 0 ? s.cutoff : s.n_max + 1;
  const int cut_a = fermionic ? family.d_a : cutoff;
  const int cut_b = fermionic ? family.d_b : cutoff;

  const auto validation = validate_family(family, tol);
  const QuasibosonSystem system(family, cut_a, cut_b);
  const auto realization = verify_realization(system, s.n_max, tol);

  Outcome o;
  for (const auto& f : validation.failures()) o.failures.push_back(f);
  for (const auto& f : realization.failures()) o.failures.push_back(f);
  Json failed = Json::array();
  for (const auto& f : o.failures) failed.push_back(f);
  o.record = Json{{"command", "verify"},
                  {"epsilon", epsilon(family.statistics)},
                  {"m", family.m},
                  {"f", to_double(family.f())},
                  {"d_a", family.d_a},
                  {"d_b", family.d_b},
                  {"modes", family.n_modes()},
                  {"n_max", s.n_max},
                  {"cutoff_a", cut_a},
                  {"cutoff_b", cut_b},
                  {"provenance", provenance},
                  {"family_validation", to_json(validation)},
                  {"realization", to_json(realization)},
                  {"passed", o.failures.empty()},
                  {"failed_checks", failed}};
  return o;
}

Json single_record(const Settings& s) {
  if (s.m < 1) throw ParameterError("--m must be >= 1");
  const int d_a = s.d_a > 0 ? s.d_a : s.m;
  const int d_b = s.d_b > 0 ? s.d_b : s.m;
  const auto u = unitary_for(s);
  const auto family = build_phi_family({d_a, d_b, s.m, 1, statistics_from_epsilon(s.epsilon), u, u, u});
  const auto spectrum = schmidt_of_phi(family.matrices.front());
  const auto rep = report(spectrum);

  Json record{{"command", "single"}, {"epsilon", s.epsilon}, {"m", s.m}, {"f", to_double(family.f())},
              {"d_a", d_a},          {"d_b", d_b},           {"seed", seed_json(s)}};
  record["lambdas"] = spectrum.lambdas;
  record["rank"] = rep.rank;
  record["K"] = rep.schmidt_number;
  record["P"] = rep.purity;
  add_entropy(record, rep.entropy, s.bits);
  record["C"] = rep.concurrence;
  record["tolerances"] = {{"rank_relative", kRankThreshold}};

  if (s.with_oracle) {
    const double tol = s.tolerance.value_or(kOracleTolerance);
    const QuasibosonSystem system(family, 1, 1);
    const auto state = StateVector::on_product(system.space().a().dim(), system.space().b().dim(),
                                               system.creation(0) * system.space().vacuum());
    const auto check = reduced_density_check(state, tol);
    const Measures closed{rep.schmidt_number, rep.entropy};
    const double dk = std::abs(check.spectrum_route.schmidt_number - closed.schmidt_number);
    const double ds = std::abs(check.spectrum_route.entropy - closed.entropy);
    Json oracle{{"K", check.spectrum_route.schmidt_number}};
    add_entropy(oracle, check.spectrum_route.entropy, s.bits);
    oracle["rank"] = check.spectrum_route.rank;
    oracle["K_density_a"] = check.schmidt_number_a;
    oracle["K_density_b"] = check.schmidt_number_b;
    oracle["S_density_a"] = check.entropy_a;
    oracle["S_density_b"] = check.entropy_b;
    oracle["uniform_mixture_residual"] = check.uniform_mixture_residual;
    oracle["delta_K"] = dk;
    oracle["delta_S"] = ds;
    oracle["tolerance"] = tol;
    oracle["passed"] = dk < tol && ds < tol && check.consistent();
    record["oracle"] = oracle;
  }
  return record;
}

Json fock_record(const Settings& s) {
  const auto stats = statistics_from_epsilon(s.epsilon);
  if (s.m < 1) throw ParameterError("--m must be >= 1");
  const auto closed = fock_state_measures(s.m, s.occupation, stats);
  Json record{{"command", "fock"}, {"epsilon", s.epsilon}, {"m", s.m}, {"occupation", s.occupation},
              {"K", closed.schmidt_number}};
  add_entropy(record, closed.entropy, s.bits);
  if (s.with_oracle) {
    const auto oracle = oracle_measures(fock_wavefunction(s.m, s.occupation, stats), oracle_options(s));
    record["oracle"] = oracle_block(closed, oracle, s.tolerance.value_or(kOracleTolerance), s.bits);
  }
  return record;
}

Json modes_record(const Settings& s) {
  const auto closed = distinct_modes_measures(s.m, s.n);
  Json record{{"command", "modes"}, {"epsilon", s.epsilon}, {"m", s.m}, {"n", s.n}, {"K", closed.schmidt_number}};
  add_entropy(record, closed.entropy, s.bits);
  if (s.with_oracle) {
    const auto psi = distinct_modes_wavefunction(s.m, s.n, statistics_from_epsilon(s.epsilon));
    record["oracle"] = oracle_block(closed, oracle_measures(psi, oracle_options(s)),
                                    s.tolerance.value_or(kOracleTolerance), s.bits);
  }
  return record;
}

Json coherent_record(const Settings& s) {
  if (s.epsilon != -1) throw ParameterError("coherent states exist only for bosonic constituents (--epsilon -1)");
  if (s.m < 1) throw ParameterError("--m must be >= 1");
  if (!(s.amp >= 0.0)) throw ParameterError("--amp must be >= 0");
  const CoherentParams p{std::polar(s.amp, s.phase), s.m, {}};
  const auto norm = coherent_normalization(p);
  const auto k = coherent_K(p);
  const auto entropy = coherent_entropy(p);

  Json record{{"command", "coherent"},
              {"epsilon", -1},
              {"m", s.m},
              {"amplitude", {{"re", p.amplitude.real()}, {"im", p.amplitude.imag()}}},
              {"abs_amplitude", s.amp},
              {"z", 2.0 * std::sqrt(static_cast<double>(s.m)) * s.amp},
              {"C_tilde", norm.value},
              {"C_tilde_series", norm.series},
              {"K", k.value},
              {"K_direct", k.direct}};
  add_entropy(record, entropy.value, s.bits);
  record["series_terms"] = {{"normalization", norm.terms}, {"hypergeometric", k.terms}, {"entropy", entropy.terms}};

  if (s.with_oracle) {
    const auto truncated = truncated_coherent_wavefunction(p, s.tail);
    auto opt = oracle_options(s);
    const auto oracle = oracle_measures(truncated.psi, opt);
    Json block = oracle_block({k.value, entropy.value}, oracle, s.tolerance.value_or(kOracleTolerance), s.bits);
    block["truncation_n"] = truncated.max_occupation;
    block["truncated_tail"] = truncated.tail;
    record["oracle"] = block;
  }
  return record;
}

Json state_record(const Settings& s) {
  if (s.input.empty()) throw ParameterError("state: --input is required");
  auto psi = wavefunction_from_json(parse_json_text(read_file(s.input), s.input));
  psi.check_configs();
  const double norm = psi.norm_squared();
  if (s.renormalize) {
    if (norm == 0.0) throw ValidationError("wavefunction has zero norm");
    for (auto& a : psi.amplitudes) a.value /= std::sqrt(norm);
  }
  const auto closed = general_state_measures(psi);
  Json record{{"command", "state"},     {"input", s.input},      {"epsilon", psi.deformation.epsilon()},
              {"m", psi.deformation.m}, {"modes", psi.modes},    {"input_norm_squared", norm},
              {"renormalized", s.renormalize}, {"K", closed.schmidt_number}};
  add_entropy(record, closed.entropy, s.bits);
  if (s.with_oracle) {
    record["oracle"] = oracle_block(closed, oracle_measures(psi, oracle_options(s)),
                                    s.tolerance.value_or(kOracleTolerance), s.bits);
  }
  return record;
}

Outcome cmd_measures(const std::string& family, const Settings& s) {
  Outcome o;
  if (family == "single") {
    o.record = single_record(s);
  } else if (family == "fock") {
    o.record = fock_record(s);
  } else if (family == "modes") {
    o.record = modes_record(s);
  } else if (family == "coherent") {
    o.record = coherent_record(s);
  } else if (family == "state") {
    o.record = state_record(s);
  } else {
    throw ParameterError("unknown state family '" + family + "'");
  }
  note_oracle(o);
  return o;
}

// ---------------------------------------------------------------------------
// Scan

struct ScanPoint {
  Settings settings;
};

std::vector<std::string> scan_columns(const std::string& family, bool bits) {
  std::vector<std::string> cols;
  if (family == "single") cols = {"m", "f", "rank", "K", "P", "S_nats", "C"};
  if (family == "fock") cols = {"epsilon", "m", "occupation", "K", "S_nats"};
  if (family == "modes") cols = {"m", "n", "K", "S_nats"};
  if (family == "coherent") cols = {"m", "abs_amplitude", "C_tilde", "K", "S_nats"};
  if (bits) cols.emplace_back("S_bits");
  cols.emplace_back("error");
  return cols;
}

Json scan_row(const std::string& family, const Settings& s) {
  Json row;
  try {
    const Json full = cmd_measures(family, s).record;
    for (const auto& col : scan_columns(family, s.bits)) {
      if (full.contains(col)) row[col] = full.at(col);
    }
  } catch (const std::exception& e) {
    // Identify the grid point even when the evaluation failed.
    row["m"] = s.m;
    if (family == "fock") {
      row["epsilon"] = s.epsilon;
      row["occupation"] = s.occupation;
    }
    if (family == "modes") row["n"] = s.n;
    if (family == "coherent") row["abs_amplitude"] = s.amp;
    row["error"] = e.what();
  }
  return row;
}

Outcome cmd_scan(const Settings& s, std::vector<Json>& rows, std::vector<std::string>& header) {
  static const std::vector<std::string> families{"single", "fock", "modes", "coherent"};
  if (std::find(families.begin(), families.end(), s.family) == families.end()) {
    throw ParameterError("scan: --family must be one of single, fock, modes, coherent");
  }
  std::vector<Settings> points;
  const auto ms = parse_int_grid(s.m_grid);
  for (int m : ms) {
    Settings p = s;
    p.m = m;
    p.with_oracle = false;
    if (s.family == "fock") {
      for (int k : parse_int_grid(s.occupation_grid)) {
        p.occupation = k;
        points.push_back(p);
      }
    } else if (s.family == "modes") {
      for (int n : parse_int_grid(s.n_grid)) {
        p.n = n;
        points.push_back(p);
      }
    } else if (s.family == "coherent") {
      for (double a : parse_real_grid(s.amp_grid)) {
        p.amp = a;
        points.push_back(p);
      }
    } else {
      points.push_back(p);
    }
  }

  // Points are independent; evaluate them concurrently and keep grid order.
  rows.assign(points.size(), Json());
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < points.size(); begin += workers) {
    const std::size_t end = std::min(points.size(), begin + workers);
    std::vector<std::future<Json>> jobs;
    for (std::size_t i = begin; i < end; ++i) {
      jobs.push_back(std::async(std::launch::async, [&, i] { return scan_row(s.family, points[i]); }));
    }
    for (std::size_t i = begin; i < end; ++i) rows[i] = jobs[i - begin].get();
  }

  header = scan_columns(s.family, s.bits);
  Outcome o;
  std::size_t errors = 0;
  for (const auto& row : rows) errors += row.contains("error") ? 1 : 0;
  if (errors > 0) o.failures.push_back(std::to_string(errors) + " scan point(s) failed");
  return o;
}

// ---------------------------------------------------------------------------
// Output

std::string render_table(const std::vector<std::pair<std::string, Json>>& cells) {
  std::size_t width = 0;
  for (const auto& [k, v] : cells) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : cells) {
    os << k << std::string(width - k.size() + 2, ' ');
    if (v.is_number_float()) {
      os << format_double(v.get<double>());
    } else if (v.is_string()) {
      os << v.get<std::string>();
    } else {
      os << v.dump();
    }
    os << '\n';
  }
  return os.str();
}

std::string render_record(const Json& record, const std::string& format) {
  if (format == "json") return dump_json(record);
  const auto cells = flatten_scalars(record);
  if (format == "csv") {
    std::vector<std::string> header;
    Json row = Json::object();
    for (const auto& [k, v] : cells) {
      header.push_back(k);
      row[k] = v;
    }
    return to_csv(header, {row});
  }
  return render_table(cells);
}

std::string render_rows(const std::vector<Json>& rows, const std::vector<std::string>& header,
                        const std::string& format) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(r);
    return dump_json(arr);
  }
  if (format == "csv") return to_csv(header, rows);
  std::string out;
  for (const auto& r : rows) out += render_table(flatten_scalars(r)) + "\n";
  return out;
}

void write_output(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(s.output, std::ios::binary);
  if (!f) throw ParameterError("cannot write '" + s.output + "'");
  f << text;
}

void add_common(CLI::App* sub, Settings& s) {
  sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  sub->add_option("--output", s.output, "Write results to this file instead of stdout");
  sub->add_option("--tolerance", s.tolerance, "Check tolerance")->check(CLI::PositiveNumber);
}

void add_state_flags(CLI::App* sub, Settings& s) {
  sub->add_option("--epsilon", s.epsilon, "+1 fermionic constituents, -1 bosonic");
  sub->add_option("--m", s.m, "Block size m (f = 2/m)");
  sub->add_option("--da", s.d_a, "Modes of species a (default: modes * m)");
  sub->add_option("--db", s.d_b, "Modes of species b (default: modes * m)");
  sub->add_option("--seed", s.seed, "Seed for Haar-random unitaries (identity when absent)");
  sub->add_option("--cutoff", s.cutoff, "Total-quanta cutoff per species for explicit construction");
  sub->add_option("--occupation", s.occupation, "Occupation of the Fock state");
  sub->add_option("--n", s.n, "Number of distinct occupied modes");
  sub->add_option("--amp", s.amp, "Coherent amplitude |A|");
  sub->add_option("--phase", s.phase, "Coherent amplitude phase (radians)");
  sub->add_option("--tail", s.tail, "Tail weight dropped when truncating a coherent state")->check(CLI::PositiveNumber);
  sub->add_option("--input", s.input, "Wavefunction JSON file");
  sub->add_flag("--renormalize", s.renormalize, "Rescale the input wavefunction to unit norm");
  sub->add_flag("--bits", s.bits, "Also report the entropy in bits");
  add_common(sub, s);
}

}  // namespace

std::vector<int> parse_int_grid(const std::string& spec) {
  std::vector<int> out;
  if (spec.empty()) return out;
  try {
    if (spec.find(',') != std::string::npos) {
      std::stringstream ss(spec);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
      return out;
    }
    std::vector<int> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(std::stoi(item));
    if (parts.size() == 1) return parts;
    if (parts.size() < 2 || parts.size() > 3) throw ParameterError("bad grid '" + spec + "'");
    const int step = parts.size() == 3 ? parts[2] : 1;
    if (step <= 0) throw ParameterError("grid step must be positive in '" + spec + "'");
    for (int v = parts[0]; v <= parts[1]; v += step) out.push_back(v);
    return out;
  } catch (const std::logic_error&) {
    throw ParameterError("bad integer grid '" + spec + "'");
  }
}

std::vector<double> parse_real_grid(const std::string& spec) {
  std::vector<double> out;
  if (spec.empty()) return out;
  try {
    if (spec.find(',') != std::string::npos) {
      std::stringstream ss(spec);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
      return out;
    }
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
    if (parts.size() == 1) return parts;
    if (parts.size() < 2 || parts.size() > 3) throw ParameterError("bad grid '" + spec + "'");
    const double step = parts.size() == 3 ? parts[2] : 1.0;
    if (!(step > 0.0)) throw ParameterError("grid step must be positive in '" + spec + "'");
    if (parts[1] < parts[0]) return out;
    // Index-based so that accumulated rounding never adds or loses a point.
    const auto count = static_cast<long>(std::floor((parts[1] - parts[0]) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) {
      // Strip accumulated rounding so 0:1:0.1 yields 0.3, not 0.30000000000000004.
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.15g", parts[0] + static_cast<double>(i) * step);
      out.push_back(std::strtod(buf, nullptr));
    }
    return out;
  } catch (const std::logic_error&) {
    throw ParameterError("bad real grid '" + spec + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Quasiboson toolkit: Φ families, deformed-oscillator checks and entanglement measures",
               "qboson"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Check the deformed-oscillator realization of a Φ family");
  verify->add_option("--epsilon", s.epsilon, "+1 fermionic constituents, -1 bosonic");
  verify->add_option("--m", s.m, "Block size m (f = 2/m)");
  verify->add_option("--da", s.d_a, "Modes of species a (default: modes * m)");
  verify->add_option("--db", s.d_b, "Modes of species b (default: modes * m)");
  verify->add_option("--modes", s.modes, "Number of quasiboson modes");
  verify->add_option("--seed", s.seed, "Seed for Haar-random unitaries (identity when absent)");
  verify->add_option("--n-max", s.n_max, "Largest quasiboson degree of the checked span");
  verify->add_option("--cutoff", s.cutoff, "Bosonic total-quanta cutoff per species (default n-max + 1)");
  verify->add_option("--phi", s.phi_path, "Load the Φ family from JSON instead of constructing it");
  verify->add_option("--save-phi", s.save_phi_path, "Write the Φ family as JSON");
  add_common(verify, s);

  std::vector<CLI::App*> measure_cmds;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"single", "Entanglement of one quasiboson"},
           {"fock", "Fock state of one quasiboson mode"},
           {"modes", "Quasibosons in distinct modes"},
           {"coherent", "Coherent state of one quasiboson mode (bosonic constituents)"},
           {"state", "Arbitrary multi-quasiboson wavefunction from JSON"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_state_flags(sub, s);
    sub->add_flag("--with-oracle", s.with_oracle, "Cross-check against explicit Fock-space construction");
    measure_cmds.push_back(sub);
  }

  auto* oracle = app.add_subcommand("oracle", "Closed forms and explicit construction side by side");
  oracle->add_option("--family", s.family, "single, fock, modes, coherent or state")
      ->required()
      ->check(CLI::IsMember({"single", "fock", "modes", "coherent", "state"}));
  add_state_flags(oracle, s);

  auto* scan = app.add_subcommand("scan", "Sweep a closed-form family over a parameter grid (CSV)");
  scan->add_option("--family", s.family, "single, fock, modes or coherent")->required();
  scan->add_option("--epsilon", s.epsilon, "+1 fermionic constituents, -1 bosonic");
  scan->add_option("--m", s.m_grid, "Grid of m values, e.g. 1:10")->required();
  scan->add_option("--occupation", s.occupation_grid, "Grid of Fock occupations");
  scan->add_option("--n", s.n_grid, "Grid of distinct-mode counts");
  scan->add_option("--amp", s.amp_grid, "Grid of coherent amplitudes, e.g. 0:1:0.1");
  scan->add_flag("--bits", s.bits, "Also report the entropy in bits");
  add_common(scan, s);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "qboson: " << e.what() << '\n';
    return kUsageError;
  }

  // Coherent states need bosonic constituents; make that the default there.
  const auto coherent_requested = [&] {
    if (oracle->parsed()) return s.family == "coherent" && oracle->count("--epsilon") == 0;
    if (scan->parsed()) return s.family == "coherent" && scan->count("--epsilon") == 0;
    for (auto* sub : measure_cmds) {
      if (sub->parsed()) return sub->get_name() == "coherent" && sub->count("--epsilon") == 0;
    }
    return false;
  };
  if (coherent_requested()) s.epsilon = -1;
  if (s.format.empty()) s.format = scan->parsed() ? "csv" : "json";

  try {
    Outcome outcome;
    std::string text;
    if (verify->parsed()) {
      outcome = cmd_verify(s);
      text = render_record(outcome.record, s.format);
    } else if (scan->parsed()) {
      std::vector<Json> rows;
      std::vector<std::string> header;
      outcome = cmd_scan(s, rows, header);
      text = render_rows(rows, header, s.format);
    } else if (oracle->parsed()) {
      s.with_oracle = true;
      outcome = cmd_measures(s.family, s);
      text = render_record(outcome.record, s.format);
    } else {
      for (auto* sub : measure_cmds) {
        if (sub->parsed()) outcome = cmd_measures(sub->get_name(), s);
      }
      text = render_record(outcome.record, s.format);
    }
    write_output(s, text, out);
    for (const auto& f : outcome.failures) err << "qboson: check failed: " << f << '\n';
    return outcome.failures.empty() ? kSuccess : kCheckFailed;
  } catch (const ParameterError& e) {
    err << "qboson: parameter error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "qboson: parameter error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "qboson: usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "qboson: validation failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const ConvergenceError& e) {
    err << "qboson: convergence failure: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const nlohmann::json::exception& e) {
    err << "qboson: parameter error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "qboson: error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace qboson::cli

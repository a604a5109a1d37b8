// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "qboson/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qboson/errors.hpp"

namespace qboson {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // Keep floats recognizable as floats on re-read.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace {

void dump(const Json& v, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump(item, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump(item, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
  }
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) {
    const double x = v.get<double>();
    return std::isfinite(x) ? format_double(x) : "";
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + '"';
  }
  return v.dump();
}

Statistics statistics_from_json(const Json& j) {
  if (!j.contains("epsilon")) throw ParameterError("missing \"epsilon\"");
  return statistics_from_epsilon(j.at("epsilon").get<int>());
}

}  // namespace

std::string dump_json(const Json& value, int indent) {
  std::string out;
  dump(value, indent, 0, out);
  out += '\n';
  return out;
}

Json to_json(const FockSpace& space) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < space.dim(); ++i) basis.push_back(space.occupation(i));
  return Json{{"statistics", std::string(to_string(space.statistics()))},
              {"epsilon", epsilon(space.statistics())},
              {"n_modes", space.n_modes()},
              {"max_quanta", space.max_quanta()},
              {"dim", space.dim()},
              {"basis", basis}};
}

Json to_json(const SparseOperator& op) {
  Json entries = Json::array();
  for (const auto& e : op.entries()) entries.push_back(Json::array({e.row, e.col, e.value.real(), e.value.imag()}));
  return Json{{"dim_out", op.dim_out()}, {"dim_in", op.dim_in()}, {"entries", entries}};
}

Json to_json(const Matrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rr = Json::array();
    Json ri = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return Json{{"re", re}, {"im", im}};
}

Matrix matrix_from_json(const Json& j) {
  try {
    const auto& re = j.at("re");
    const auto rows = static_cast<Eigen::Index>(re.size());
    const auto cols = rows > 0 ? static_cast<Eigen::Index>(re.at(0).size()) : 0;
    const Json* im = j.contains("im") ? &j.at("im") : nullptr;
    if (im != nullptr && static_cast<Eigen::Index>(im->size()) != rows) throw ParameterError("matrix re/im shapes differ");
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (static_cast<Eigen::Index>(re.at(i).size()) != cols ||
          (im != nullptr && static_cast<Eigen::Index>(im->at(i).size()) != cols)) {
        throw ParameterError("matrix rows have different lengths");
      }
      for (Eigen::Index j2 = 0; j2 < cols; ++j2) {
        const double y = im != nullptr ? im->at(i).at(j2).get<double>() : 0.0;
        m(i, j2) = cplx(re.at(i).at(j2).get<double>(), y);
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed matrix: ") + e.what());
  }
}

Json to_json(const UnitarySpec& spec) {
  Json j{{"kind", std::string(to_string(spec.kind))}};
  if (spec.kind == UnitarySpec::Kind::seeded_random) j["seed"] = spec.seed;
  if (spec.kind == UnitarySpec::Kind::explicit_matrix && spec.matrix.size() > 0) j["matrix"] = to_json(spec.matrix);
  return j;
}

UnitarySpec unitary_spec_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "identity") return UnitarySpec::identity();
  if (kind == "seeded-random") return UnitarySpec::seeded(j.at("seed").get<std::uint64_t>());
  if (kind == "explicit") {
    UnitarySpec spec;
    spec.kind = UnitarySpec::Kind::explicit_matrix;
    if (j.contains("matrix")) spec.matrix = matrix_from_json(j.at("matrix"));
    return spec;
  }
  throw ParameterError("unknown unitary kind '" + kind + "'");
}

Json to_json(const PhiFamily& family) {
  Json matrices = Json::array();
  for (const auto& phi : family.matrices) {
    Json entry{{"label", phi.label}, {"block_start", phi.block_start}};
    const Json m = to_json(phi.entries);
    entry["re"] = m.at("re");
    entry["im"] = m.at("im");
    matrices.push_back(entry);
  }
  return Json{{"epsilon", epsilon(family.statistics)},
              {"m", family.m},
              {"f", to_double(family.f())},
              {"d_a", family.d_a},
              {"d_b", family.d_b},
              {"n_modes", family.n_modes()},
              {"unitaries", {{"u1", to_json(family.u1)}, {"u2", to_json(family.u2)}, {"block", to_json(family.block)}}},
              {"matrices", matrices}};
}

PhiFamily phi_family_from_json(const Json& j) {
  try {
    const Statistics stats = statistics_from_json(j);
    const int m = j.at("m").get<int>();
    UnitarySpec u1;
    UnitarySpec u2;
    UnitarySpec block;
    if (j.contains("unitaries")) {
      const auto& u = j.at("unitaries");
      if (u.contains("u1")) u1 = unitary_spec_from_json(u.at("u1"));
      if (u.contains("u2")) u2 = unitary_spec_from_json(u.at("u2"));
      if (u.contains("block")) block = unitary_spec_from_json(u.at("block"));
    }
    if (!j.contains("matrices")) {
      const FamilyConfig config{j.at("d_a").get<int>(), j.at("d_b").get<int>(), m, j.at("n_modes").get<int>(),
                                stats, u1, u2, block};
      return build_phi_family(config);
    }
    std::vector<Matrix> mats;
    for (const auto& entry : j.at("matrices")) mats.push_back(matrix_from_json(entry));
    PhiFamily family = family_from_matrices(stats, m, std::move(mats));
    const auto& entries = j.at("matrices");
    for (std::size_t i = 0; i < family.matrices.size(); ++i) {
      if (entries.at(i).contains("label")) family.matrices[i].label = entries.at(i).at("label").get<int>();
      if (entries.at(i).contains("block_start")) {
        family.matrices[i].block_start = entries.at(i).at("block_start").get<int>();
      }
    }
    if (j.contains("unitaries")) {
      family.u1 = u1;
      family.u2 = u2;
      family.block = block;
    }
    return family;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed Φ family JSON: ") + e.what());
  }
}

Json to_json(const ValidationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures()) failures.push_back(f);
  return Json{{"orthonormality", {{"residual", r.orthonormality}, {"passed", r.orthonormality_ok()}}},
              {"cross_mode_cubic", {{"residual", r.cross_mode}, {"passed", r.cross_mode_ok()}}},
              {"cubic_deformation", {{"residual", r.cubic}, {"passed", r.cubic_ok()}}},
              {"deformation_parameter", {{"f_hat", r.f_hat}, {"deviation", r.f_deviation}, {"passed", r.f_ok()}}},
              {"tolerance", r.tolerance},
              {"passed", r.passed()},
              {"failures", failures}};
}

Json to_json(const RealizationReport& r) {
  Json nil = Json::array();
  for (const auto& order : r.nilpotency) nil.push_back(order ? Json(*order) : Json(nullptr));
  Json failures = Json::array();
  for (const auto& f : r.failures()) failures.push_back(f);
  return Json{{"n_max", r.n_max},
              {"span_dim", r.span_dim},
              {"cross_mode_commutator", {{"residual", r.cross_mode}, {"passed", r.cross_mode < r.tolerance}}},
              {"number_ladder", {{"residual", r.ladder}, {"passed", r.ladder < r.tolerance}}},
              {"structure_function", {{"residual", r.structure}, {"passed", r.structure < r.tolerance}}},
              {"deviation_identity", {{"residual", r.deviation_identity}, {"passed", r.deviation_identity < r.tolerance}}},
              {"nilpotency_order", nil},
              {"nilpotency_search_limit", r.nilpotency_search},
              {"tolerance", r.tolerance},
              {"passed", r.passed()},
              {"failures", failures}};
}

Json to_json(const EntanglementReport& r) {
  return Json{{"rank", r.rank},
              {"K", r.schmidt_number},
              {"P", r.purity},
              {"S_nats", r.entropy},
              {"C", r.concurrence},
              {"tolerances", {{"rank_relative", kRankThreshold}}}};
}

Json to_json(const Wavefunction& psi) {
  Json amps = Json::array();
  for (const auto& a : psi.amplitudes) {
    Json config = Json::object();
    for (const auto& [label, k] : a.config) config[label] = k;
    amps.push_back(Json{{"config", config}, {"re", a.value.real()}, {"im", a.value.imag()}});
  }
  return Json{{"epsilon", psi.deformation.epsilon()}, {"m", psi.deformation.m}, {"modes", psi.modes}, {"amplitudes", amps}};
}

Wavefunction wavefunction_from_json(const Json& j) {
  try {
    Wavefunction psi;
    psi.deformation = DeformationSpec(statistics_from_json(j), j.at("m").get<int>());
    const auto label_of = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto& label : j.at("modes")) psi.modes.push_back(label_of(label));
    for (const auto& a : j.at("amplitudes")) {
      Amplitude amp;
      for (const auto& [label, k] : a.at("config").items()) amp.config[label] = k.get<int>();
      amp.value = cplx(a.value("re", 0.0), a.value("im", 0.0));
      psi.amplitudes.push_back(std::move(amp));
    }
    return psi;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed wavefunction JSON: ") + e.what());
  }
}

std::vector<std::pair<std::string, Json>> flatten_scalars(const Json& object) {
  std::vector<std::pair<std::string, Json>> out;
  auto walk = [&](auto&& self, const Json& node, const std::string& prefix) -> void {
    for (const auto& [key, item] : node.items()) {
      const std::string name = prefix.empty() ? key : prefix + "_" + key;
      if (item.is_object()) {
        self(self, item, name);
      } else if (!item.is_array()) {
        out.emplace_back(name, item);
      }
    }
  };
  walk(walk, object, "");
  return out;
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<Json>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) os << ',';
      if (row.contains(header[i])) os << csv_cell(row.at(header[i]));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qboson

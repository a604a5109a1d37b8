// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file serialize.hpp
 * @brief JSON and CSV forms of spaces, families, reports and wavefunctions.
 *
 * Output goes through dump_json so that floats are always written with 17
 * significant digits; identical values give byte-identical files.
 */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qboson/entanglement.hpp"
#include "qboson/fock.hpp"
#include "qboson/multi_states.hpp"
#include "qboson/phi_family.hpp"
#include "qboson/quasiboson.hpp"

namespace qboson {

using Json = nlohmann::ordered_json;

/// Deterministic text form. Non-finite numbers become null.
std::string dump_json(const Json& value, int indent = 2);

/// Formats a double with 17 significant digits.
std::string format_double(double x);

Json to_json(const FockSpace& space);
Json to_json(const SparseOperator& op);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const UnitarySpec& spec);
UnitarySpec unitary_spec_from_json(const Json& j);

Json to_json(const PhiFamily& family);
/// Uses the stored matrices when present; otherwise rebuilds from
/// dimensions, "n_modes" and unitary specs.
PhiFamily phi_family_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const RealizationReport& report);
Json to_json(const EntanglementReport& report);

Json to_json(const Wavefunction& psi);
Wavefunction wavefunction_from_json(const Json& j);

/// Scalar leaves of a JSON object in insertion order; nested objects are
/// flattened with "parent_child" keys, arrays are skipped.
std::vector<std::pair<std::string, Json>> flatten_scalars(const Json& object);

/// CSV text for the given header and rows; missing cells are empty.
std::string to_csv(const std::vector<std::string>& header, const std::vector<Json>& rows);

}  // namespace qboson

/*
   Copyright 2026 The lrpencil Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file json_io.hpp
 * @brief JSON documents for fields, pencils, structures, verdicts,
 *        certificates and sweep reports.
 *
 * Scalars and polynomials are written as strings ("3/4", "s^2 + 1") so
 * rationals stay exact. Readers throw InputError with a message naming the
 * offending member, e.g. "A0[1][0]: expected a scalar".
 */

#ifndef LRP_JSON_IO_HPP
#define LRP_JSON_IO_HPP

#include <json.hpp>

#include "lrp/oracle.hpp"
#include "lrp/synth.hpp"

namespace lrp {

using json = nlohmann::ordered_json;

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

/// Reads the "field" member of a document.
FieldSpec document_field(const json& doc);

template <FieldElement K>
json matrix_to_json(const Matrix<K>& m);
template <FieldElement K>
Matrix<K> matrix_from_json(const json& j, const FieldSpec& f, std::size_t rows, std::size_t cols,
                           const std::string& where);

/// {"field", "n", "A0", "A1"}
template <FieldElement K>
json pencil_to_json(const Pencil<K>& a);
template <FieldElement K>
Pencil<K> pencil_from_json(const json& doc, const FieldSpec& f);

/// Array of {"gamma", "q"}.
template <FieldElement K>
json structure_entries_to_json(const WeierstrassStructure<K>& s);
template <FieldElement K>
WeierstrassStructure<K> structure_entries_from_json(const json& j, const FieldSpec& f, const std::string& where);

/// {"field", "structure"}
template <FieldElement K>
json structure_to_json(const WeierstrassStructure<K>& s);
/// Reads the "structure" member; analysis documents qualify as well.
template <FieldElement K>
WeierstrassStructure<K> structure_from_json(const json& doc, const FieldSpec& f);

/// True if the document carries a "structure" member instead of A0/A1.
bool is_structure_document(const json& doc);

template <FieldElement K>
json point_to_json(const SpectralPoint<K>& p);
template <FieldElement K>
SpectralPoint<K> point_from_json(const json& j, const FieldSpec& f, const std::string& where);

template <FieldElement K>
json route_to_json(const Route<K>& r);
template <FieldElement K>
Route<K> route_from_json(const json& j, const FieldSpec& f, const std::string& where = "route");

template <FieldElement K>
json verdict_to_json(const Verdict<K>& v);

template <FieldElement K>
json certificate_to_json(const Certificate<K>& c);
template <FieldElement K>
Certificate<K> certificate_from_json(const json& doc, const FieldSpec& f);

/// Structure, determinant and per-point multiplicity data.
template <FieldElement K>
json analysis_to_json(const WeierstrassStructure<K>& s);

json sweep_to_json(const SweepReport& rep);

}  // namespace lrp

#endif

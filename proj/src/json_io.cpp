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

#include "lrp/json_io.hpp"

#include "lrp/factor.hpp"
#include "lrp/poly_io.hpp"

namespace lrp {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

std::uint64_t read_count(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        fail(where, "expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

std::string text_of(const json& j, const std::string& where, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
    fail(where, std::string("expected ") + what);
}

template <FieldElement K>
K scalar_from_json(const json& j, const FieldSpec& f, const std::string& where) {
    const std::string t = text_of(j, where, "a scalar");
    try {
        return parse_scalar<K>(f, t);
    } catch (const InputError& e) {
        fail(where, e.what());
    }
}

template <FieldElement K>
Poly<K> poly_from_json(const json& j, const FieldSpec& f, const std::string& where) {
    const std::string t = text_of(j, where, "a polynomial");
    try {
        return parse_poly<K>(f, t);
    } catch (const InputError& e) {
        fail(where, e.what());
    }
}

template <FieldElement K>
void check_field(const json& doc, const FieldSpec& f) {
    require_kind<K>(f);
    if (!(document_field(doc) == f)) throw FieldMismatch();
}

const char* side_name(Side s) { return s == Side::Lower ? "lower" : "upper"; }

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Feasible: return "feasible";
        case VerdictKind::Infeasible: return "infeasible";
        case VerdictKind::Unknown: return "unknown";
    }
    return "unknown";
}

json sizes_to_json(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

}  // namespace

json field_to_json(const FieldSpec& f) {
    if (!f.is_finite()) return {{"kind", "rationals"}};
    return {{"kind", "prime"}, {"p", f.characteristic()}};
}

FieldSpec field_from_json(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "rationals" || s == "Q") return FieldSpec::rationals();
        fail("field", "unknown field '" + s + "'");
    }
    const auto kind = text_of(member(j, "kind", "field"), "field.kind", "a field kind");
    if (kind == "rationals") return FieldSpec::rationals();
    if (kind != "prime") fail("field.kind", "expected 'rationals' or 'prime'");
    const std::uint64_t p = read_count(member(j, "p", "field"), "field.p");
    try {
        return FieldSpec::prime(p);
    } catch (const InputError& e) {
        fail("field.p", e.what());
    }
}

FieldSpec document_field(const json& doc) { return field_from_json(member(doc, "field", "")); }

bool is_structure_document(const json& doc) { return doc.is_object() && doc.contains("structure"); }

template <FieldElement K>
json matrix_to_json(const Matrix<K>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <FieldElement K>
Matrix<K> matrix_from_json(const json& j, const FieldSpec& f, std::size_t rows, std::size_t cols,
                           const std::string& where) {
    if (!j.is_array() || j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
    Matrix<K> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string wi = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols) fail(wi, "expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = scalar_from_json<K>(j[i][k], f, wi + "[" + std::to_string(k) + "]");
    }
    return m;
}

template <FieldElement K>
json pencil_to_json(const Pencil<K>& a) {
    return {{"field", field_to_json(a.field())}, {"n", a.n()}, {"A0", matrix_to_json(a.A0)}, {"A1", matrix_to_json(a.A1)}};
}

template <FieldElement K>
Pencil<K> pencil_from_json(const json& doc, const FieldSpec& f) {
    check_field<K>(doc, f);
    const std::size_t n = read_count(member(doc, "n", ""), "n");
    return Pencil<K>(matrix_from_json<K>(member(doc, "A0", ""), f, n, n, "A0"),
                     matrix_from_json<K>(member(doc, "A1", ""), f, n, n, "A1"));
}

template <FieldElement K>
json structure_entries_to_json(const WeierstrassStructure<K>& s) {
    json a = json::array();
    for (const auto& e : s.entries()) a.push_back({{"gamma", to_string(e.gamma)}, {"q", e.q}});
    return a;
}

template <FieldElement K>
WeierstrassStructure<K> structure_entries_from_json(const json& j, const FieldSpec& f, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of {gamma, q}");
    std::vector<HomogeneousFactor<K>> e;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string wi = where + "[" + std::to_string(i) + "]";
        e.push_back({poly_from_json<K>(member(j[i], "gamma", wi), f, join(wi, "gamma")),
                     read_count(member(j[i], "q", wi), join(wi, "q"))});
    }
    try {
        return WeierstrassStructure<K>(f, std::move(e));
    } catch (const InputError& ex) {
        fail(where, ex.what());
    }
}

template <FieldElement K>
json structure_to_json(const WeierstrassStructure<K>& s) {
    return {{"field", field_to_json(s.field())}, {"structure", structure_entries_to_json(s)}};
}

template <FieldElement K>
WeierstrassStructure<K> structure_from_json(const json& doc, const FieldSpec& f) {
    check_field<K>(doc, f);
    return structure_entries_from_json<K>(member(doc, "structure", ""), f, "structure");
}

template <FieldElement K>
json point_to_json(const SpectralPoint<K>& p) {
    if (p.is_infinite()) return "inf";
    return to_string(*p.factor);
}

template <FieldElement K>
SpectralPoint<K> point_from_json(const json& j, const FieldSpec& f, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "inf") return SpectralPoint<K>::infinity();
    Poly<K> p = poly_from_json<K>(j, f, where);
    if (!p.is_monic() || !is_irreducible(p)) fail(where, "expected 'inf' or a monic irreducible polynomial");
    return SpectralPoint<K>{std::move(p)};
}

template <FieldElement K>
json route_to_json(const Route<K>& r) {
    switch (r.kind) {
        case RouteKind::Equal: return {{"kind", "equal"}};
        case RouteKind::Search: return {{"kind", "search"}};
        case RouteKind::UnspectralPoint:
            return {{"kind", "unspectral_point"}, {"c", r.point.is_infinite() ? "inf" : r.point.value->to_string()}};
        case RouteKind::Deflation:
            return {{"kind", "deflation"}, {"point", point_to_json(r.lambda0)}, {"inner", route_to_json(*r.inner)}};
    }
    return nullptr;
}

template <FieldElement K>
Route<K> route_from_json(const json& j, const FieldSpec& f, const std::string& where) {
    const auto kind = text_of(member(j, "kind", where), join(where, "kind"), "a route kind");
    if (kind == "equal") return Route<K>::equal();
    if (kind == "search") return Route<K>::search();
    if (kind == "unspectral_point") {
        const json& c = member(j, "c", where);
        if (c.is_string() && c.get<std::string>() == "inf") return Route<K>::unspectral({});
        return Route<K>::unspectral({scalar_from_json<K>(c, f, join(where, "c"))});
    }
    if (kind == "deflation")
        return Route<K>::deflation(point_from_json<K>(member(j, "point", where), f, join(where, "point")),
                                   route_from_json<K>(member(j, "inner", where), f, join(where, "inner")));
    fail(join(where, "kind"), "unknown route kind '" + kind + "'");
}

template <FieldElement K>
json verdict_to_json(const Verdict<K>& v) {
    json j{{"verdict", verdict_name(v.kind)}, {"route", nullptr}, {"witness", nullptr}};
    if (v.route) j["route"] = route_to_json(*v.route);
    if (v.witness) j["witness"] = {{"index", v.witness->index}, {"side", side_name(v.witness->side)}};
    return j;
}

template <FieldElement K>
json certificate_to_json(const Certificate<K>& c) {
    json target;
    if (const auto* s = std::get_if<WeierstrassStructure<K>>(&c.target))
        target = {{"structure", structure_entries_to_json(*s)}};
    else
        target = {{"determinant", to_string(std::get<Poly<K>>(c.target))}};
    return {{"field", field_to_json(c.P.field())},
            {"n", c.P.n()},
            {"P0", matrix_to_json(c.P.A0)},
            {"P1", matrix_to_json(c.P.A1)},
            {"claimed_rank", c.claimed_rank},
            {"target", std::move(target)},
            {"route", route_to_json(c.route)},
            {"trials_used", c.trials_used}};
}

template <FieldElement K>
Certificate<K> certificate_from_json(const json& doc, const FieldSpec& f) {
    check_field<K>(doc, f);
    const std::size_t n = read_count(member(doc, "n", ""), "n");
    Pencil<K> p(matrix_from_json<K>(member(doc, "P0", ""), f, n, n, "P0"),
                matrix_from_json<K>(member(doc, "P1", ""), f, n, n, "P1"));
    const std::size_t rank = read_count(member(doc, "claimed_rank", ""), "claimed_rank");
    const json& t = member(doc, "target", "");
    Target<K> target = Poly<K>(f);
    if (t.is_object() && t.contains("structure"))
        target = structure_entries_from_json<K>(t["structure"], f, "target.structure");
    else
        target = poly_from_json<K>(member(t, "determinant", "target"), f, "target.determinant");
    Route<K> route = doc.contains("route") ? route_from_json<K>(doc["route"], f) : Route<K>::search();
    const std::uint64_t trials = doc.contains("trials_used") ? read_count(doc["trials_used"], "trials_used") : 0;
    return Certificate<K>{std::move(p), rank, std::move(target), std::move(route), trials};
}

template <FieldElement K>
json analysis_to_json(const WeierstrassStructure<K>& s) {
    const std::size_t n = s.n();
    json points = json::array();
    for (const auto& pt : spectrum(s)) {
        json mr = json::array();
        for (std::size_t r = 0; r <= n; ++r) mr.push_back(M_r(s, pt, r));
        const auto m = partial_multiplicities(s, pt);
        points.push_back({{"point", point_to_json(pt)},
                          {"multiplicities", sizes_to_json(m)},
                          {"weyr", sizes_to_json(weyr(m).parts())},
                          {"mu_a", mu_a(s, pt)},
                          {"mu_g", mu_g(s, pt)},
                          {"M_r", std::move(mr)}});
    }
    json total = json::array();
    for (std::size_t r = 0; r <= n; ++r) total.push_back(M_r_total(s, r));
    return {{"field", field_to_json(s.field())},
            {"n", n},
            {"structure", structure_entries_to_json(s)},
            {"det", to_string(finite_product(s))},
            {"points", std::move(points)},
            {"M_r_total", std::move(total)}};
}

json sweep_to_json(const SweepReport& rep) {
    json structures = json::array();
    for (const auto& s : rep.structures) structures.push_back(structure_entries_to_json(s));
    json cases = json::array();
    for (const auto& c : rep.cases) {
        json w = nullptr;
        if (c.witness) w = {{"P0", matrix_to_json(c.witness->A0)}, {"P1", matrix_to_json(c.witness->A1)}};
        cases.push_back({{"source", c.source},
                         {"target", c.target},
                         {"predicted", c.predicted},
                         {"found", c.found},
                         {"route", c.route ? route_to_json(*c.route) : json(nullptr)},
                         {"witness", std::move(w)},
                         {"witness_verified", c.witness_verified},
                         {"cascade", c.cascade}});
    }
    return {{"field", field_to_json(rep.field)},
            {"n", rep.n},
            {"r", rep.r},
            {"counts",
             {{"cases", rep.cases.size()},
              {"agreements", rep.agreements},
              {"necessity_violations", rep.necessity_violations},
              {"sufficiency_violations", rep.sufficiency_violations},
              {"open_found", rep.open_found},
              {"open_not_found", rep.open_not_found},
              {"cascade_violations", rep.cascade_violations},
              {"unverified_witnesses", rep.unverified_witnesses}}},
            {"structures", std::move(structures)},
            {"cases", std::move(cases)}};
}

#define LRP_INSTANTIATE(K)                                                                                    \
    template json matrix_to_json(const Matrix<K>&);                                                           \
    template Matrix<K> matrix_from_json(const json&, const FieldSpec&, std::size_t, std::size_t,              \
                                        const std::string&);                                                  \
    template json pencil_to_json(const Pencil<K>&);                                                           \
    template Pencil<K> pencil_from_json(const json&, const FieldSpec&);                                       \
    template json structure_entries_to_json(const WeierstrassStructure<K>&);                                  \
    template WeierstrassStructure<K> structure_entries_from_json(const json&, const FieldSpec&,               \
                                                                 const std::string&);                         \
    template json structure_to_json(const WeierstrassStructure<K>&);                                          \
    template WeierstrassStructure<K> structure_from_json(const json&, const FieldSpec&);                      \
    template json point_to_json(const SpectralPoint<K>&);                                                     \
    template SpectralPoint<K> point_from_json(const json&, const FieldSpec&, const std::string&);             \
    template json route_to_json(const Route<K>&);                                                             \
    template Route<K> route_from_json(const json&, const FieldSpec&, const std::string&);                     \
    template json verdict_to_json(const Verdict<K>&);                                                         \
    template json certificate_to_json(const Certificate<K>&);                                                 \
    template Certificate<K> certificate_from_json(const json&, const FieldSpec&);                             \
    template json analysis_to_json(const WeierstrassStructure<K>&);

LRP_INSTANTIATE(Rational)
LRP_INSTANTIATE(Zp)

}  // namespace lrp

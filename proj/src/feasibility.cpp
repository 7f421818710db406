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

#include "lrp/feasibility.hpp"

#include <algorithm>

#include "lrp/factor.hpp"

namespace lrp {

namespace {

template <FieldElement K>
void check_pair(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb) {
    if (!(sa.field() == sb.field())) throw FieldMismatch();
    if (sa.n() != sb.n()) throw InputError("structures have different sizes");
}

// Candidate points of F in search order; enough of them to exceed any root count.
template <FieldElement K>
std::vector<K> field_candidates(const FieldSpec& f, std::size_t roots) {
    std::vector<K> out;
    if (f.is_finite()) {
        for (std::uint32_t v = 0; v < f.characteristic(); ++v) out.push_back(K::make(f, v));
        return out;
    }
    out.push_back(K::make(f, 0));
    for (std::int64_t k = 1; out.size() <= roots; ++k) {
        out.push_back(K::make(f, k));
        out.push_back(K::make(f, -k));
    }
    return out;
}

}  // namespace

template <FieldElement K>
std::optional<InterlacingWitness> interlacing_violation(const WeierstrassStructure<K>& sa,
                                                        const WeierstrassStructure<K>& sb, std::size_t r) {
    check_pair(sa, sb);
    const auto rr = static_cast<std::ptrdiff_t>(std::min(r, sa.n() + 1));
    for (std::size_t i = 1; i <= sa.n(); ++i) {
        const auto ii = static_cast<std::ptrdiff_t>(i);
        const auto psi = sb.term(ii);
        if (!hif_divides(sa.term(ii - rr), psi)) return InterlacingWitness{i, Side::Lower};
        if (!hif_divides(psi, sa.term(ii + rr))) return InterlacingWitness{i, Side::Upper};
    }
    return std::nullopt;
}

template <FieldElement K>
bool check_interlacing(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb, std::size_t r) {
    return !interlacing_violation(sa, sb, r).has_value();
}

template <FieldElement K>
bool check_multiplicity_form(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb, std::size_t r) {
    check_pair(sa, sb);
    const std::size_t n = sa.n();
    for (const auto& pt : joint_points(sa, sb)) {
        const auto ma = detail::multiplicities(sa, pt);
        const auto mb = detail::multiplicities(sb, pt);
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t lower = i > r ? ma[i - r - 1] : 0;
            if (lower > mb[i - 1]) return false;
            if (i + r <= n && mb[i - 1] > ma[i + r - 1]) return false;
        }
    }
    return true;
}

template <FieldElement K>
bool check_weyr_form(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb, std::size_t r) {
    check_pair(sa, sb);
    for (const auto& pt : joint_points(sa, sb)) {
        const Partition wa = weyr(detail::multiplicities(sa, pt));
        const Partition wb = weyr(detail::multiplicities(sb, pt));
        const std::size_t len = std::max(wa.size(), wb.size());
        for (std::size_t i = 1; i <= len; ++i) {
            const std::size_t x = wa(i), y = wb(i);
            if ((x > y ? x - y : y - x) > r) return false;
        }
    }
    return true;
}

template <FieldElement K>
bool geometric_bound(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb, std::size_t r) {
    check_pair(sa, sb);
    for (const auto& pt : joint_points(sa, sb)) {
        const std::size_t x = weyr(detail::multiplicities(sa, pt))(1);
        const std::size_t y = weyr(detail::multiplicities(sb, pt))(1);
        if ((x > y ? x - y : y - x) > r) return false;
    }
    return true;
}

template <FieldElement K>
std::optional<FieldPoint<K>> find_unspectral_point(const WeierstrassStructure<K>& sa,
                                                   const WeierstrassStructure<K>& sb) {
    check_pair(sa, sb);
    const FieldPoint<K> inf{};
    if (!is_eigenvalue(sa, inf) && !is_eigenvalue(sb, inf)) return inf;
    for (auto& c : field_candidates<K>(sa.field(), 2 * sa.n())) {
        FieldPoint<K> pt{c};
        if (!is_eigenvalue(sa, pt) && !is_eigenvalue(sb, pt)) return pt;
    }
    return std::nullopt;
}

template <FieldElement K>
std::optional<FieldPoint<K>> find_unspectral_point(const WeierstrassStructure<K>& sa, const Poly<K>& p) {
    if (!(sa.field() == p.field())) throw FieldMismatch();
    if (p.is_zero()) throw InputError("target polynomial is zero");
    const FieldPoint<K> inf{};
    if (!is_eigenvalue(sa, inf) && *p.degree() == sa.n()) return inf;
    for (auto& c : field_candidates<K>(sa.field(), sa.n() + *p.degree())) {
        FieldPoint<K> pt{c};
        if (!is_eigenvalue(sa, pt) && !p(c).is_zero()) return pt;
    }
    return std::nullopt;
}

template <FieldElement K>
std::optional<Route<K>> sufficiency_hypothesis(const WeierstrassStructure<K>& sa,
                                               const WeierstrassStructure<K>& sb) {
    if (auto c = find_unspectral_point(sa, sb)) return Route<K>::unspectral(*c);
    for (const auto& pt : joint_points(sa, sb)) {
        const auto ma = detail::multiplicities(sa, pt);
        if (ma != detail::multiplicities(sb, pt)) continue;
        if (std::all_of(ma.begin(), ma.end(), [](std::size_t x) { return x == 0; })) continue;
        const auto split_a = split_at(sa, pt);
        const auto split_b = split_at(sb, pt);
        if (!(split_a.local == split_b.local)) throw InvariantViolation("shared multiplicities gave different blocks");
        if (split_a.rest == split_b.rest) return Route<K>::deflation(pt, Route<K>::equal());
        if (auto inner = sufficiency_hypothesis(split_a.rest, split_b.rest))
            return Route<K>::deflation(pt, std::move(*inner));
    }
    return std::nullopt;
}

template <FieldElement K>
Verdict<K> verdict(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb, std::size_t r) {
    check_pair(sa, sb);
    const auto witness = interlacing_violation(sa, sb, r);
    if (check_multiplicity_form(sa, sb, r) != !witness)
        throw InvariantViolation("interlacing and multiplicity forms disagree");
    if (check_interlacing(sb, sa, r) != !witness) throw InvariantViolation("interlacing is not symmetric");
    if (witness) return {VerdictKind::Infeasible, witness, std::nullopt};
    if (sa == sb) return {VerdictKind::Feasible, std::nullopt, Route<K>::equal()};
    if (auto route = sufficiency_hypothesis(sa, sb)) return {VerdictKind::Feasible, std::nullopt, std::move(route)};
    return {VerdictKind::Unknown, std::nullopt, std::nullopt};
}

template <FieldElement K>
Verdict<K> verdict(const Pencil<K>& a, const Pencil<K>& b, std::size_t r) {
    if (!(a.field() == b.field())) throw FieldMismatch();
    if (a.n() != b.n()) throw InputError("pencils have different sizes");
    return verdict(compute_structure(a), compute_structure(b), r);
}

template <FieldElement K>
bool check_placement(const WeierstrassStructure<K>& sa, const Poly<K>& p, std::size_t r) {
    if (!(sa.field() == p.field())) throw FieldMismatch();
    if (!p.is_monic()) throw InputError("target polynomial must be monic and nonzero");
    const std::size_t n = sa.n();
    if (*p.degree() > n) throw InputError("target polynomial has degree above the pencil size");
    r = std::min(r, n);
    Poly<K> head = Poly<K>::one(sa.field());
    for (std::size_t i = 0; i + r < n; ++i) head = head * sa[i].gamma;
    if (!divides(head, p)) return false;
    const auto inf = SpectralPoint<K>::infinity();
    return mu_a(sa, inf) - M_r(sa, inf, r) <= n - *p.degree();
}

template <FieldElement K>
std::pair<std::size_t, std::size_t> placement_bounds(const WeierstrassStructure<K>& sa, std::size_t r,
                                                     const SpectralPoint<K>& at) {
    const std::size_t low = mu_a(sa, at) - M_r(sa, at, r);
    return {low, low + M_r_total(sa, r)};
}

#define LRP_INSTANTIATE(K)                                                                                      \
    template std::optional<InterlacingWitness> interlacing_violation(const WeierstrassStructure<K>&,            \
                                                                     const WeierstrassStructure<K>&, std::size_t); \
    template bool check_interlacing(const WeierstrassStructure<K>&, const WeierstrassStructure<K>&, std::size_t); \
    template bool check_multiplicity_form(const WeierstrassStructure<K>&, const WeierstrassStructure<K>&,      \
                                          std::size_t);                                                        \
    template bool check_weyr_form(const WeierstrassStructure<K>&, const WeierstrassStructure<K>&, std::size_t); \
    template bool geometric_bound(const WeierstrassStructure<K>&, const WeierstrassStructure<K>&, std::size_t); \
    template std::optional<FieldPoint<K>> find_unspectral_point(const WeierstrassStructure<K>&,                 \
                                                                const WeierstrassStructure<K>&);               \
    template std::optional<FieldPoint<K>> find_unspectral_point(const WeierstrassStructure<K>&, const Poly<K>&); \
    template std::optional<Route<K>> sufficiency_hypothesis(const WeierstrassStructure<K>&,                     \
                                                            const WeierstrassStructure<K>&);                   \
    template Verdict<K> verdict(const WeierstrassStructure<K>&, const WeierstrassStructure<K>&, std::size_t);   \
    template Verdict<K> verdict(const Pencil<K>&, const Pencil<K>&, std::size_t);                               \
    template bool check_placement(const WeierstrassStructure<K>&, const Poly<K>&, std::size_t);                 \
    template std::pair<std::size_t, std::size_t> placement_bounds(const WeierstrassStructure<K>&, std::size_t,  \
                                                                  const SpectralPoint<K>&);

LRP_INSTANTIATE(Rational)
LRP_INSTANTIATE(Zp)

}  // namespace lrp

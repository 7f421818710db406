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

#include "lrp/structure.hpp"

#include <algorithm>
#include <functional>

#include "lrp/factor.hpp"

namespace lrp {

template <FieldElement K>
WeierstrassStructure<K>::WeierstrassStructure(FieldSpec f, std::vector<HomogeneousFactor<K>> entries)
    : field_(f), entries_(std::move(entries)) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (!(e.gamma.field() == field_)) throw FieldMismatch();
        if (!e.gamma.is_monic()) throw InputError("structure entry " + std::to_string(i + 1) + ": gamma is not monic");
        if (i > 0) {
            const auto& prev = entries_[i - 1];
            if (!divides(prev.gamma, e.gamma))
                throw InputError("structure entry " + std::to_string(i + 1) + ": gamma is not divisible by its predecessor");
            if (prev.q > e.q)
                throw InputError("structure entry " + std::to_string(i + 1) + ": q decreases");
        }
        total += *e.gamma.degree() + e.q;
    }
    if (total != entries_.size())
        throw InputError("structure degrees sum to " + std::to_string(total) + ", expected " +
                         std::to_string(entries_.size()));
}

template <FieldElement K>
std::optional<HomogeneousFactor<K>> WeierstrassStructure<K>::term(std::ptrdiff_t i) const {
    if (i < 1) return HomogeneousFactor<K>{Poly<K>::one(field_), 0};
    if (static_cast<std::size_t>(i) > entries_.size()) return std::nullopt;
    return entries_[static_cast<std::size_t>(i) - 1];
}

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition weyr(const std::vector<std::size_t>& m) {
    const std::size_t top = m.empty() ? 0 : *std::max_element(m.begin(), m.end());
    std::vector<std::size_t> w(top, 0);
    for (auto x : m)
        for (std::size_t i = 0; i < x; ++i) ++w[i];
    return Partition(std::move(w));
}

Partition weyr(const Partition& m) { return weyr(m.parts()); }

template <FieldElement K>
WeierstrassStructure<K> compute_structure(const Pencil<K>& a) {
    auto s = try_compute_structure(a);
    if (!s) throw InputError("pencil is singular");
    return std::move(*s);
}

template <FieldElement K>
std::optional<WeierstrassStructure<K>> try_compute_structure(const Pencil<K>& a) {
    const std::size_t n = a.n();
    const auto gammas = invariant_factors(a.matrix());
    if (gammas.size() < n) return std::nullopt;
    const auto rev = invariant_factors(reverse(a).matrix());
    if (rev.size() < n) throw InvariantViolation("reversed pencil lost rank");
    std::vector<HomogeneousFactor<K>> e;
    e.reserve(n);
    for (std::size_t i = 0; i < n; ++i) e.push_back({gammas[i], lowest_degree(rev[i])});
    return WeierstrassStructure<K>(a.field(), std::move(e));
}

template <FieldElement K>
bool hif_divides(const std::optional<HomogeneousFactor<K>>& a, const std::optional<HomogeneousFactor<K>>& b) {
    if (!b) return true;
    if (!a) return false;
    return a->q <= b->q && divides(a->gamma, b->gamma);
}

namespace detail {

template <FieldElement K>
std::vector<std::size_t> multiplicities(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at) {
    std::vector<std::size_t> m;
    m.reserve(s.n());
    for (const auto& e : s.entries()) m.push_back(at.factor ? (e.gamma.is_one() ? 0 : valuation(e.gamma, *at.factor)) : e.q);
    return m;
}

}  // namespace detail

template <FieldElement K>
std::vector<std::size_t> partial_multiplicities(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at) {
    if (at.factor) {
        if (!(at.factor->field() == s.field())) throw FieldMismatch();
        if (!at.factor->is_monic() || !is_irreducible(*at.factor))
            throw InputError("spectral point must be a monic irreducible polynomial");
    }
    return detail::multiplicities(s, at);
}

template <FieldElement K>
std::size_t mu_a(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at) {
    std::size_t t = 0;
    for (auto x : partial_multiplicities(s, at)) t += x;
    return t;
}

template <FieldElement K>
std::size_t mu_g(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at) {
    const auto m = partial_multiplicities(s, at);
    return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](std::size_t x) { return x > 0; }));
}

template <FieldElement K>
std::size_t M_r(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at, std::size_t r) {
    if (r > s.n()) throw InputError("rank bound exceeds the pencil size");
    const auto m = partial_multiplicities(s, at);
    std::size_t t = 0;
    for (std::size_t i = s.n() - r; i < s.n(); ++i) t += m[i];
    return t;
}

template <FieldElement K>
std::size_t M_r_total(const WeierstrassStructure<K>& s, std::size_t r) {
    if (r > s.n()) throw InputError("rank bound exceeds the pencil size");
    std::size_t t = 0;
    for (const auto& pt : spectrum(s)) {
        const auto m = detail::multiplicities(s, pt);
        for (std::size_t i = s.n() - r; i < s.n(); ++i) t += pt.degree() * m[i];
    }
    return t;
}

template <FieldElement K>
bool structures_equal(const WeierstrassStructure<K>& a, const WeierstrassStructure<K>& b) {
    return a == b;
}

template <FieldElement K>
std::vector<HomogeneousFactor<K>> hdet_divisors(const WeierstrassStructure<K>& s) {
    std::vector<HomogeneousFactor<K>> out;
    HomogeneousFactor<K> acc{Poly<K>::one(s.field()), 0};
    for (const auto& e : s.entries()) {
        acc.gamma = acc.gamma * e.gamma;
        acc.q += e.q;
        out.push_back(acc);
    }
    return out;
}

template <FieldElement K>
std::vector<SpectralPoint<K>> spectrum(const WeierstrassStructure<K>& s) {
    std::vector<SpectralPoint<K>> out;
    if (s.n() == 0) return out;
    const auto& last = s[s.n() - 1];
    if (last.q > 0) out.push_back(SpectralPoint<K>::infinity());
    for (auto& f : irreducible_factors(last.gamma)) out.push_back({std::move(f.factor)});
    return out;
}

template <FieldElement K>
std::vector<SpectralPoint<K>> joint_points(const WeierstrassStructure<K>& a, const WeierstrassStructure<K>& b) {
    if (!(a.field() == b.field())) throw FieldMismatch();
    if (a.n() != b.n()) throw InputError("structures have different sizes");
    std::vector<SpectralPoint<K>> out;
    if (a.n() == 0) return out;
    const auto& la = a[a.n() - 1];
    const auto& lb = b[b.n() - 1];
    if (la.q > 0 || lb.q > 0) out.push_back(SpectralPoint<K>::infinity());
    for (auto& f : irreducible_factors(la.gamma * lb.gamma)) out.push_back({std::move(f.factor)});
    return out;
}

template <FieldElement K>
WeierstrassStructure<K> shift_structure(const WeierstrassStructure<K>& s, const K& c) {
    std::vector<HomogeneousFactor<K>> e;
    for (const auto& x : s.entries()) e.push_back({shift(x.gamma, c), x.q});
    return WeierstrassStructure<K>(s.field(), std::move(e));
}

template <FieldElement K>
WeierstrassStructure<K> reverse_structure(const WeierstrassStructure<K>& s) {
    const FieldSpec& f = s.field();
    std::vector<HomogeneousFactor<K>> e;
    for (const auto& x : s.entries()) {
        const std::size_t v = lowest_degree(x.gamma);
        const std::size_t d = *x.gamma.degree();
        // reciprocal of γ / s^v, degree d - v
        typename Poly<K>::Coeffs c;
        const auto src = x.gamma.coeffs();
        for (std::size_t i = d + 1; i-- > v;) c.push_back(src[i]);
        Poly<K> rec = Poly<K>(f, std::move(c)).monic();
        e.push_back({Poly<K>::monomial(f, K::make(f, 1), x.q) * rec, v});
    }
    return WeierstrassStructure<K>(f, std::move(e));
}

template <FieldElement K>
bool is_eigenvalue(const WeierstrassStructure<K>& s, const FieldPoint<K>& c) {
    if (s.n() == 0) return false;
    const auto& last = s[s.n() - 1];
    if (c.is_infinite()) return last.q > 0;
    return last.gamma(*c.value).is_zero();
}

template <FieldElement K>
Poly<K> finite_product(const WeierstrassStructure<K>& s) {
    Poly<K> p = Poly<K>::one(s.field());
    for (const auto& e : s.entries()) p = p * e.gamma;
    return p;
}

template <FieldElement K>
StructureSplit<K> split_at(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at) {
    const FieldSpec& f = s.field();
    const auto m = partial_multiplicities(s, at);
    const std::size_t n = s.n();
    std::size_t total = 0;
    for (auto x : m) total += x;
    const std::size_t n1 = at.degree() * total;

    std::vector<HomogeneousFactor<K>> local;
    for (std::size_t j = n - n1; j < n; ++j) {
        if (at.factor)
            local.push_back({pow(*at.factor, m[j]), 0});
        else
            local.push_back({Poly<K>::one(f), m[j]});
    }
    std::vector<HomogeneousFactor<K>> rest;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& e = s[i];
        HomogeneousFactor<K> stripped =
            at.factor ? HomogeneousFactor<K>{divexact(e.gamma, pow(*at.factor, m[i])), e.q}
                      : HomogeneousFactor<K>{e.gamma, 0};
        if (i < n1) {
            if (!stripped.gamma.is_one() || stripped.q != 0)
                throw InvariantViolation("deflated structure has a nontrivial leading entry");
            continue;
        }
        rest.push_back(std::move(stripped));
    }
    return {WeierstrassStructure<K>(f, std::move(local)), WeierstrassStructure<K>(f, std::move(rest))};
}

template <FieldElement K>
WeierstrassStructure<K> finite_structure(const FieldSpec& f, std::vector<Poly<K>> gammas, std::size_t n) {
    if (gammas.size() > n) throw InputError("more finite parts than the structure size");
    std::vector<HomogeneousFactor<K>> e;
    for (std::size_t i = gammas.size(); i < n; ++i) e.push_back({Poly<K>::one(f), 0});
    for (auto& g : gammas) e.push_back({std::move(g), 0});
    return WeierstrassStructure<K>(f, std::move(e));
}

#define LRP_INSTANTIATE(K)                                                                                       \
    template class WeierstrassStructure<K>;                                                                      \
    template WeierstrassStructure<K> compute_structure(const Pencil<K>&);                                        \
    template std::optional<WeierstrassStructure<K>> try_compute_structure(const Pencil<K>&);                     \
    template bool hif_divides(const std::optional<HomogeneousFactor<K>>&, const std::optional<HomogeneousFactor<K>>&); \
    template std::vector<std::size_t> detail::multiplicities(const WeierstrassStructure<K>&, const SpectralPoint<K>&); \
    template std::vector<std::size_t> partial_multiplicities(const WeierstrassStructure<K>&, const SpectralPoint<K>&); \
    template std::size_t mu_a(const WeierstrassStructure<K>&, const SpectralPoint<K>&);                          \
    template std::size_t mu_g(const WeierstrassStructure<K>&, const SpectralPoint<K>&);                          \
    template std::size_t M_r(const WeierstrassStructure<K>&, const SpectralPoint<K>&, std::size_t);              \
    template std::size_t M_r_total(const WeierstrassStructure<K>&, std::size_t);                                 \
    template bool structures_equal(const WeierstrassStructure<K>&, const WeierstrassStructure<K>&);              \
    template std::vector<HomogeneousFactor<K>> hdet_divisors(const WeierstrassStructure<K>&);                    \
    template std::vector<SpectralPoint<K>> spectrum(const WeierstrassStructure<K>&);                             \
    template std::vector<SpectralPoint<K>> joint_points(const WeierstrassStructure<K>&, const WeierstrassStructure<K>&); \
    template WeierstrassStructure<K> shift_structure(const WeierstrassStructure<K>&, const K&);                  \
    template WeierstrassStructure<K> reverse_structure(const WeierstrassStructure<K>&);                          \
    template bool is_eigenvalue(const WeierstrassStructure<K>&, const FieldPoint<K>&);                           \
    template Poly<K> finite_product(const WeierstrassStructure<K>&);                                             \
    template StructureSplit<K> split_at(const WeierstrassStructure<K>&, const SpectralPoint<K>&);                \
    template WeierstrassStructure<K> finite_structure(const FieldSpec&, std::vector<Poly<K>>, std::size_t);

LRP_INSTANTIATE(Rational)
LRP_INSTANTIATE(Zp)

}  // namespace lrp

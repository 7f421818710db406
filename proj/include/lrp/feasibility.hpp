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
 * @file feasibility.hpp
 * @brief Reachability predicates for rank-bounded pencil perturbations and
 *        the three-valued verdict.
 *
 * A regular pencil B is reachable from A by a perturbation of normal rank at
 * most r only if the homogeneous invariant factors interlace:
 *
 *     Γ_{i−r}(A) | Γ_i(B) | Γ_{i+r}(A),   1 ≤ i ≤ n.
 *
 * The condition is also sufficient when some c ∈ F ∪ {∞} is an eigenvalue of
 * neither pencil, or when the two pencils share the partial multiplicities at
 * some point and the problem left after splitting that point off is covered
 * again. Otherwise the verdict is Unknown rather than a guess.
 */

#ifndef LRP_FEASIBILITY_HPP
#define LRP_FEASIBILITY_HPP

#include <memory>
#include <optional>
#include <utility>

#include "lrp/structure.hpp"

namespace lrp {

enum class Side { Lower, Upper };

/// Lower: Γ_{i−r}(A) ∤ Γ_i(B). Upper: Γ_i(B) ∤ Γ_{i+r}(A).
struct InterlacingWitness {
    std::size_t index;
    Side side;
    friend bool operator==(const InterlacingWitness&, const InterlacingWitness&) = default;
};

template <FieldElement K>
std::optional<InterlacingWitness> interlacing_violation(const WeierstrassStructure<K>& sa,
                                                        const WeierstrassStructure<K>& sb, std::size_t r);

template <FieldElement K>
bool check_interlacing(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb, std::size_t r);

/// m_{i−r}(λ, A) ≤ m_i(λ, B) ≤ m_{i+r}(λ, A) at every point of either spectrum.
template <FieldElement K>
bool check_multiplicity_form(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb, std::size_t r);

/// |w_i(λ, A) − w_i(λ, B)| ≤ r for all i at every point.
template <FieldElement K>
bool check_weyr_form(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb, std::size_t r);

/// |μ_g(λ, A) − μ_g(λ, B)| ≤ r at every point.
template <FieldElement K>
bool geometric_bound(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb, std::size_t r);

enum class RouteKind { Equal, UnspectralPoint, Deflation, Search };

template <FieldElement K>
struct Route {
    RouteKind kind = RouteKind::Equal;
    /// UnspectralPoint: the point c.
    FieldPoint<K> point;
    /// Deflation: the shared point and the route for the remaining blocks.
    SpectralPoint<K> lambda0;
    std::shared_ptr<const Route> inner;

    static Route equal() { return {}; }
    static Route search() { return {RouteKind::Search, {}, {}, nullptr}; }
    static Route unspectral(FieldPoint<K> c) { return {RouteKind::UnspectralPoint, std::move(c), {}, nullptr}; }
    static Route deflation(SpectralPoint<K> at, Route in) {
        return {RouteKind::Deflation, {}, std::move(at), std::make_shared<const Route>(std::move(in))};
    }

    friend bool operator==(const Route& a, const Route& b) {
        if (a.kind != b.kind || !(a.point == b.point) || !(a.lambda0 == b.lambda0)) return false;
        if (!a.inner || !b.inner) return !a.inner && !b.inner;
        return *a.inner == *b.inner;
    }
};

/// First c ∈ F ∪ {∞} that is an eigenvalue of neither structure. Order: ∞,
/// then 0, 1, −1, 2, −2, … over Q or 0, …, p−1 over F_p.
template <FieldElement K>
std::optional<FieldPoint<K>> find_unspectral_point(const WeierstrassStructure<K>& sa,
                                                   const WeierstrassStructure<K>& sb);

/// Same search against Λ(A) ∪ Λ(p), where Λ(p) holds the roots of p and ∞
/// when deg p < n.
template <FieldElement K>
std::optional<FieldPoint<K>> find_unspectral_point(const WeierstrassStructure<K>& sa, const Poly<K>& p);

/// A sufficiency route: UnspectralPoint, or Deflation at a point with
/// identical nonzero multiplicity lists whose remainder has a route itself.
template <FieldElement K>
std::optional<Route<K>> sufficiency_hypothesis(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb);

enum class VerdictKind { Feasible, Infeasible, Unknown };

template <FieldElement K>
struct Verdict {
    VerdictKind kind;
    std::optional<InterlacingWitness> witness;
    std::optional<Route<K>> route;
};

template <FieldElement K>
Verdict<K> verdict(const WeierstrassStructure<K>& sa, const WeierstrassStructure<K>& sb, std::size_t r);

/// Throws InputError on singular pencils or mismatched sizes and fields.
template <FieldElement K>
Verdict<K> verdict(const Pencil<K>& a, const Pencil<K>& b, std::size_t r);

/// α_1⋯α_{n−r} | p and μ_a(∞) − M_r(∞) ≤ n − deg p. Throws InputError unless
/// p is monic with deg p ≤ n.
template <FieldElement K>
bool check_placement(const WeierstrassStructure<K>& sa, const Poly<K>& p, std::size_t r);

/// (μ_a − M_r(λ), μ_a − M_r(λ) + M_r_total). Throws InputError if r > n.
template <FieldElement K>
std::pair<std::size_t, std::size_t> placement_bounds(const WeierstrassStructure<K>& sa, std::size_t r,
                                                     const SpectralPoint<K>& at);

}  // namespace lrp

#endif

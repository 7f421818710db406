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
 * @file structure.hpp
 * @brief Computing and reading the Weierstrass structure: partial
 *        multiplicities, Weyr characteristics and multiplicity aggregates.
 *
 * Partial multiplicities are returned in the ascending order
 * m_1 ≤ … ≤ m_n of the invariant factor chain. Points are indexed by monic
 * irreducible factors, so a factor f of degree d stands for its d conjugate
 * roots in the algebraic closure. M_r_total() weights each factor by d to
 * count those roots individually.
 */

#ifndef LRP_STRUCTURE_HPP
#define LRP_STRUCTURE_HPP

#include <cstddef>
#include <vector>

#include "lrp/pencil.hpp"
#include "lrp/weierstrass.hpp"

namespace lrp {

/// Throws InputError on a singular pencil.
template <FieldElement K>
WeierstrassStructure<K> compute_structure(const Pencil<K>& a);

/// Empty on a singular pencil.
template <FieldElement K>
std::optional<WeierstrassStructure<K>> try_compute_structure(const Pencil<K>& a);

/// Γ_a | Γ_b for (γ, q) pairs; empty optionals are the zero factor.
template <FieldElement K>
bool hif_divides(const std::optional<HomogeneousFactor<K>>& a, const std::optional<HomogeneousFactor<K>>& b);

/// m_1 ≤ … ≤ m_n at the point. Throws InputError if the factor is reducible.
template <FieldElement K>
std::vector<std::size_t> partial_multiplicities(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at);

/// Conjugate partition of a multiset of multiplicities.
Partition weyr(const std::vector<std::size_t>& m);
Partition weyr(const Partition& m);

template <FieldElement K>
std::size_t mu_a(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at);

template <FieldElement K>
std::size_t mu_g(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at);

/// Sum of the r largest partial multiplicities. Throws InputError if r > n.
template <FieldElement K>
std::size_t M_r(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at, std::size_t r);

/// Σ over the spectrum, finite factors weighted by their degree.
template <FieldElement K>
std::size_t M_r_total(const WeierstrassStructure<K>& s, std::size_t r);

template <FieldElement K>
bool structures_equal(const WeierstrassStructure<K>& a, const WeierstrassStructure<K>& b);

/// Δ_k = Γ_1⋯Γ_k as (∏ γ_i, Σ q_i).
template <FieldElement K>
std::vector<HomogeneousFactor<K>> hdet_divisors(const WeierstrassStructure<K>& s);

/// ∞ if q_n > 0, then the irreducible factors of γ_n in canonical order.
template <FieldElement K>
std::vector<SpectralPoint<K>> spectrum(const WeierstrassStructure<K>& s);

/// Union of two spectra, ∞ first, then the factors in canonical order.
template <FieldElement K>
std::vector<SpectralPoint<K>> joint_points(const WeierstrassStructure<K>& a, const WeierstrassStructure<K>& b);

/// Structure of the shifted pencil A(s + c).
template <FieldElement K>
WeierstrassStructure<K> shift_structure(const WeierstrassStructure<K>& s, const K& c);

/// Structure of the reversed pencil t·A0 + A1.
template <FieldElement K>
WeierstrassStructure<K> reverse_structure(const WeierstrassStructure<K>& s);

/// True iff c ∈ F ∪ {∞} is an eigenvalue.
template <FieldElement K>
bool is_eigenvalue(const WeierstrassStructure<K>& s, const FieldPoint<K>& c);

/// Product of the finite parts, the monic determinant.
template <FieldElement K>
Poly<K> finite_product(const WeierstrassStructure<K>& s);

/// Splitting at a point: the block carrying the point alone and the
/// complementary block. Both are regular structures, of sizes
/// deg(point)·μ_a and n − deg(point)·μ_a.
template <FieldElement K>
struct StructureSplit {
    WeierstrassStructure<K> local;
    WeierstrassStructure<K> rest;
};

template <FieldElement K>
StructureSplit<K> split_at(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at);

/// n×n structure with finite parts gammas (padded with leading ones) and all q = 0.
template <FieldElement K>
WeierstrassStructure<K> finite_structure(const FieldSpec& f, std::vector<Poly<K>> gammas, std::size_t n);

namespace detail {
/// partial_multiplicities() without the irreducibility check.
template <FieldElement K>
std::vector<std::size_t> multiplicities(const WeierstrassStructure<K>& s, const SpectralPoint<K>& at);
}  // namespace detail

}  // namespace lrp

#endif

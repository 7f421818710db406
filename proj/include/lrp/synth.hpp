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
 * @file synth.hpp
 * @brief Constructing rank-bounded perturbations with checkable certificates.
 *
 * synthesize() follows the route chosen by sufficiency_hypothesis():
 *
 * - c = ∞ unspectral: A1 is invertible and A(s) = A1·(sI − G) with
 *   G = −A1⁻¹A0. A constant K of rank ≤ r giving sI − (G + K) the target
 *   invariant factors yields P = −A1·K.
 * - c finite: shift by c and reverse, which moves c to ∞, solve there for a
 *   constant K'', and map back to P(s) = −(s − c)·(A0 + c·A1)·K''.
 * - deflation at λ0: bring A to diag(A11, A22) by an explicit strict
 *   equivalence, solve for the A22 block and transport the block
 *   perturbation back.
 *
 * When no route applies, or a route's search runs out of budget, a direct
 * search over perturbations takes over. Every result is re-verified before
 * it is returned.
 */

#ifndef LRP_SYNTH_HPP
#define LRP_SYNTH_HPP

#include <optional>
#include <variant>

#include "lrp/feasibility.hpp"
#include "lrp/search.hpp"

namespace lrp {

template <FieldElement K>
using Target = std::variant<WeierstrassStructure<K>, Poly<K>>;

template <FieldElement K>
struct Certificate {
    Pencil<K> P;
    std::size_t claimed_rank = 0;
    /// A structure to reach, or a monic polynomial det(A + P) must be proportional to.
    Target<K> target;
    Route<K> route;
    std::uint64_t trials_used = 0;
};

/// Target structure for placing det(A + P) = k·p. Throws InputError unless
/// check_placement(sa, p, r) holds.
template <FieldElement K>
WeierstrassStructure<K> complete_placement_target(const WeierstrassStructure<K>& sa, const Poly<K>& p, std::size_t r);

/// Invariant factors of sI − G.
template <FieldElement K>
std::vector<Poly<K>> similarity_invariants(const Matrix<K>& g);

/// P of rank ≤ r such that sI − (G + P) has the given n invariant factors.
/// Throws InputError if the factors do not interlace with those of sI − G
/// at gap r. Empty when the budget runs out. trials, when given, is
/// increased by the number of candidates tested.
template <FieldElement K>
std::optional<Matrix<K>> solve_constant(const Matrix<K>& g, const std::vector<Poly<K>>& target, std::size_t r,
                                        const SearchOptions& opt = {}, std::uint64_t* trials = nullptr);

/// Throws InputError if A is singular, sizes or fields differ, or the
/// interlacing condition fails. Empty means the budget ran out.
template <FieldElement K>
std::optional<Certificate<K>> synthesize(const Pencil<K>& a, const WeierstrassStructure<K>& sb, std::size_t r,
                                         const SearchOptions& opt = {});

/// Throws InputError if p is not monic of degree ≤ n or check_placement fails.
template <FieldElement K>
std::optional<Certificate<K>> synthesize_placement(const Pencil<K>& a, const Poly<K>& p, std::size_t r,
                                                   const SearchOptions& opt = {});

/// Recomputes the rank of P and the claim about A + P from scratch.
template <FieldElement K>
bool verify_certificate(const Pencil<K>& a, const Certificate<K>& cert);

}  // namespace lrp

#endif

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
 * @file equivalence.hpp
 * @brief Explicit strict equivalence transforms between regular pencils.
 *
 * Pairs (X, Y) with X·A(s) = W(s)·Y form the kernel of a linear system in
 * 2n² unknowns. Any member with X invertible gives Q = X, R = Y⁻¹ and
 * Q·A·R = W. The kernel is searched exhaustively when it is small enough and
 * by random combinations otherwise.
 */

#ifndef LRP_EQUIVALENCE_HPP
#define LRP_EQUIVALENCE_HPP

#include <optional>

#include "lrp/pencil.hpp"
#include "lrp/search.hpp"

namespace lrp {

template <FieldElement K>
struct StrictEquivalence {
    Matrix<K> Q;
    Matrix<K> R;
};

/// (Q, R) invertible with Q·A·R = W, or empty when none was found. Empty is
/// definitive when the kernel search was exhaustive.
template <FieldElement K>
std::optional<StrictEquivalence<K>> find_strict_equivalence(const Pencil<K>& a, const Pencil<K>& w,
                                                            const SearchOptions& opt = {});

}  // namespace lrp

#endif

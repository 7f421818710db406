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
 * @file pencil.hpp
 * @brief Square pencils A0 + s·A1 and the transforms acting on them.
 */

#ifndef LRP_PENCIL_HPP
#define LRP_PENCIL_HPP

#include <cstdint>

#include "lrp/matrix.hpp"
#include "lrp/polymatrix.hpp"
#include "lrp/weierstrass.hpp"

namespace lrp {

template <FieldElement K>
struct Pencil {
    Matrix<K> A0;
    Matrix<K> A1;

    /// Throws InputError unless A0 and A1 are square of the same size and field.
    Pencil(Matrix<K> a0, Matrix<K> a1);
    static Pencil zero(FieldSpec f, std::size_t n) { return Pencil(Matrix<K>(f, n, n), Matrix<K>(f, n, n)); }

    std::size_t n() const noexcept { return A0.rows(); }
    const FieldSpec& field() const noexcept { return A0.field(); }
    PolyMatrix<K> matrix() const { return PolyMatrix<K>::linear(A0, A1); }

    friend bool operator==(const Pencil&, const Pencil&) = default;
};

template <FieldElement K>
bool is_regular(const Pencil<K>& a);

/// t·A0 + A1, i.e. (A1, A0).
template <FieldElement K>
Pencil<K> reverse(const Pencil<K>& a);

/// A(s + c) = (A0 + c·A1) + s·A1.
template <FieldElement K>
Pencil<K> shift(const Pencil<K>& a, const K& c);

template <FieldElement K>
Poly<K> pencil_det(const Pencil<K>& a);

template <FieldElement K>
Pencil<K> add(const Pencil<K>& a, const Pencil<K>& p);

template <FieldElement K>
Pencil<K> subtract(const Pencil<K>& a, const Pencil<K>& p);

/// (Q·A0·R, Q·A1·R). Throws InputError if Q or R is singular.
template <FieldElement K>
Pencil<K> apply_equiv(const Pencil<K>& a, const Matrix<K>& q, const Matrix<K>& r);

/// Constant matrices multiplying both coefficients, no invertibility check.
template <FieldElement K>
Pencil<K> multiply(const Matrix<K>& q, const Pencil<K>& a, const Matrix<K>& r);

/// diag(a, b)
template <FieldElement K>
Pencil<K> direct_sum(const Pencil<K>& a, const Pencil<K>& b);

/// Normal rank of the pencil as a polynomial matrix.
template <FieldElement K>
std::size_t normal_rank(const Pencil<K>& p);

/// Deterministic in seed. Entries are uniform residues over F_p and integers
/// in [-2, 2] over Q; samples until the pencil is regular.
template <FieldElement K>
Pencil<K> random_regular(const FieldSpec& f, std::size_t n, std::uint64_t seed);

/// Uniformly random invertible constant matrix.
template <FieldElement K>
Matrix<K> random_invertible(const FieldSpec& f, std::size_t n, std::uint64_t seed);

/// Block diagonal sum over entries of [sI - C(γ_i)] ⊕ [I + s·N_{q_i}], with
/// C the companion matrix (ones on the subdiagonal, last column the negated
/// coefficients of γ) and N the nilpotent Jordan block.
template <FieldElement K>
Pencil<K> weierstrass_canonical(const WeierstrassStructure<K>& s);

/// Companion matrix of a monic polynomial in the convention above.
template <FieldElement K>
Matrix<K> companion(const Poly<K>& gamma);

}  // namespace lrp

#endif

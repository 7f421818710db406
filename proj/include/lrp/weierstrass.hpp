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
 * @file weierstrass.hpp
 * @brief The Weierstrass structure of a regular pencil.
 *
 * The i-th homogeneous invariant factor of an n×n regular pencil is
 *
 *     Γ_i(s,t) = t^{q_i} · t^{deg γ_i} · γ_i(s/t)
 *
 * and is stored as the pair (γ_i, q_i): its monic finite part and its
 * infinite partial multiplicity. No bivariate polynomial is ever formed.
 * Indices are 1-based in term(); term(i) for i < 1 is (1, 0) and for i > n
 * it is the zero factor, represented as an empty optional.
 */

#ifndef LRP_WEIERSTRASS_HPP
#define LRP_WEIERSTRASS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lrp/poly.hpp"

namespace lrp {

template <FieldElement K>
struct HomogeneousFactor {
    Poly<K> gamma;
    std::size_t q = 0;

    friend bool operator==(const HomogeneousFactor&, const HomogeneousFactor&) = default;
};

template <FieldElement K>
class WeierstrassStructure {
   public:
    /// Throws InputError unless every γ_i is monic, γ_1 | … | γ_n,
    /// q_1 ≤ … ≤ q_n and Σ (deg γ_i + q_i) = n.
    WeierstrassStructure(FieldSpec f, std::vector<HomogeneousFactor<K>> entries);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return entries_.size(); }
    const std::vector<HomogeneousFactor<K>>& entries() const noexcept { return entries_; }
    /// 0-based.
    const HomogeneousFactor<K>& operator[](std::size_t i) const { return entries_.at(i); }

    /// 1-based, with the out-of-range conventions described above.
    std::optional<HomogeneousFactor<K>> term(std::ptrdiff_t i) const;

    friend bool operator==(const WeierstrassStructure&, const WeierstrassStructure&) = default;

   private:
    FieldSpec field_;
    std::vector<HomogeneousFactor<K>> entries_;
};

/// A point of F̄ ∪ {∞} up to conjugacy: a monic irreducible factor, or
/// infinity when factor is empty.
template <FieldElement K>
struct SpectralPoint {
    std::optional<Poly<K>> factor;

    static SpectralPoint infinity() { return {}; }
    bool is_infinite() const noexcept { return !factor.has_value(); }
    /// Number of conjugate points the class stands for.
    std::size_t degree() const { return factor ? *factor->degree() : 1; }

    friend bool operator==(const SpectralPoint&, const SpectralPoint&) = default;
};

/// A point of F ∪ {∞}; empty value means infinity.
template <FieldElement K>
struct FieldPoint {
    std::optional<K> value;

    bool is_infinite() const noexcept { return !value.has_value(); }
    friend bool operator==(const FieldPoint&, const FieldPoint&) = default;
};

/// Weakly decreasing list of positive integers.
class Partition {
   public:
    Partition() = default;
    /// Sorts and drops zeros.
    explicit Partition(std::vector<std::size_t> parts);

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    /// 1-based part, 0 beyond the end.
    std::size_t operator()(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;

   private:
    std::vector<std::size_t> parts_;
};

extern template class WeierstrassStructure<Rational>;
extern template class WeierstrassStructure<Zp>;

}  // namespace lrp

#endif

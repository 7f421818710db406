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
 * @file factor.hpp
 * @brief Irreducible factorization at desk scale, and enumeration of monic
 *        polynomials over a prime field.
 *
 * Over F_p small inputs are factored by trial division against all monic
 * polynomials of increasing degree; when that enumeration would be large the
 * square-free / distinct-degree / Cantor-Zassenhaus pipeline takes over.
 * Over Q the input is made square-free, rational roots are extracted, and the
 * remaining integer factors are split by Kronecker's method. The Q path is
 * meant for the low degrees (≤ ~12) that pencil determinants reach here.
 */

#ifndef LRP_FACTOR_HPP
#define LRP_FACTOR_HPP

#include <cstdint>
#include <iterator>
#include <utility>
#include <vector>

#include "lrp/poly.hpp"

namespace lrp {

template <FieldElement K>
struct Factor {
    Poly<K> factor;  ///< monic irreducible
    std::size_t multiplicity;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Monic irreducible factors with multiplicities, sorted by the canonical
/// polynomial order. Throws InputError on zero; constants give an empty list.
template <FieldElement K>
std::vector<Factor<K>> irreducible_factors(const Poly<K>& p);

template <FieldElement K>
bool is_irreducible(const Poly<K>& p);

/// All p^d monic polynomials of degree exactly d over F_p, in base-p counting
/// order of the coefficient vector read from the top (s, s+1 for F_2, d = 1).
class MonicPolys {
   public:
    /// Throws InputError over Q or when p^d overflows 64 bits.
    MonicPolys(const FieldSpec& f, std::size_t d);

    std::uint64_t size() const noexcept { return count_; }
    Poly<Zp> operator[](std::uint64_t index) const;

    class iterator {
       public:
        using value_type = Poly<Zp>;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;
        iterator() = default;
        iterator(const MonicPolys* r, std::uint64_t i) : r_(r), i_(i) {}
        value_type operator*() const { return (*r_)[i_]; }
        iterator& operator++() {
            ++i_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++i_;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

       private:
        const MonicPolys* r_ = nullptr;
        std::uint64_t i_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, count_}; }

   private:
    FieldSpec field_;
    std::size_t degree_;
    std::uint64_t count_;
};

inline MonicPolys enumerate_monic_polys(const FieldSpec& f, std::size_t d) { return MonicPolys(f, d); }

}  // namespace lrp

#endif

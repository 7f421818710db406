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

// Shared fixtures and random generators for the test binaries.

#ifndef LRP_TESTS_SUPPORT_HPP
#define LRP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <type_traits>
#include <string>
#include <vector>

#include "lrp/factor.hpp"
#include "lrp/poly_io.hpp"
#include "lrp/random.hpp"
#include "lrp/structure.hpp"

namespace lrp::testing {

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec F2 = FieldSpec::prime(2);
inline const FieldSpec F3 = FieldSpec::prime(3);
inline const FieldSpec F5 = FieldSpec::prime(5);
inline const FieldSpec F7 = FieldSpec::prime(7);

template <FieldElement K>
Poly<K> P(const FieldSpec& f, const std::string& text) {
    return parse_poly<K>(f, text);
}

template <FieldElement K>
WeierstrassStructure<K> S(const FieldSpec& f, std::initializer_list<std::pair<const char*, std::size_t>> e) {
    std::vector<HomogeneousFactor<K>> v;
    for (const auto& [g, q] : e) v.push_back({P<K>(f, g), q});
    return WeierstrassStructure<K>(f, std::move(v));
}

template <FieldElement K>
Matrix<K> M(const FieldSpec& f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    return Matrix<K>::from_ints(f, rows);
}

/// A(s) = sI + E_23: invariant factors 1, s, s².
template <FieldElement K>
Pencil<K> jordan_a(const FieldSpec& f) {
    return Pencil<K>(M<K>(f, {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}), Matrix<K>::identity(f, 3));
}

/// B(s) with structure (1, 0), (1, 0), (s, 2).
template <FieldElement K>
Pencil<K> jordan_b(const FieldSpec& f) {
    return Pencil<K>(M<K>(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}), M<K>(f, {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}));
}

/// A rank-one P with jordan_a + P strictly equivalent to jordan_b.
template <FieldElement K>
Pencil<K> jordan_p(const FieldSpec& f) {
    return Pencil<K>(M<K>(f, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}), M<K>(f, {{0, 0, 0}, {0, 0, 0}, {0, 0, -1}}));
}

template <FieldElement K>
Poly<K> random_poly(const FieldSpec& f, std::size_t deg, std::mt19937_64& rng, std::int64_t height = 3) {
    std::vector<K> c;
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(random_scalar<K>(f, rng, height));
    return Poly<K>(f, std::span<const K>(c));
}

/// Entries of degree ≤ deg; about a third of the samples are rank deficient.
template <FieldElement K>
PolyMatrix<K> random_polymatrix(const FieldSpec& f, std::size_t rows, std::size_t cols, std::size_t deg,
                                std::mt19937_64& rng) {
    PolyMatrix<K> g(f, rows, cols);
    const bool deficient = std::uniform_int_distribution<int>(0, 2)(rng) == 0 && deg >= 1;
    if (deficient) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min(rows, cols) - 1)(rng);
        PolyMatrix<K> a(f, rows, k), b(f, k, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < k; ++j) a(i, j) = random_poly<K>(f, deg / 2, rng);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < cols; ++j) b(i, j) = random_poly<K>(f, deg - deg / 2, rng);
        if (k == 0) return g;
        return a * b;
    }
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = random_poly<K>(f, deg, rng);
    return g;
}

/// Monic irreducibles of degree ≤ 2 used as eigenvalue classes.
template <FieldElement K>
std::vector<Poly<K>> point_pool(const FieldSpec& f) {
    if constexpr (std::is_same_v<K, Zp>) {
        std::vector<Poly<K>> out;
        for (std::size_t d = 1; d <= 2; ++d)
            for (const auto& p : MonicPolys(f, d))
                if (is_irreducible(p) && out.size() < 6) out.push_back(p);
        return out;
    } else {
        return {P<K>(f, "s"), P<K>(f, "s - 1"), P<K>(f, "s + 2"), P<K>(f, "s^2 + 1")};
    }
}

/// A structure assembled from randomly drawn elementary divisors, including
/// infinite ones, with repeated points favoured.
template <FieldElement K>
WeierstrassStructure<K> random_structure(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    const auto pool = point_pool<K>(f);
    std::vector<std::vector<std::size_t>> mult(pool.size() + 1);
    std::size_t left = n;
    while (left > 0) {
        const std::size_t k = std::min<std::size_t>(pool.size(), 3);
        std::size_t which = std::uniform_int_distribution<std::size_t>(0, k)(rng);
        if (which == k) which = pool.size();
        const std::size_t d = which < pool.size() ? *pool[which].degree() : 1;
        if (d > left) continue;
        const std::size_t m = std::uniform_int_distribution<std::size_t>(1, left / d)(rng);
        if (mult[which].size() >= n) continue;
        mult[which].push_back(m);
        left -= d * m;
    }
    std::vector<HomogeneousFactor<K>> e(n, HomogeneousFactor<K>{Poly<K>::one(f), 0});
    for (std::size_t w = 0; w < mult.size(); ++w) {
        auto& ms = mult[w];
        std::sort(ms.rbegin(), ms.rend());
        for (std::size_t j = 0; j < ms.size(); ++j) {
            auto& slot = e[n - 1 - j];
            if (w == pool.size()) {
                slot.q += ms[j];
            } else {
                for (std::size_t k = 0; k < ms[j]; ++k) slot.gamma = slot.gamma * pool[w];
            }
        }
    }
    return WeierstrassStructure<K>(f, std::move(e));
}

template <FieldElement K>
Matrix<K> random_invertible_rng(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix<K> m = random_matrix<K>(f, n, n, rng, 2);
        if (m.rank() == n) return m;
    }
}

/// A pencil with the given structure hidden behind a random strict equivalence.
template <FieldElement K>
Pencil<K> disguised(const WeierstrassStructure<K>& s, std::mt19937_64& rng) {
    const std::size_t n = s.n();
    return apply_equiv(weierstrass_canonical(s), random_invertible_rng<K>(s.field(), n, rng),
                       random_invertible_rng<K>(s.field(), n, rng));
}

}  // namespace lrp::testing

#endif

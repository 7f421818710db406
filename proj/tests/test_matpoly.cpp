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

#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace lrp;
using namespace lrp::testing;

namespace {

template <FieldElement K>
PolyMatrix<K> pm(const FieldSpec& f, std::initializer_list<std::initializer_list<const char*>> rows) {
    PolyMatrix<K> g(f, rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* e : row) g(i, j++) = P<K>(f, e);
        ++i;
    }
    return g;
}

/// Products of elementary operations with polynomial multipliers.
template <FieldElement K>
PolyMatrix<K> random_unimodular(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    PolyMatrix<K> u = PolyMatrix<K>::identity(f, n);
    if (n < 2) {
        K c = random_scalar<K>(f, rng);
        while (c.is_zero()) c = random_scalar<K>(f, rng);
        u(0, 0) = Poly<K>::constant(f, c);
        return u;
    }
    for (int k = 0; k < 3; ++k) {
        PolyMatrix<K> e = PolyMatrix<K>::identity(f, n);
        const std::size_t i = rng() % n;
        const std::size_t j = (i + 1 + rng() % (n - 1)) % n;
        e(i, j) = random_poly<K>(f, rng() % 2, rng);
        u = u * e;
    }
    return u;
}

template <FieldElement K>
void check_smith(const PolyMatrix<K>& g) {
    const SmithResult<K> sr = smith_form(g);
    CHECK(sr.U * g * sr.V == sr.S);
    CHECK(is_unimodular(sr.U));
    CHECK(is_unimodular(sr.V));
    CHECK(sr.S.is_diagonal());
    const std::size_t rho = sr.invariant_factors.size();
    CHECK(normal_rank(g) == rho);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < std::min(g.rows(), g.cols()); ++i) nonzero += !sr.S(i, i).is_zero();
    CHECK(nonzero == rho);
    for (std::size_t i = 0; i < rho; ++i) {
        CHECK(sr.S(i, i) == sr.invariant_factors[i]);
        CHECK(sr.invariant_factors[i].is_monic());
        if (i > 0) CHECK(divides(sr.invariant_factors[i - 1], sr.invariant_factors[i]));
    }
    CHECK(invariant_factors(g) == sr.invariant_factors);
    const auto d = determinantal_divisors(g);
    REQUIRE(d.size() == rho);
    Poly<K> acc = Poly<K>::one(g.field());
    for (std::size_t k = 0; k < rho; ++k) {
        acc = acc * sr.invariant_factors[k];
        CHECK(d[k] == acc);
    }
}

}  // namespace

TEST_CASE("normal rank") {
    CHECK(normal_rank(pm<Rational>(Q, {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "1", "-s"}})) == 1);
    CHECK(normal_rank(PolyMatrix<Rational>(Q, 3, 3)) == 0);
    CHECK(normal_rank(PolyMatrix<Rational>::identity(Q, 3)) == 3);
    CHECK(normal_rank(pm<Rational>(Q, {{"s", "s^2"}, {"1", "s"}})) == 1);
    CHECK(normal_rank(pm<Zp>(F2, {{"s", "1"}, {"1", "s"}})) == 2);
}

TEST_CASE("invariant factors of small pencils") {
    const auto a = pm<Rational>(Q, {{"s", "0", "0"}, {"0", "s", "1"}, {"0", "0", "s"}});
    CHECK(invariant_factors(a) == std::vector{P<Rational>(Q, "1"), P<Rational>(Q, "s"), P<Rational>(Q, "s^2")});
    const auto b = pm<Rational>(Q, {{"1", "s", "0"}, {"0", "1", "0"}, {"0", "0", "s"}});
    CHECK(invariant_factors(b) == std::vector{P<Rational>(Q, "1"), P<Rational>(Q, "1"), P<Rational>(Q, "s")});
    const auto d = pm<Rational>(Q, {{"1", "0", "0"}, {"0", "s - 1", "0"}, {"0", "0", "s^2 - 1"}});
    const SmithResult<Rational> sr = smith_form(d);
    CHECK(sr.S == d);
    CHECK(sr.U == PolyMatrix<Rational>::identity(Q, 3));
    CHECK(sr.V == PolyMatrix<Rational>::identity(Q, 3));
}

TEST_CASE("determinantal divisors") {
    const auto a = pm<Rational>(Q, {{"s", "0", "0"}, {"0", "s", "1"}, {"0", "0", "s"}});
    CHECK(determinantal_divisors(a) ==
          std::vector{P<Rational>(Q, "1"), P<Rational>(Q, "s"), P<Rational>(Q, "s^3")});
    CHECK(determinantal_divisors(PolyMatrix<Rational>::identity(Q, 4)) == std::vector<Poly<Rational>>(4, P<Rational>(Q, "1")));
    CHECK(determinantal_divisors(pm<Rational>(Q, {{"s"}})) == std::vector{P<Rational>(Q, "s")});
    CHECK_THROWS_AS(determinantal_divisors(PolyMatrix<Rational>::identity(Q, 5)), InputError);
}

TEST_CASE("unimodularity") {
    CHECK(is_unimodular(pm<Rational>(Q, {{"1", "s"}, {"0", "1"}})));
    CHECK_FALSE(is_unimodular(pm<Rational>(Q, {{"s", "0"}, {"0", "1"}})));
    CHECK(is_unimodular(PolyMatrix<Zp>::identity(F3, 4)));
    CHECK(det(pm<Rational>(Q, {{"s", "1"}, {"1", "s"}})) == P<Rational>(Q, "s^2 - 1"));
    CHECK(minor(pm<Rational>(Q, {{"s", "1", "2"}, {"1", "s", "0"}, {"0", "0", "1"}}), {0, 1}, {0, 2}) ==
          P<Rational>(Q, "-2"));
}

TEST_CASE_TEMPLATE("Smith form properties on random matrices", K, Rational, Zp) {
    for (const FieldSpec& f : std::is_same_v<K, Zp> ? std::vector{F2, F3, F5} : std::vector{Q}) {
        std::mt19937_64 rng(23 + f.characteristic());
        const int count = std::is_same_v<K, Zp> ? 350 : 1000;
        for (int t = 0; t < count; ++t) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
            check_smith(random_polymatrix<K>(f, rows, cols, rng() % 3, rng));
        }
    }
}

TEST_CASE_TEMPLATE("invariant factors survive unimodular transforms", K, Rational, Zp) {
    const FieldSpec f = std::is_same_v<K, Zp> ? F3 : Q;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 1 + rng() % 3;
        const PolyMatrix<K> g = random_polymatrix<K>(f, n, n, rng() % 3, rng);
        const PolyMatrix<K> u = random_unimodular<K>(f, n, rng);
        const PolyMatrix<K> v = random_unimodular<K>(f, n, rng);
        REQUIRE(is_unimodular(u));
        CHECK(invariant_factors(u * g * v) == invariant_factors(g));
        CHECK(normal_rank(u * g * v) == normal_rank(g));
    }
}

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

#include <set>

#include "doctest.h"
#include "lrp/oracle.hpp"
#include "support.hpp"

using namespace lrp;
using namespace lrp::testing;

namespace {

std::set<std::vector<std::uint32_t>> keys_of(const std::vector<WeierstrassStructure<Zp>>& v) {
    std::set<std::vector<std::uint32_t>> out;
    for (const auto& s : v) out.insert(structure_key(s));
    return out;
}

}  // namespace

TEST_CASE("structure counts") {
    CHECK(enumerate_structures(F2, 0).size() == 1);
    CHECK(enumerate_structures(F2, 1).size() == 3);
    CHECK(enumerate_structures(F2, 2).size() == 10);
    CHECK(enumerate_structures(F2, 3).size() == 27);
    CHECK(enumerate_structures(F3, 2).size() == 17);
    const auto one = keys_of(enumerate_structures(F2, 1));
    CHECK(one == keys_of({S<Zp>(F2, {{"s", 0}}), S<Zp>(F2, {{"s + 1", 0}}), S<Zp>(F2, {{"1", 1}})}));
    const auto two = keys_of(enumerate_structures(F2, 2));
    CHECK(two.count(structure_key(S<Zp>(F2, {{"1", 0}, {"s^2 + s + 1", 0}}))));
    CHECK(two.count(structure_key(S<Zp>(F2, {{"s", 0}, {"s", 0}}))));
    CHECK(two.count(structure_key(S<Zp>(F2, {{"1", 1}, {"1", 1}}))));
    OracleOptions tight;
    tight.structure_guard = 5;
    CHECK_THROWS_AS(enumerate_structures(F2, 3, tight), InputError);
}

TEST_CASE("enumeration matches the structures of all small regular pencils") {
    struct Config {
        FieldSpec f;
        std::size_t n;
    };
    for (const Config c : {Config{F2, 1}, Config{F2, 2}, Config{F3, 1}, Config{F3, 2}}) {
        const auto listed = enumerate_structures(c.f, c.n);
        CHECK(keys_of(listed).size() == listed.size());
        std::set<std::vector<std::uint32_t>> seen;
        const std::uint64_t p = c.f.characteristic();
        const std::uint64_t total = saturating_pow(p, 2 * c.n * c.n);
        for (std::uint64_t k = 0; k < total; ++k) {
            Pencil<Zp> a = Pencil<Zp>::zero(c.f, c.n);
            std::uint64_t rest = k;
            for (Matrix<Zp>* m : {&a.A0, &a.A1})
                for (std::size_t i = 0; i < c.n; ++i)
                    for (std::size_t j = 0; j < c.n; ++j, rest /= p)
                        (*m)(i, j) = Zp::make(c.f, static_cast<std::int64_t>(rest % p));
            if (const auto s = try_compute_structure(a)) seen.insert(structure_key(*s));
        }
        CHECK(seen == keys_of(listed));
    }
}

TEST_CASE("pencil table") {
    const PencilTable& t = PencilTable::get(F3, 2);
    CHECK(t.size() == 6561);
    CHECK(&t == &PencilTable::get(F3, 2));
    for (std::uint64_t k = 0; k < t.size(); k += 37) {
        const Pencil<Zp> a = t.decode(k);
        CHECK(t.encode(a) == k);
        CHECK(t.rank(k) == normal_rank(a));
        const auto s = try_compute_structure(a);
        if (s) {
            REQUIRE(t.structure_id(k) >= 0);
            CHECK(t.structures()[static_cast<std::size_t>(t.structure_id(k))] == *s);
            CHECK(t.id_of(*s) == t.structure_id(k));
        } else {
            CHECK(t.structure_id(k) == -1);
        }
        const std::uint64_t other = (k * 7919 + 13) % t.size();
        CHECK(t.decode(t.add(k, other)) == add(a, t.decode(other)));
    }
    const PencilTable& t2 = PencilTable::get(F2, 2);
    CHECK(t2.decode(t2.add(5, 9)) == add(t2.decode(5), t2.decode(9)));
    OracleOptions tight;
    tight.guard = 1000;
    CHECK_THROWS_AS(PencilTable::get(F3, 3, tight), InputError);
}

TEST_CASE("exhaustive perturbation search") {
    const auto a = jordan_a<Zp>(F2);
    const auto sb = compute_structure(jordan_b<Zp>(F2));
    const auto p = exhaustive_exists(a, sb, 1);
    REQUIRE(p.has_value());
    CHECK(normal_rank(*p) <= 1);
    CHECK(compute_structure(add(a, *p)) == sb);
    CHECK(compute_structure(add(a, jordan_p<Zp>(F2))) == sb);

    const auto zero = exhaustive_exists(a, compute_structure(a), 0);
    REQUIRE(zero.has_value());
    CHECK(*zero == Pencil<Zp>::zero(F2, 3));

    const auto far = S<Zp>(F2, {{"1", 0}, {"1", 0}, {"1", 3}});
    CHECK_FALSE(check_interlacing(compute_structure(a), far, 1));
    CHECK_FALSE(exhaustive_exists(a, far, 1).has_value());
}

TEST_CASE("exhaustive search agrees with a direct table scan") {
    for (std::size_t n = 2; n <= 3; ++n) {
        const PencilTable& t = PencilTable::get(F2, n);
        const auto& all = t.structures();
        for (std::size_t r = 1; r < n; ++r)
            for (const auto& sa : all) {
                const Pencil<Zp> a = weierstrass_canonical(sa);
                const std::uint64_t ia = t.encode(a);
                std::vector<bool> reach(all.size(), false);
                for (std::uint64_t k = 0; k < t.size(); ++k) {
                    if (t.rank(k) > r) continue;
                    const std::int32_t id = t.structure_id(t.add(ia, k));
                    if (id >= 0) reach[static_cast<std::size_t>(id)] = true;
                }
                for (std::size_t j = 0; j < all.size(); ++j) {
                    const auto p = exhaustive_exists(a, all[j], r);
                    CHECK(p.has_value() == reach[j]);
                    if (p) {
                        CHECK(normal_rank(*p) <= r);
                        CHECK(compute_structure(add(a, *p)) == all[j]);
                    }
                }
            }
    }
}

TEST_CASE("reachable determinants") {
    const auto a = jordan_a<Zp>(F3);
    const auto dets = reachable_determinants(a, 1);
    CHECK(std::is_sorted(dets.begin(), dets.end()));
    CHECK(std::binary_search(dets.begin(), dets.end(), P<Zp>(F3, "s^3 + s^2 + s")));
    CHECK(std::binary_search(dets.begin(), dets.end(), P<Zp>(F3, "s")));
    CHECK_FALSE(std::binary_search(dets.begin(), dets.end(), P<Zp>(F3, "s^3 - 1")));
    const auto sa = compute_structure(a);
    for (const auto& p : dets) CHECK(check_placement(sa, p, 1));
    CHECK(reachable_determinants(a, 0) == std::vector{P<Zp>(F3, "s^3")});

    for (std::size_t n = 2; n <= 3; ++n) {
        const PencilTable& t = PencilTable::get(F2, n);
        for (const auto& s : t.structures()) {
            const Pencil<Zp> b = weierstrass_canonical(s);
            const std::uint64_t ib = t.encode(b);
            std::set<Poly<Zp>> direct;
            for (std::uint64_t k = 0; k < t.size(); ++k)
                if (t.rank(k) <= 1 && t.structure_id(t.add(ib, k)) >= 0) direct.insert(pencil_det(t.decode(t.add(ib, k))).monic());
            CHECK(reachable_determinants(b, 1) == std::vector<Poly<Zp>>(direct.begin(), direct.end()));
        }
    }
}

TEST_CASE("sweeps") {
    const auto f3 = theorem_sweep(F3, 2, 1);
    CHECK(f3.cases.size() == 17 * 17);
    CHECK(f3.necessity_violations == 0);
    CHECK(f3.sufficiency_violations == 0);
    CHECK(f3.cascade_violations == 0);
    CHECK(f3.unverified_witnesses == 0);

    const auto full = theorem_sweep(F2, 2, 2);
    for (const auto& c : full.cases) {
        CHECK(c.predicted);
        CHECK(c.found);
    }

    const auto r0 = theorem_sweep(F2, 1, 0);
    REQUIRE(r0.cases.size() == 9);
    for (const auto& c : r0.cases) {
        const bool same = c.source == c.target;
        CHECK(c.predicted == same);
        CHECK(c.found == same);
        if (c.found) CHECK(*c.witness == Pencil<Zp>::zero(F2, 1));
    }

    for (std::size_t r = 1; r <= 2; ++r) {
        const auto rep = theorem_sweep(F2, 3, r);
        CHECK(rep.necessity_violations == 0);
        CHECK(rep.sufficiency_violations == 0);
        CHECK(rep.cascade_violations == 0);
        std::size_t agree = 0;
        for (const auto& c : rep.cases) {
            agree += c.predicted == c.found;
            CHECK(c.witness.has_value() == c.found);
            if (c.found) {
                CHECK(c.witness_verified);
                CHECK(normal_rank(*c.witness) <= r);
                CHECK(compute_structure(add(weierstrass_canonical(rep.structures[c.source]), *c.witness)) ==
                      rep.structures[c.target]);
            }
        }
        CHECK(agree == rep.agreements);
    }
}

TEST_CASE("sweeps do not depend on the worker count") {
    OracleOptions many;
    many.jobs = 4;
    const auto a = theorem_sweep(F2, 3, 1);
    const auto b = theorem_sweep(F2, 3, 1, many);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].found == b.cases[i].found);
        CHECK(a.cases[i].witness == b.cases[i].witness);
    }
    CHECK(a.open_found == b.open_found);
}

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

// End-to-end acceptance run. Prints one PASS or FAIL line per criterion and
// exits nonzero if any criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "lrp/cli.hpp"
#include "lrp/oracle.hpp"
#include "lrp/synth.hpp"
#include "support.hpp"

using namespace lrp;
using namespace lrp::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) note << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

std::string data(const std::string& name) { return std::string(LRP_DATA_DIR) + "/" + name; }

int cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    return cli::run(std::vector<std::string>(args), out, err);
}

template <FieldElement K>
void jordan_case(const FieldSpec& f, Outcome& o) {
    const std::string tag = f.to_string();
    const Pencil<K> a(M<K>(f, {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}), Matrix<K>::identity(f, 3));
    const Pencil<K> b(M<K>(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}), M<K>(f, {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}));
    const Pencil<K> p(M<K>(f, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}), M<K>(f, {{0, 0, 0}, {0, 0, 0}, {0, 0, -1}}));
    const auto sa = compute_structure(a);
    const auto sb = compute_structure(b);
    o.expect(sa == S<K>(f, {{"1", 0}, {"s", 0}, {"s^2", 0}}), tag + " structure of A");
    o.expect(sb == S<K>(f, {{"1", 0}, {"1", 0}, {"s", 2}}), tag + " structure of B");
    const auto v = verdict(sa, sb, 1);
    o.expect(v.kind == VerdictKind::Feasible, tag + " verdict");
    o.expect(v.route && v.route->kind == RouteKind::UnspectralPoint && v.route->point.value &&
                 *v.route->point.value == K::make(f, 1),
             tag + " unspectral point c = 1");
    o.expect(normal_rank(p) == 1, tag + " rank of the explicit perturbation");
    o.expect(compute_structure(add(a, p)) == sb, tag + " structure of A + P");
    o.expect(verify_certificate(a, Certificate<K>{p, 1, sb, Route<K>::search(), 0}), tag + " certificate");
}

Outcome criterion_jordan() {
    Outcome o;
    jordan_case<Rational>(Q, o);
    jordan_case<Zp>(F2, o);
    for (const std::string sfx : {"", "_f2"}) {
        o.expect(cli({"analyze", data("jordan3_A" + sfx + ".json")}) == 0, "cli analyze" + sfx);
        o.expect(cli({"check", "--rank", "1", data("jordan3_A" + sfx + ".json"), data("jordan3_B" + sfx + ".json")}) == 0,
                 "cli check" + sfx);
        o.expect(cli({"verify", data("jordan3_A" + sfx + ".json"), data("jordan3_P_cert" + sfx + ".json")}) == 0,
                 "cli verify" + sfx);
    }
    if (o.ok) o.note << "structures, verdict (c = 1) and explicit P confirmed over Q and F_2, library and CLI";
    return o;
}

Outcome criterion_deflation() {
    Outcome o;
    const auto sa = S<Zp>(F2, {{"1", 0}, {"1", 0}, {"1", 0}, {"s^2 + s", 0}, {"s^3 + s^2", 0}});
    const auto sb = S<Zp>(F2, {{"1", 0}, {"1", 0}, {"1", 0}, {"s + 1", 0}, {"s^2 + s", 2}});
    const SpectralPoint<Zp> one{P<Zp>(F2, "s + 1")};
    const std::vector<std::size_t> shared{0, 0, 0, 1, 1};
    o.expect(partial_multiplicities(sa, one) == shared && partial_multiplicities(sb, one) == shared,
             "shared multiplicities at s - 1");
    o.expect(!find_unspectral_point(sa, sb), "every point of F_2 and infinity is spectral");
    const auto v = verdict(sa, sb, 1);
    o.expect(v.kind == VerdictKind::Feasible, "verdict");
    o.expect(v.route && v.route->kind == RouteKind::Deflation && v.route->lambda0 == one, "deflation at s - 1");
    std::mt19937_64 rng(417);
    for (const Pencil<Zp>& a : {weierstrass_canonical(sa), disguised(sa, rng)}) {
        const auto cert = synthesize(a, sb, 1);
        o.expect(cert.has_value(), "synthesize returned a certificate");
        if (!cert) continue;
        o.expect(verify_certificate(a, *cert), "certificate verifies");
        o.expect(normal_rank(cert->P) <= 1 && compute_structure(add(a, cert->P)) == sb, "independent recheck");
    }
    o.expect(cli({"check", "--rank", "1", data("deflation5_A.json"), data("deflation5_B.json")}) == 0, "cli check");
    if (o.ok) o.note << "deflation route found and certificates verified for canonical and disguised A";
    return o;
}

struct SweepTotals {
    std::size_t cases = 0, necessity = 0, sufficiency = 0, unverified = 0, cascade = 0, open_found = 0,
                open_not_found = 0;
};

const SweepTotals& sweep_totals() {
    static const SweepTotals totals = [] {
        SweepTotals t;
        const std::tuple<std::uint32_t, std::size_t, std::size_t> configs[] = {
            {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}};
        for (const auto& [p, n, r] : configs) {
            const auto rep = theorem_sweep(FieldSpec::prime(p), n, r);
            t.cases += rep.cases.size();
            t.necessity += rep.necessity_violations;
            t.sufficiency += rep.sufficiency_violations;
            t.unverified += rep.unverified_witnesses;
            t.cascade += rep.cascade_violations;
            t.open_found += rep.open_found;
            t.open_not_found += rep.open_not_found;
        }
        return t;
    }();
    return totals;
}

Outcome criterion_necessity() {
    Outcome o;
    const auto& t = sweep_totals();
    o.expect(t.necessity == 0, "found without interlacing");
    o.expect(t.unverified == 0, "stored witness failed verification");
    o.note << t.cases << " cases, " << t.necessity << " necessity violations, " << t.unverified
           << " unverified witnesses, " << t.cascade << " cascade violations";
    return o;
}

Outcome criterion_sufficiency() {
    Outcome o;
    const auto& t = sweep_totals();
    o.expect(t.sufficiency == 0, "route available but nothing found");
    o.note << t.sufficiency << " sufficiency violations; open territory: " << t.open_found << " found, "
           << t.open_not_found << " not found";
    return o;
}

std::vector<Poly<Zp>> monic_polys(const FieldSpec& f, std::size_t lo, std::size_t hi) {
    std::vector<Poly<Zp>> out;
    for (std::size_t d = lo; d <= hi; ++d)
        for (const auto& p : MonicPolys(f, d)) out.push_back(p);
    return out;
}

Outcome criterion_placement() {
    Outcome o;
    const auto polys = monic_polys(F5, 1, 3);
    o.expect(polys.size() == 155, "155 monic polynomials");
    std::size_t placed = 0, refused = 0;
    std::mt19937_64 rng(5);
    // Twenty generic pencils, then twenty with repeated and infinite eigenvalues.
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Pencil<Zp> a = seed < 20 ? random_regular<Zp>(F5, 3, seed) : disguised(random_structure<Zp>(F5, 3, rng), rng);
        const auto sa = compute_structure(a);
        for (std::size_t r = 1; r <= 2; ++r)
            for (const auto& p : polys) {
                if (!check_placement(sa, p, r)) {
                    ++refused;
                    continue;
                }
                SearchOptions opt;
                opt.seed = seed;
                const auto cert = synthesize_placement(a, p, r, opt);
                o.expect(cert.has_value(), "placement certificate for " + to_string(p));
                if (!cert) continue;
                const Poly<Zp> d = pencil_det(add(a, cert->P));
                o.expect(normal_rank(cert->P) <= r && !d.is_zero() && d.monic() == p, "det(A + P) = k p");
                ++placed;
            }
    }
    // Refusals are checked exhaustively on smaller fields.
    std::size_t exhaustive = 0;
    const std::pair<std::uint32_t, std::size_t> small[] = {{2, 3}, {3, 2}};
    for (const auto& [q, n] : small) {
        const FieldSpec f = FieldSpec::prime(q);
        const auto ps = monic_polys(f, 1, n);
        for (const auto& sa : enumerate_structures(f, n)) {
            const Pencil<Zp> a = weierstrass_canonical(sa);
            for (std::size_t r = 1; r <= 2; ++r) {
                const auto reach = reachable_determinants(a, r);
                const std::set<Poly<Zp>> reachable(reach.begin(), reach.end());
                for (const auto& p : ps) {
                    if (check_placement(sa, p, r)) continue;
                    ++exhaustive;
                    o.expect(!reachable.contains(p), "refused determinant reachable over " + f.to_string());
                }
            }
        }
    }
    o.note << placed << " placements certified over F_5, " << refused << " refused; " << exhaustive
           << " refusals confirmed exhaustively over F_2 (n = 3) and F_3 (n = 2)";
    return o;
}

template <FieldElement K>
void smith_suite(const FieldSpec& f, std::uint64_t seed, Outcome& o) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const std::size_t deg = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        const auto g = random_polymatrix<K>(f, rows, cols, deg, rng);
        const auto res = smith_form(g);
        const auto& gam = res.invariant_factors;
        o.expect(res.U * g * res.V == res.S, f.to_string() + " U G V = S");
        o.expect(is_unimodular(res.U) && is_unimodular(res.V), f.to_string() + " unimodular transforms");
        bool diag = true;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const Poly<K> want = i == j && i < gam.size() ? gam[i] : Poly<K>(f);
                diag = diag && res.S(i, j) == want;
            }
        o.expect(diag, f.to_string() + " S is diag(gamma)");
        bool chain = true;
        for (std::size_t i = 0; i < gam.size(); ++i) {
            chain = chain && gam[i].is_monic();
            if (i > 0) chain = chain && divides(gam[i - 1], gam[i]);
        }
        o.expect(chain, f.to_string() + " divisibility chain");
        const auto dk = determinantal_divisors(g);
        bool minors = dk.size() == gam.size() && gam.size() == normal_rank(g);
        Poly<K> prod = Poly<K>::one(f);
        for (std::size_t k = 0; minors && k < gam.size(); ++k) {
            prod = prod * gam[k];
            minors = prod == dk[k];
        }
        o.expect(minors, f.to_string() + " products match determinantal divisors");
        if (!o.ok) return;
    }
}

Outcome criterion_smith() {
    Outcome o;
    smith_suite<Rational>(Q, 1, o);
    smith_suite<Zp>(F2, 2, o);
    smith_suite<Zp>(F3, 3, o);
    smith_suite<Zp>(F7, 7, o);
    if (o.ok) o.note << "1000 matrices each over Q, F_2, F_3, F_7";
    return o;
}

Outcome criterion_predicates() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto all = enumerate_structures(F2, n);
        for (const auto& a : all)
            for (const auto& b : all)
                for (std::size_t r = 0; r <= n + 1; ++r) {
                    const bool il = check_interlacing(a, b, r);
                    o.expect(il == check_multiplicity_form(a, b, r), "interlacing equals multiplicity form");
                    o.expect(!il || check_weyr_form(a, b, r), "interlacing implies Weyr form");
                    o.expect(!check_weyr_form(a, b, r) || geometric_bound(a, b, r), "Weyr form implies geometric bound");
                    o.expect(il == check_interlacing(b, a, r), "symmetry");
                    o.expect(!il || check_interlacing(a, b, r + 1), "monotone in r");
                    ++checked;
                }
    }
    o.note << checked << " (structure pair, r) combinations";
    return o;
}

template <FieldElement K>
std::vector<K> probe_points(const FieldSpec& f) {
    std::vector<K> out;
    if (f.is_finite()) {
        for (std::uint32_t v = 0; v < f.characteristic(); ++v) out.push_back(K::make(f, v));
    } else {
        for (std::int64_t v = -3; v <= 3; ++v) out.push_back(K::make(f, v));
    }
    return out;
}

template <FieldElement K>
SpectralPoint<K> linear_point(const FieldSpec& f, const K& mu) {
    return {Poly<K>::s(f) - Poly<K>::constant(f, mu)};
}

template <FieldElement K>
void transform_suite(const FieldSpec& f, std::uint64_t seed, Outcome& o) {
    std::mt19937_64 rng(seed);
    const auto inf = SpectralPoint<K>::infinity();
    const auto zero = linear_point(f, K::make(f, 0));
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const auto s0 = random_structure<K>(f, n, rng);
        const Pencil<K> a = t % 4 == 0 ? random_regular<K>(f, n, rng()) : disguised(s0, rng);
        const auto sa = compute_structure(a);
        const Matrix<K> q = random_invertible_rng<K>(f, n, rng);
        const Matrix<K> r = random_invertible_rng<K>(f, n, rng);
        const K c = random_scalar<K>(f, rng, 3);
        const Pencil<K> e = apply_equiv(a, q, r);
        o.expect(compute_structure(e) == sa, f.to_string() + " strict equivalence invariance");
        o.expect(pencil_det(e) == q.det() * r.det() * pencil_det(a), f.to_string() + " det(QAR)");
        const auto ss = compute_structure(shift(a, c));
        o.expect(ss == shift_structure(sa, c), f.to_string() + " shifted structure");
        for (const K& mu : probe_points<K>(f))
            o.expect(partial_multiplicities(ss, linear_point(f, mu)) == partial_multiplicities(sa, linear_point(f, mu + c)),
                     f.to_string() + " shift relabels finite points");
        o.expect(partial_multiplicities(ss, inf) == partial_multiplicities(sa, inf), f.to_string() + " shift keeps infinity");
        const auto sr = compute_structure(reverse(a));
        o.expect(sr == reverse_structure(sa), f.to_string() + " reversed structure");
        o.expect(partial_multiplicities(sr, inf) == partial_multiplicities(sa, zero) &&
                     partial_multiplicities(sr, zero) == partial_multiplicities(sa, inf),
                 f.to_string() + " reversal swaps 0 and infinity");
        if (!o.ok) return;
    }
}

Outcome criterion_transforms() {
    Outcome o;
    transform_suite<Rational>(Q, 11, o);
    transform_suite<Zp>(F2, 12, o);
    transform_suite<Zp>(F3, 13, o);
    transform_suite<Zp>(F5, 15, o);
    if (o.ok) o.note << "200 samples each over Q, F_2, F_3, F_5";
    return o;
}

}  // namespace

int main() {
    struct Item {
        int id;
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    const Item items[] = {
        {1, "three-by-three rank-one example over Q and F_2", 1, criterion_jordan},
        {2, "five-by-five deflation example over F_2", 10, criterion_deflation},
        {3, "exhaustive sweep: necessity", 600, criterion_necessity},
        {4, "exhaustive sweep: sufficiency under a route", 600, criterion_sufficiency},
        {5, "determinant placement roundtrip", 900, criterion_placement},
        {6, "Smith form properties", 0, criterion_smith},
        {7, "predicate equivalence", 0, criterion_predicates},
        {8, "transform invariance", 0, criterion_transforms},
    };
    bool all = true;
    double sweep_seconds = 0;
    for (const auto& it : items) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = it.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        // Both sweep criteria share one run; the limit covers the total.
        if (it.id == 3 || it.id == 4) secs = (sweep_seconds += secs);
        const bool in_time = it.limit == 0 || secs < it.limit;
        const bool pass = o.ok && in_time;
        all = all && pass;
        std::printf("%s %d %s (%.2f s%s): %s\n", pass ? "PASS" : "FAIL", it.id, it.name, secs,
                    in_time ? "" : ", over the time limit", o.note.str().c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}

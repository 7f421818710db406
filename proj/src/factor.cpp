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

#include "lrp/factor.hpp"

#include <map>
#include <random>

namespace lrp {

MonicPolys::MonicPolys(const FieldSpec& f, std::size_t d) : field_(f), degree_(d), count_(1) {
    if (!f.is_finite()) throw InputError("monic polynomial enumeration needs a finite field");
    for (std::size_t i = 0; i < d; ++i) {
        if (count_ > UINT64_MAX / f.characteristic()) throw InputError("too many monic polynomials to enumerate");
        count_ *= f.characteristic();
    }
}

Poly<Zp> MonicPolys::operator[](std::uint64_t index) const {
    const std::uint32_t p = field_.characteristic();
    Poly<Zp>::Coeffs c(degree_ + 1, Zp(0, p));
    c[degree_] = Zp(1, p);
    // the top coefficient below the leading one is the most significant digit
    for (std::size_t i = 0; i < degree_; ++i) {
        c[i] = Zp(static_cast<std::uint32_t>(index % p), p);
        index /= p;
    }
    return Poly<Zp>(field_, std::move(c));
}

namespace {

using FactorMap = std::map<Poly<Zp>, std::size_t>;

// -- prime fields ------------------------------------------------------------

void trial_division(Poly<Zp> f, std::size_t mult, FactorMap& out) {
    const FieldSpec field = f.field();
    for (std::size_t d = 1; 2 * d <= *f.degree(); ++d) {
        for (const Poly<Zp>& g : enumerate_monic_polys(field, d)) {
            if (2 * d > *f.degree()) break;
            for (;;) {
                auto [q, r] = divmod(f, g);
                if (!r.is_zero()) break;
                out[g] += mult;
                f = std::move(q);
            }
        }
    }
    if (*f.degree() > 0) out[f] += mult;
}

Poly<Zp> pth_root(const Poly<Zp>& f) {
    const std::uint32_t p = f.field().characteristic();
    Poly<Zp>::Coeffs r;
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); i += p) r.push_back(c[i]);
    return Poly<Zp>(f.field(), std::move(r));
}

// Square-free decomposition in characteristic p: pairs (g, m), g square-free.
void squarefree_fp(const Poly<Zp>& f, std::size_t scale, std::vector<std::pair<Poly<Zp>, std::size_t>>& out) {
    const std::uint32_t p = f.field().characteristic();
    const Poly<Zp> df = derivative(f);
    if (df.is_zero()) {
        squarefree_fp(pth_root(f), scale * p, out);
        return;
    }
    Poly<Zp> c = gcd(f, df);
    Poly<Zp> w = divexact(f, c);
    std::size_t i = 1;
    while (!w.is_one()) {
        Poly<Zp> y = gcd(w, c);
        Poly<Zp> z = divexact(w, y);
        if (!z.is_one()) out.emplace_back(z, i * scale);
        ++i;
        c = divexact(c, y);
        w = std::move(y);
    }
    if (!c.is_one()) squarefree_fp(pth_root(c), scale * p, out);
}

void equal_degree_split(const Poly<Zp>& g, std::size_t d, std::mt19937_64& rng, std::size_t mult, FactorMap& out) {
    const std::size_t n = *g.degree();
    if (n == d) {
        out[g] += mult;
        return;
    }
    const FieldSpec field = g.field();
    const std::uint32_t p = field.characteristic();
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    mpz_class half = 0;
    if (p != 2) {
        mpz_ui_pow_ui(half.get_mpz_t(), p, d);
        half = (half - 1) / 2;
    }
    for (;;) {
        Poly<Zp>::Coeffs a(n);
        for (auto& x : a) x = Zp(coeff(rng), p);
        const Poly<Zp> ap(field, std::move(a));
        if (ap.is_zero() || *ap.degree() == 0) continue;
        Poly<Zp> b(field);
        if (p == 2) {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            Poly<Zp> t = ap % g;
            b = t;
            for (std::size_t k = 1; k < d; ++k) {
                t = (t * t) % g;
                b += t;
            }
        } else {
            b = powmod(ap, half, g) - Poly<Zp>::one(field);
        }
        const Poly<Zp> h = gcd(b, g);
        if (h.is_zero() || *h.degree() == 0 || *h.degree() == n) continue;
        equal_degree_split(h, d, rng, mult, out);
        equal_degree_split(divexact(g, h), d, rng, mult, out);
        return;
    }
}

void distinct_degree(Poly<Zp> f, std::size_t mult, FactorMap& out) {
    const FieldSpec field = f.field();
    const mpz_class p = field.characteristic();
    std::mt19937_64 rng(0x5eed5eedULL);
    const Poly<Zp> x = Poly<Zp>::s(field);
    Poly<Zp> h = x % f;
    for (std::size_t d = 1; 2 * d <= *f.degree(); ++d) {
        h = powmod(h, p, f);
        Poly<Zp> g = gcd(h - x, f);
        if (!g.is_one()) {
            equal_degree_split(g, d, rng, mult, out);
            f = divexact(f, g);
            h = h % f;
        }
    }
    if (*f.degree() > 0) out[f] += mult;
}

bool small_enumeration(const FieldSpec& f, std::size_t degree) {
    std::uint64_t total = 0, term = 1;
    for (std::size_t d = 1; 2 * d <= degree; ++d) {
        if (term > 100000 / f.characteristic()) return false;
        term *= f.characteristic();
        total += term;
        if (total > 100000) return false;
    }
    return true;
}

std::vector<Factor<Zp>> factor_prime(const Poly<Zp>& p) {
    FactorMap out;
    const Poly<Zp> f = p.monic();
    if (*f.degree() > 0) {
        if (small_enumeration(f.field(), *f.degree())) {
            trial_division(f, 1, out);
        } else {
            std::vector<std::pair<Poly<Zp>, std::size_t>> parts;
            squarefree_fp(f, 1, parts);
            for (auto& [g, m] : parts) distinct_degree(g, m, out);
        }
    }
    std::vector<Factor<Zp>> r;
    for (auto& [g, m] : out) r.push_back({g, m});
    return r;
}

// -- rationals -------------------------------------------------------------

using QPoly = Poly<Rational>;
const FieldSpec kQ = FieldSpec::rationals();

// Primitive integer coefficients of a nonzero rational polynomial.
std::vector<mpz_class> integer_primitive(const QPoly& f) {
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
    std::vector<mpz_class> v;
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_class t = c.value().get_num() * (l / c.value().get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
        v.push_back(t);
    }
    for (auto& x : v) x /= g;
    return v;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    if (n == 0) throw InvariantViolation("divisors of zero");
    if (n > mpz_class("100000000000000")) throw InputError("integer too large for desk-scale rational factorization");
    std::vector<std::pair<mpz_class, unsigned>> primes;
    for (mpz_class d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) primes.emplace_back(d, e);
    }
    if (n > 1) primes.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (auto& [q, e] : primes) {
        const std::size_t base = divs.size();
        mpz_class pw = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pw *= q;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

Rational eval_q(const QPoly& f, const mpq_class& x) { return f(Rational(x)); }

// Interpolating polynomial through (x_j, y_j), Newton form.
QPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
    const std::size_t m = xs.size();
    std::vector<mpq_class> dd(ys.begin(), ys.end());
    for (std::size_t k = 1; k < m; ++k)
        for (std::size_t j = m - 1; j >= k; --j) {
            dd[j] = (dd[j] - dd[j - 1]) / mpq_class(xs[j] - xs[j - k]);
            if (j == k) break;
        }
    QPoly r(kQ);
    for (std::size_t k = m; k-- > 0;) {
        r = r * QPoly(kQ, QPoly::Coeffs{Rational(mpq_class(-xs[k])), Rational(1)}) +
            QPoly::constant(kQ, Rational(dd[k]));
    }
    return r;
}

bool integral(const QPoly& f) {
    for (const auto& c : f.coeffs())
        if (c.value().get_den() != 1) return false;
    return true;
}

// Splits off one factor of degree d with Kronecker's method, or returns nullopt.
std::optional<QPoly> kronecker_factor(const QPoly& f, std::size_t d) {
    std::vector<mpz_class> xs, ys;
    for (long k = 0; xs.size() < d + 1; ++k) {
        const long x = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
        const Rational v = eval_q(f, mpq_class(x));
        if (v.is_zero()) continue;
        xs.emplace_back(x);
        ys.push_back(v.value().get_num());
    }
    std::vector<std::vector<mpz_class>> choices;
    double combos = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        std::vector<mpz_class> ds = positive_divisors(ys[j]);
        if (j > 0) {
            const std::size_t m = ds.size();
            for (std::size_t i = 0; i < m; ++i) ds.push_back(-ds[i]);
        }
        combos *= static_cast<double>(ds.size());
        choices.push_back(std::move(ds));
    }
    if (combos > 5e6) throw InputError("rational factorization beyond desk-scale limits");
    std::vector<std::size_t> idx(choices.size(), 0);
    std::vector<mpz_class> vals(choices.size());
    for (;;) {
        for (std::size_t j = 0; j < idx.size(); ++j) vals[j] = choices[j][idx[j]];
        QPoly g = interpolate(xs, vals);
        if (g.degree() == d && integral(g) && divides(g, f)) return g.monic();
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
        if (j == idx.size()) return std::nullopt;
    }
}

// Irreducible factors of a square-free monic rational polynomial.
void split_squarefree_q(QPoly f, std::size_t mult, std::map<QPoly, std::size_t>& out) {
    if (f.coeff(0).is_zero()) {
        out[QPoly::s(kQ)] += mult;
        f = divexact(f, QPoly::s(kQ));
    }
    if (*f.degree() == 0) return;
    // rational roots u/v with u | a0 and v | a_n of the primitive integer form
    {
        const auto ic = integer_primitive(f);
        const auto us = positive_divisors(ic.front());
        const auto vs = positive_divisors(ic.back());
        for (const auto& u : us)
            for (const auto& v : vs)
                for (int sign : {1, -1}) {
                    if (*f.degree() == 0) break;
                    mpq_class root(sign * u, v);
                    root.canonicalize();
                    if (root.get_den() != v) continue;
                    if (eval_q(f, root).is_zero()) {
                        const QPoly lin(kQ, QPoly::Coeffs{Rational(mpq_class(-root)), Rational(1)});
                        out[lin] += mult;
                        f = divexact(f, lin);
                    }
                }
    }
    for (std::size_t d = 2; *f.degree() > 0 && 2 * d <= *f.degree(); ++d) {
        while (2 * d <= *f.degree()) {
            auto g = kronecker_factor(f, d);
            if (!g) break;
            out[*g] += mult;
            f = divexact(f, *g);
        }
    }
    if (*f.degree() > 0) out[f] += mult;
}

std::vector<Factor<Rational>> factor_rational(const QPoly& p) {
    std::map<QPoly, std::size_t> out;
    const QPoly f = p.monic();
    if (*f.degree() > 0) {
        // Yun's square-free decomposition (characteristic zero)
        const QPoly df = derivative(f);
        QPoly b = gcd(f, df);
        QPoly c = divexact(f, b);
        QPoly dd = divexact(df, b) - derivative(c);
        for (std::size_t i = 1; *c.degree() > 0; ++i) {
            QPoly y = gcd(c, dd);
            if (*y.degree() > 0) split_squarefree_q(y, i, out);
            c = divexact(c, y);
            dd = divexact(dd, y) - derivative(c);
        }
    }
    std::vector<Factor<Rational>> r;
    for (auto& [g, m] : out) r.push_back({g, m});
    return r;
}

}  // namespace

template <FieldElement K>
std::vector<Factor<K>> irreducible_factors(const Poly<K>& p) {
    if (p.is_zero()) throw InputError("factorization of the zero polynomial");
    if constexpr (std::is_same_v<K, Zp>)
        return factor_prime(p);
    else
        return factor_rational(p);
}

template <FieldElement K>
bool is_irreducible(const Poly<K>& p) {
    if (p.is_zero() || *p.degree() == 0) return false;
    const auto f = irreducible_factors(p);
    return f.size() == 1 && f.front().multiplicity == 1;
}

template std::vector<Factor<Rational>> irreducible_factors(const Poly<Rational>&);
template std::vector<Factor<Zp>> irreducible_factors(const Poly<Zp>&);
template bool is_irreducible(const Poly<Rational>&);
template bool is_irreducible(const Poly<Zp>&);

}  // namespace lrp

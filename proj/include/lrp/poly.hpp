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
 * @file poly.hpp
 * @brief Dense univariate polynomials over an exact field.
 *
 * Coefficients are stored lowest degree first and kept trimmed, so the zero
 * polynomial is the empty list. degree() returns an empty optional for zero,
 * which orders below every real degree and never takes part in arithmetic.
 */

#ifndef LRP_POLY_HPP
#define LRP_POLY_HPP

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lrp/errors.hpp"
#include "lrp/field.hpp"

namespace lrp {

template <FieldElement K>
class Poly {
   public:
    using Coeffs = boost::container::small_vector<K, 6>;

    explicit Poly(FieldSpec f) : field_(f) {}
    Poly(FieldSpec f, Coeffs c) : field_(f), c_(std::move(c)) { trim(); }
    Poly(FieldSpec f, std::span<const K> c) : field_(f), c_(c.begin(), c.end()) { trim(); }

    static Poly constant(FieldSpec f, K c) { return Poly(f, Coeffs{std::move(c)}); }
    static Poly one(FieldSpec f) { return constant(f, K::make(f, 1)); }
    /// c * s^k
    static Poly monomial(FieldSpec f, K c, std::size_t k) {
        Coeffs v(k + 1, K::make(f, 0));
        v[k] = std::move(c);
        return Poly(f, std::move(v));
    }
    static Poly s(FieldSpec f) { return monomial(f, K::make(f, 1), 1); }
    /// Coefficients lowest degree first, e.g. from_ints(f, {1, 0, 1}) = s^2 + 1.
    static Poly from_ints(FieldSpec f, std::initializer_list<std::int64_t> c) {
        Coeffs v;
        for (auto x : c) v.push_back(K::make(f, x));
        return Poly(f, std::move(v));
    }

    const FieldSpec& field() const noexcept { return field_; }
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Nonzero constant.
    bool is_unit() const noexcept { return c_.size() == 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

    std::span<const K> coeffs() const noexcept { return {c_.data(), c_.size()}; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K::make(field_, 0); }
    /// Throws InputError on the zero polynomial.
    const K& leading() const {
        if (c_.empty()) throw InputError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    K operator()(const K& x) const {
        K acc = K::make(field_, 0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly monic() const {
        if (c_.empty() || c_.back().is_one()) return *this;
        const K inv = c_.back().inverse();
        Poly r = *this;
        for (auto& x : r.c_) x *= inv;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K::make(field_, 0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K::make(field_, 0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const K& k) {
        if (k.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= k;
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Poly operator*(Poly a, const K& k) { return a *= k; }
    friend Poly operator*(const K& k, Poly a) { return a *= k; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        if (a.c_.empty() || b.c_.empty()) return Poly(a.field_);
        Coeffs r(a.c_.size() + b.c_.size() - 1, K::make(a.field_, 0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(a.field_, std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && std::equal(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    /// Canonical total order: by degree, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    void check(const Poly& o) const {
        if (!(field_ == o.field_)) throw FieldMismatch();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldSpec field_;
    Coeffs c_;
};

template <FieldElement K>
struct DivMod {
    Poly<K> quotient;
    Poly<K> remainder;
};

/// Euclidean division. Throws InputError when b is zero.
template <FieldElement K>
DivMod<K> divmod(const Poly<K>& a, const Poly<K>& b) {
    a.check(b);
    if (b.is_zero()) throw InputError("polynomial division by zero");
    const FieldSpec& f = a.field();
    const auto db = *b.degree();
    if (a.is_zero() || *a.degree() < db) return {Poly<K>(f), a};
    const auto bc = b.coeffs();
    const K inv = bc.back().inverse();
    typename Poly<K>::Coeffs r(a.coeffs().begin(), a.coeffs().end());
    typename Poly<K>::Coeffs q(r.size() - db, K::make(f, 0));
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        const K t = r[k] * inv;
        q[k - db] = t;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= t * bc[j];
    }
    r.resize(db);
    return {Poly<K>(f, std::move(q)), Poly<K>(f, std::move(r))};
}

template <FieldElement K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).remainder;
}

/// Monic gcd; gcd(0, 0) = 0.
template <FieldElement K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    a.check(b);
    while (!b.is_zero()) {
        Poly<K> r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <FieldElement K>
struct Bezout {
    Poly<K> g;  ///< monic gcd
    Poly<K> x;  ///< g = x*a + y*b
    Poly<K> y;
};

template <FieldElement K>
Bezout<K> extended_gcd(const Poly<K>& a, const Poly<K>& b) {
    a.check(b);
    const FieldSpec& f = a.field();
    Poly<K> r0 = a, r1 = b, x0 = Poly<K>::one(f), x1(f), y0(f), y1 = Poly<K>::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<K> x2 = x0 - q * x1;
        x0 = std::move(x1);
        x1 = std::move(x2);
        Poly<K> y2 = y0 - q * y1;
        y0 = std::move(y1);
        y1 = std::move(y2);
    }
    if (r0.is_zero()) return {r0, x0, y0};
    const K inv = r0.leading().inverse();
    return {r0 * inv, x0 * inv, y0 * inv};
}

/// Quotient a / b; throws InvariantViolation when b does not divide a.
template <FieldElement K>
Poly<K> divexact(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvariantViolation("inexact polynomial division");
    return q;
}

/// a | b, with a | 0 for every a (0 | 0 included) and 0 ∤ b for b ≠ 0.
template <FieldElement K>
bool divides(const Poly<K>& a, const Poly<K>& b) {
    a.check(b);
    if (b.is_zero()) return true;
    if (a.is_zero()) return false;
    return divmod(b, a).remainder.is_zero();
}

/// p(s + c)
template <FieldElement K>
Poly<K> shift(const Poly<K>& p, const K& c) {
    const FieldSpec& f = p.field();
    const Poly<K> lin(f, typename Poly<K>::Coeffs{c, K::make(f, 1)});
    Poly<K> acc(f);
    const auto cs = p.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * lin + Poly<K>::constant(f, cs[i]);
    return acc;
}

/// Largest k with f^k | p. Requires p ≠ 0 and f monic non-constant.
template <FieldElement K>
std::size_t valuation(const Poly<K>& p, const Poly<K>& f) {
    p.check(f);
    if (p.is_zero()) throw InputError("valuation of the zero polynomial");
    if (f.is_zero() || *f.degree() == 0) throw InputError("valuation with respect to a constant");
    std::size_t k = 0;
    Poly<K> cur = p;
    for (;;) {
        auto [q, r] = divmod(cur, f);
        if (!r.is_zero()) return k;
        cur = std::move(q);
        ++k;
    }
}

/// s-adic valuation: index of the lowest nonzero coefficient.
template <FieldElement K>
std::size_t lowest_degree(const Poly<K>& p) {
    if (p.is_zero()) throw InputError("valuation of the zero polynomial");
    const auto c = p.coeffs();
    std::size_t k = 0;
    while (c[k].is_zero()) ++k;
    return k;
}

/// s^d p(1/s); requires d ≥ deg p.
template <FieldElement K>
Poly<K> reciprocal(const Poly<K>& p, std::size_t d) {
    const auto c = p.coeffs();
    if (c.size() > d + 1) throw InputError("reciprocal degree below polynomial degree");
    typename Poly<K>::Coeffs r(d + 1, K::make(p.field(), 0));
    for (std::size_t i = 0; i < c.size(); ++i) r[d - i] = c[i];
    return Poly<K>(p.field(), std::move(r));
}

template <FieldElement K>
Poly<K> derivative(const Poly<K>& p) {
    const auto c = p.coeffs();
    if (c.size() <= 1) return Poly<K>(p.field());
    typename Poly<K>::Coeffs r;
    for (std::size_t i = 1; i < c.size(); ++i) r.push_back(c[i] * K::make(p.field(), static_cast<std::int64_t>(i)));
    return Poly<K>(p.field(), std::move(r));
}

template <FieldElement K>
Poly<K> pow(Poly<K> base, std::size_t e) {
    Poly<K> r = Poly<K>::one(base.field());
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

/// base^e mod m, with e given as a GMP integer.
template <FieldElement K>
Poly<K> powmod(Poly<K> base, mpz_class e, const Poly<K>& m) {
    Poly<K> r = Poly<K>::one(base.field()) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return r;
}

}  // namespace lrp

#endif

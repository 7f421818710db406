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
 * @file field.hpp
 * @brief Exact scalars: rationals (GMP backed) and prime-field residues.
 *
 * Every algorithm in the library is a template over a scalar type satisfying
 * @ref lrp::FieldElement. Two models exist:
 *
 * - @ref lrp::Rational, an always-reduced fraction of arbitrary size;
 * - @ref lrp::Zp, a residue modulo a runtime prime p < 2^31. The residue
 *   carries its modulus so arithmetic needs no side context.
 *
 * A @ref lrp::FieldSpec names the field at runtime; containers store one so
 * that the zero polynomial or an empty matrix still knows where it lives.
 */

#ifndef LRP_FIELD_HPP
#define LRP_FIELD_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lrp/errors.hpp"

namespace lrp {

enum class FieldKind { Rationals, Prime };

class FieldSpec {
   public:
    static FieldSpec rationals() noexcept { return FieldSpec(FieldKind::Rationals, 0); }
    /// Throws InputError unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);

    FieldKind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == FieldKind::Prime; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const noexcept { return p_; }

    /// "Q" or "F_p".
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

   private:
    FieldSpec(FieldKind k, std::uint32_t p) noexcept : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t p) noexcept;

class Rational {
   public:
    Rational() = default;
    explicit Rational(std::int64_t v) : q_(static_cast<long>(v)) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational make(const FieldSpec& f, std::int64_t v);
    static Rational make(const FieldSpec& f, const mpq_class& v);
    static FieldKind kind() noexcept { return FieldKind::Rationals; }

    FieldSpec field() const noexcept { return FieldSpec::rationals(); }
    const mpq_class& value() const noexcept { return q_; }
    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return q_ == 1; }
    /// Throws InputError on zero.
    Rational inverse() const;
    std::string to_string() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

   private:
    mpq_class q_;
};

class Zp {
   public:
    Zp() = default;
    Zp(std::uint32_t value, std::uint32_t p) noexcept : v_(value % p), p_(p) {}

    static Zp make(const FieldSpec& f, std::int64_t v);
    /// Throws InputError when the denominator vanishes mod p.
    static Zp make(const FieldSpec& f, const mpq_class& v);
    static FieldKind kind() noexcept { return FieldKind::Prime; }

    FieldSpec field() const { return FieldSpec::prime(p_); }
    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    Zp inverse() const;
    std::string to_string() const { return std::to_string(v_); }

    Zp& operator+=(const Zp& o) noexcept {
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Zp& operator-=(const Zp& o) noexcept {
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Zp& operator*=(const Zp& o) noexcept {
        v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
        return *this;
    }
    Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

    friend Zp operator+(Zp a, const Zp& b) noexcept { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) noexcept { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) noexcept { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    friend Zp operator-(const Zp& a) noexcept {
        Zp r = a;
        r.v_ = a.v_ == 0 ? 0 : a.p_ - a.v_;
        return r;
    }
    friend bool operator==(const Zp& a, const Zp& b) noexcept { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Zp& a, const Zp& b) noexcept { return a.v_ <=> b.v_; }

   private:
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 2;
};

template <class K>
concept FieldElement = std::regular<K> && requires(const K a, const K b, const FieldSpec f, std::int64_t v) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a <=> b };
    { a.is_zero() } -> std::same_as<bool>;
    { a.inverse() } -> std::same_as<K>;
    { K::make(f, v) } -> std::same_as<K>;
    { a.to_string() } -> std::same_as<std::string>;
};

static_assert(FieldElement<Rational>);
static_assert(FieldElement<Zp>);

/// Parses "3", "-7", "2/3". Over F_p fractions are reduced mod p.
template <FieldElement K>
K parse_scalar(const FieldSpec& f, std::string_view text);

/// Throws FieldMismatch if the field does not match the scalar type.
template <FieldElement K>
void require_kind(const FieldSpec& f);

}  // namespace lrp

#endif

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

#include "lrp/field.hpp"

#include <cctype>

namespace lrp {

bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw InputError("field modulus must be below 2^31: " + std::to_string(p));
    if (!is_prime(p)) throw InputError("field modulus is not prime: " + std::to_string(p));
    return FieldSpec(FieldKind::Prime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::Rationals ? std::string("Q") : "F_" + std::to_string(p_);
}

Rational Rational::make(const FieldSpec& f, std::int64_t v) {
    require_kind<Rational>(f);
    return Rational(v);
}

Rational Rational::make(const FieldSpec& f, const mpq_class& v) {
    require_kind<Rational>(f);
    return Rational(v);
}

Rational Rational::inverse() const {
    if (is_zero()) throw InputError("division by zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    q_ /= o.q_;
    return *this;
}

Zp Zp::make(const FieldSpec& f, std::int64_t v) {
    require_kind<Zp>(f);
    const auto p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Zp(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(p));
}

Zp Zp::make(const FieldSpec& f, const mpq_class& v) {
    require_kind<Zp>(f);
    const unsigned long p = f.characteristic();
    mpz_class num = v.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = v.get_den() % p;
    if (den == 0) throw InputError("denominator vanishes modulo " + std::to_string(p) + ": " + v.get_str());
    const Zp n(static_cast<std::uint32_t>(num.get_ui()), static_cast<std::uint32_t>(p));
    const Zp d(static_cast<std::uint32_t>(den.get_ui()), static_cast<std::uint32_t>(p));
    return n / d;
}

Zp Zp::inverse() const {
    if (v_ == 0) throw InputError("division by zero");
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        const std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    std::int64_t r = x0 % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Zp(static_cast<std::uint32_t>(r), p_);
}

template <FieldElement K>
void require_kind(const FieldSpec& f) {
    if (f.kind() != K::kind())
        throw FieldMismatch("field " + f.to_string() + " does not match the scalar type");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

template <FieldElement K>
K parse_scalar(const FieldSpec& f, std::string_view text) {
    const std::string_view t = trim(text);
    const auto slash = t.find('/');
    const std::string_view num = trim(t.substr(0, slash));
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(t.substr(slash + 1));
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw InputError("invalid scalar '" + std::string(text) + "'");
    const mpz_class d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator in scalar '" + std::string(text) + "'");
    return K::make(f, mpq_class(parse_integer(num), d));
}

template void require_kind<Rational>(const FieldSpec&);
template void require_kind<Zp>(const FieldSpec&);
template Rational parse_scalar<Rational>(const FieldSpec&, std::string_view);
template Zp parse_scalar<Zp>(const FieldSpec&, std::string_view);

}  // namespace lrp

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

#include "lrp/poly_io.hpp"

#include <cctype>

namespace lrp {

namespace {

class Lexer {
   public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    std::string digits() {
        skip_ws();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return std::string(s_.substr(start, i_ - start));
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("invalid polynomial '" + std::string(s_) + "': " + what + " at offset " +
                         std::to_string(i_));
    }

   private:
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

template <FieldElement K>
Poly<K> parse_poly(const FieldSpec& f, std::string_view text) {
    Lexer lx(text);
    Poly<K> acc(f);
    if (lx.done()) lx.fail("empty input");
    bool first = true;
    while (!lx.done()) {
        bool negative = false;
        if (lx.accept('+')) {
        } else if (lx.accept('-')) {
            negative = true;
        } else if (!first) {
            lx.fail("expected '+' or '-'");
        }
        first = false;

        mpq_class coeff(1);
        bool have_coeff = false;
        if (const std::string num = lx.digits(); !num.empty()) {
            have_coeff = true;
            mpz_class den(1);
            if (lx.accept('/')) {
                const std::string d = lx.digits();
                if (d.empty()) lx.fail("missing denominator");
                den = mpz_class(d, 10);
                if (den == 0) lx.fail("zero denominator");
            }
            coeff = mpq_class(mpz_class(num, 10), den);
            coeff.canonicalize();
        }
        const bool star = have_coeff && lx.accept('*');
        std::size_t power = 0;
        if (lx.accept('s')) {
            power = 1;
            if (lx.accept('^')) {
                const std::string e = lx.digits();
                if (e.empty() || e.size() > 6) lx.fail("bad exponent");
                power = static_cast<std::size_t>(std::stoul(e));
            }
        } else if (!have_coeff || star) {
            lx.fail("expected a term");
        }
        if (negative) coeff = -coeff;
        acc += Poly<K>::monomial(f, K::make(f, coeff), power);
    }
    return acc;
}

namespace {

template <FieldElement K>
bool is_negative(const K& c) {
    if constexpr (std::is_same_v<K, Rational>)
        return sgn(c.value()) < 0;
    else
        return false;
}

template <FieldElement K>
std::string magnitude(const K& c) {
    if constexpr (std::is_same_v<K, Rational>)
        return mpq_class(abs(c.value())).get_str();
    else
        return c.to_string();
}

}  // namespace

template <FieldElement K>
std::string to_string(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    const auto c = p.coeffs();
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        const bool neg = is_negative(c[k]);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const std::string mag = magnitude(c[k]);
        if (k == 0) {
            out += mag;
            continue;
        }
        if (mag != "1") out += mag + "*";
        out += "s";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

template Poly<Rational> parse_poly<Rational>(const FieldSpec&, std::string_view);
template Poly<Zp> parse_poly<Zp>(const FieldSpec&, std::string_view);
template std::string to_string<Rational>(const Poly<Rational>&);
template std::string to_string<Zp>(const Poly<Zp>&);

}  // namespace lrp

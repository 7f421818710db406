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

#include "lrp/pencil.hpp"

#include "lrp/random.hpp"

namespace lrp {

template <FieldElement K>
Pencil<K>::Pencil(Matrix<K> a0, Matrix<K> a1) : A0(std::move(a0)), A1(std::move(a1)) {
    if (!A0.is_square()) throw InputError("pencil coefficients must be square");
    A0.check_same(A1);
}

template <FieldElement K>
bool is_regular(const Pencil<K>& a) {
    return !pencil_det(a).is_zero();
}

template <FieldElement K>
Pencil<K> reverse(const Pencil<K>& a) {
    return Pencil<K>(a.A1, a.A0);
}

template <FieldElement K>
Pencil<K> shift(const Pencil<K>& a, const K& c) {
    return Pencil<K>(a.A0 + c * a.A1, a.A1);
}

template <FieldElement K>
Poly<K> pencil_det(const Pencil<K>& a) {
    return det(a.matrix());
}

template <FieldElement K>
Pencil<K> add(const Pencil<K>& a, const Pencil<K>& p) {
    return Pencil<K>(a.A0 + p.A0, a.A1 + p.A1);
}

template <FieldElement K>
Pencil<K> subtract(const Pencil<K>& a, const Pencil<K>& p) {
    return Pencil<K>(a.A0 - p.A0, a.A1 - p.A1);
}

template <FieldElement K>
Pencil<K> multiply(const Matrix<K>& q, const Pencil<K>& a, const Matrix<K>& r) {
    return Pencil<K>(q * a.A0 * r, q * a.A1 * r);
}

template <FieldElement K>
Pencil<K> apply_equiv(const Pencil<K>& a, const Matrix<K>& q, const Matrix<K>& r) {
    if (!q.is_square() || q.det().is_zero()) throw InputError("left transform is not invertible");
    if (!r.is_square() || r.det().is_zero()) throw InputError("right transform is not invertible");
    return multiply(q, a, r);
}

template <FieldElement K>
Pencil<K> direct_sum(const Pencil<K>& a, const Pencil<K>& b) {
    return Pencil<K>(block_diagonal(a.A0, b.A0), block_diagonal(a.A1, b.A1));
}

template <FieldElement K>
std::size_t normal_rank(const Pencil<K>& p) {
    return normal_rank(p.matrix());
}

template <FieldElement K>
Pencil<K> random_regular(const FieldSpec& f, std::size_t n, std::uint64_t seed) {
    require_kind<K>(f);
    std::mt19937_64 rng(stream_seed(seed, 0));
    for (;;) {
        Pencil<K> a(random_matrix<K>(f, n, n, rng), random_matrix<K>(f, n, n, rng));
        if (is_regular(a)) return a;
    }
}

template <FieldElement K>
Matrix<K> random_invertible(const FieldSpec& f, std::size_t n, std::uint64_t seed) {
    require_kind<K>(f);
    std::mt19937_64 rng(stream_seed(seed, 1));
    for (;;) {
        Matrix<K> m = random_matrix<K>(f, n, n, rng);
        if (!m.det().is_zero()) return m;
    }
}

template <FieldElement K>
Matrix<K> companion(const Poly<K>& gamma) {
    if (!gamma.is_monic()) throw InputError("companion matrix needs a monic polynomial");
    const FieldSpec& f = gamma.field();
    const std::size_t d = *gamma.degree();
    Matrix<K> c(f, d, d);
    for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = K::make(f, 1);
    for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -gamma.coeff(i);
    return c;
}

template <FieldElement K>
Pencil<K> weierstrass_canonical(const WeierstrassStructure<K>& s) {
    const FieldSpec& f = s.field();
    const std::size_t n = s.n();
    Pencil<K> out = Pencil<K>::zero(f, n);
    std::size_t at = 0;
    for (const auto& e : s.entries()) {
        const std::size_t d = *e.gamma.degree();
        const Matrix<K> c = companion(e.gamma);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) out.A0(at + i, at + j) = -c(i, j);
            out.A1(at + i, at + i) = K::make(f, 1);
        }
        at += d;
        for (std::size_t i = 0; i < e.q; ++i) {
            out.A0(at + i, at + i) = K::make(f, 1);
            if (i + 1 < e.q) out.A1(at + i, at + i + 1) = K::make(f, 1);
        }
        at += e.q;
    }
    return out;
}

#define LRP_INSTANTIATE(K)                                                                   \
    template struct Pencil<K>;                                                               \
    template bool is_regular(const Pencil<K>&);                                              \
    template Pencil<K> reverse(const Pencil<K>&);                                            \
    template Pencil<K> shift(const Pencil<K>&, const K&);                                    \
    template Poly<K> pencil_det(const Pencil<K>&);                                           \
    template Pencil<K> add(const Pencil<K>&, const Pencil<K>&);                              \
    template Pencil<K> subtract(const Pencil<K>&, const Pencil<K>&);                         \
    template Pencil<K> multiply(const Matrix<K>&, const Pencil<K>&, const Matrix<K>&);       \
    template Pencil<K> apply_equiv(const Pencil<K>&, const Matrix<K>&, const Matrix<K>&);    \
    template Pencil<K> direct_sum(const Pencil<K>&, const Pencil<K>&);                       \
    template std::size_t normal_rank(const Pencil<K>&);                                      \
    template Pencil<K> random_regular<K>(const FieldSpec&, std::size_t, std::uint64_t);      \
    template Matrix<K> random_invertible<K>(const FieldSpec&, std::size_t, std::uint64_t);   \
    template Matrix<K> companion(const Poly<K>&);                                            \
    template Pencil<K> weierstrass_canonical(const WeierstrassStructure<K>&);

LRP_INSTANTIATE(Rational)
LRP_INSTANTIATE(Zp)

}  // namespace lrp

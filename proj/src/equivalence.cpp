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

#include "lrp/equivalence.hpp"

#include "lrp/random.hpp"

namespace lrp {

namespace {

// Kernel of (X, Y) ↦ (X·A0 − W0·Y, X·A1 − W1·Y); unknowns vec(X) then vec(Y), row-major.
template <FieldElement K>
Matrix<K> intertwiners(const Pencil<K>& a, const Pencil<K>& w) {
    const FieldSpec& f = a.field();
    const std::size_t n = a.n(), nn = n * n;
    Matrix<K> sys(f, 2 * nn, 2 * nn);
    for (int k = 0; k < 2; ++k) {
        const Matrix<K>& ak = k == 0 ? a.A0 : a.A1;
        const Matrix<K>& wk = k == 0 ? w.A0 : w.A1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = k * nn + i * n + j;
                for (std::size_t l = 0; l < n; ++l) {
                    sys(row, i * n + l) += ak(l, j);
                    sys(row, nn + l * n + j) -= wk(i, l);
                }
            }
    }
    return sys.kernel();
}

template <FieldElement K>
std::optional<StrictEquivalence<K>> from_coefficients(const Matrix<K>& basis, const std::vector<K>& coef,
                                                      std::size_t n) {
    const FieldSpec& f = basis.field();
    Matrix<K> x(f, n, n), y(f, n, n);
    for (std::size_t b = 0; b < coef.size(); ++b) {
        if (coef[b].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                x(i, j) += coef[b] * basis(i * n + j, b);
                y(i, j) += coef[b] * basis(n * n + i * n + j, b);
            }
    }
    if (x.det().is_zero()) return std::nullopt;
    auto yi = y.inverse();
    if (!yi) return std::nullopt;
    return StrictEquivalence<K>{std::move(x), std::move(*yi)};
}

}  // namespace

template <FieldElement K>
std::optional<StrictEquivalence<K>> find_strict_equivalence(const Pencil<K>& a, const Pencil<K>& w,
                                                            const SearchOptions& opt) {
    if (!(a.field() == w.field())) throw FieldMismatch();
    if (a.n() != w.n()) throw InputError("pencils have different sizes");
    const FieldSpec& f = a.field();
    const std::size_t n = a.n();
    if (n == 0) return StrictEquivalence<K>{Matrix<K>(f, 0, 0), Matrix<K>(f, 0, 0)};
    const Matrix<K> basis = intertwiners(a, w);
    const std::size_t dim = basis.cols();
    if (dim == 0) return std::nullopt;

    std::optional<StrictEquivalence<K>> found;
    const std::uint64_t space = f.is_finite() ? saturating_pow(f.characteristic(), dim) : 0;
    if (f.is_finite() && space <= opt.exhaustive_cap) {
        const std::uint64_t p = f.characteristic();
        auto hit = first_hit<StrictEquivalence<K>>(space, opt.jobs, [&](std::uint64_t k) {
            std::vector<K> coef;
            for (std::size_t b = 0; b < dim; ++b, k /= p) coef.push_back(K::make(f, static_cast<std::int64_t>(k % p)));
            return from_coefficients(basis, coef, n);
        });
        if (hit) found = std::move(hit->value);
    } else {
        auto hit = first_hit<StrictEquivalence<K>>(opt.random_trials, opt.jobs, [&](std::uint64_t k) {
            std::mt19937_64 rng(stream_seed(opt.seed, k));
            std::vector<K> coef;
            for (std::size_t b = 0; b < dim; ++b) coef.push_back(random_scalar<K>(f, rng, 3));
            return from_coefficients(basis, coef, n);
        });
        if (hit) found = std::move(hit->value);
    }
    if (found && !(multiply(found->Q, a, found->R) == w))
        throw InvariantViolation("strict equivalence transform does not reproduce the target");
    return found;
}

template std::optional<StrictEquivalence<Rational>> find_strict_equivalence(const Pencil<Rational>&,
                                                                            const Pencil<Rational>&,
                                                                            const SearchOptions&);
template std::optional<StrictEquivalence<Zp>> find_strict_equivalence(const Pencil<Zp>&, const Pencil<Zp>&,
                                                                      const SearchOptions&);

}  // namespace lrp

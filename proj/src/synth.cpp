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

#include "lrp/synth.hpp"

#include <algorithm>
#include <functional>

#include "lrp/equivalence.hpp"
#include "lrp/factor.hpp"
#include "lrp/random.hpp"

namespace lrp {

namespace {

// Distinct random streams for the independent search layers.
constexpr std::uint64_t kConstantSalt = 0x636f6e7374ULL;
constexpr std::uint64_t kDirectSalt = 0x646972656374ULL;
constexpr std::uint64_t kPlacementSalt = 0x706c616365ULL;

struct Budget {
    SearchOptions opt;
    std::uint64_t trials = 0;
};

template <class T>
void account(Budget& b, const std::optional<Hit<T>>& hit, std::uint64_t count) {
    b.trials += hit ? hit->index + 1 : count;
}

std::int64_t height_at(std::uint64_t k, std::uint64_t budget) {
    const std::uint64_t step = std::max<std::uint64_t>(1, budget / 10);
    return std::int64_t{1} << std::min<std::uint64_t>(k / step, 20);
}

template <FieldElement K>
Matrix<K> companion_sum(const FieldSpec& f, const std::vector<Poly<K>>& gammas) {
    Matrix<K> c(f, 0, 0);
    for (const auto& g : gammas)
        if (!g.is_one()) c = block_diagonal(c, companion(g));
    return c;
}

// Digits of k in base p fill the matrices in order.
template <FieldElement K>
void decode(std::uint64_t k, std::uint64_t p, std::initializer_list<Matrix<K>*> ms) {
    for (Matrix<K>* m : ms)
        for (std::size_t i = 0; i < m->rows(); ++i)
            for (std::size_t j = 0; j < m->cols(); ++j, k /= p)
                (*m)(i, j) = K::make(m->field(), static_cast<std::int64_t>(k % p));
}

template <FieldElement K>
Matrix<K> outer(const Matrix<K>& x, const Matrix<K>& y) {
    return x * y.transpose();
}

// Coefficient vectors of adj(sI − M)·x by powers of s, from the identity
// adj(sI − M) = Σ_k s^k Σ_{i>k} c_i M^{i−k−1} with χ_M = Σ c_i s^i.
template <FieldElement K>
std::vector<Matrix<K>> adjugate_times(const Matrix<K>& m, const Poly<K>& chi, const Matrix<K>& x) {
    const std::size_t n = m.rows();
    std::vector<Matrix<K>> krylov{x};
    for (std::size_t j = 1; j < n; ++j) krylov.push_back(m * krylov.back());
    std::vector<Matrix<K>> v;
    for (std::size_t k = 0; k < n; ++k) {
        Matrix<K> acc(m.field(), n, 1);
        for (std::size_t i = k + 1; i <= n; ++i) acc += chi.coeff(i) * krylov[i - k - 1];
        v.push_back(std::move(acc));
    }
    return v;
}

// A random y with det(sI − M − x·yᵀ) = target, if the affine system allows one.
template <FieldElement K>
std::optional<Matrix<K>> complete_last_column(const Matrix<K>& m, const Matrix<K>& x, const Poly<K>& target,
                                              std::mt19937_64& rng, std::int64_t height) {
    const FieldSpec& f = m.field();
    const std::size_t n = m.rows();
    const Poly<K> chi = det(PolyMatrix<K>::linear(-m, Matrix<K>::identity(f, n)));
    const auto v = adjugate_times(m, chi, x);
    const Poly<K> rhs = chi - target;
    Matrix<K> aug(f, n, n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) aug(k, l) = v[k](l, 0);
        aug(k, n) = -rhs.coeff(k);
    }
    const Matrix<K> ker = aug.kernel();
    for (int attempt = 0; attempt < 4; ++attempt) {
        Matrix<K> z(f, n + 1, 1);
        for (std::size_t b = 0; b < ker.cols(); ++b) {
            const K c = attempt == 0 && b + 1 == ker.cols() ? K::make(f, 1) : random_scalar<K>(f, rng, height);
            for (std::size_t i = 0; i <= n; ++i) z(i, 0) += c * ker(i, b);
        }
        if (z(n, 0).is_zero()) continue;
        const K inv = z(n, 0).inverse();
        Matrix<K> y(f, n, 1);
        for (std::size_t i = 0; i < n; ++i) y(i, 0) = z(i, 0) * inv;
        return y;
    }
    return std::nullopt;
}

template <FieldElement K>
Matrix<K> evaluate(const Poly<K>& p, const Matrix<K>& m) {
    const std::size_t n = m.rows();
    Matrix<K> acc(m.field(), n, n);
    const auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t j = 0; j < n; ++j) acc(j, j) += c[i];
    }
    return acc;
}

// Spanning sets of M-invariant subspaces: the whole space, and the kernels
// and images of f(M)^k for the irreducible factors f of the characteristic
// polynomial.
template <FieldElement K>
std::vector<Matrix<K>> invariant_subspaces(const Matrix<K>& m, const Poly<K>& chi) {
    std::vector<Matrix<K>> out{Matrix<K>::identity(m.field(), m.rows())};
    for (const auto& fac : irreducible_factors(chi)) {
        const Matrix<K> fm = evaluate(fac.factor, m);
        Matrix<K> power = fm;
        for (std::size_t k = 1; k <= fac.multiplicity; ++k) {
            Matrix<K> ker = power.kernel();
            if (ker.cols() > 0) out.push_back(std::move(ker));
            if (!power.is_zero()) out.push_back(power);
            power = power * fm;
        }
    }
    return out;
}

// H = Y⁻¹·C·Y agrees with G on span(V) when C·Y·v = Y·G·v for v ∈ V, so
// rank(H − G) ≤ n − dim V. With `left`, X·C·u = G·X·u and H = X·C·X⁻¹
// instead. The conditions are linear in Y or X; a random kernel element
// is tried.
template <FieldElement K>
std::optional<Matrix<K>> intertwined_candidate(const Matrix<K>& g, const Matrix<K>& c, const Matrix<K>& basis,
                                               bool left, std::mt19937_64& rng, std::int64_t height) {
    const FieldSpec& f = g.field();
    const std::size_t n = g.rows(), d = basis.cols();
    Matrix<K> sys(f, n * d, n * n);
    for (std::size_t t = 0; t < d; ++t) {
        Matrix<K> v(f, n, 1);
        for (std::size_t i = 0; i < n; ++i) v(i, 0) = basis(i, t);
        const Matrix<K> w = left ? c * v : g * v;
        const Matrix<K>& outer_map = left ? g : c;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t j = 0; j < n; ++j) {
                    K& e = sys(t * n + a, b * n + j);
                    if (left) {
                        if (a == b) e += w(j, 0);
                        e -= outer_map(a, b) * v(j, 0);
                    } else {
                        e += outer_map(a, b) * v(j, 0);
                        if (a == b) e -= w(j, 0);
                    }
                }
    }
    const Matrix<K> ker = sys.kernel();
    if (ker.cols() == 0) return std::nullopt;
    Matrix<K> y(f, n, n);
    for (std::size_t b = 0; b < ker.cols(); ++b) {
        const K coef = random_scalar<K>(f, rng, height);
        if (coef.is_zero()) continue;
        for (std::size_t i = 0; i < n * n; ++i) y(i / n, i % n) += coef * ker(i, b);
    }
    const auto inv = y.inverse();
    if (!inv) return std::nullopt;
    return (left ? y * c * *inv : *inv * c * y) - g;
}

template <FieldElement K>
Pencil<K> random_rank_one(const FieldSpec& f, std::size_t n, std::mt19937_64& rng, std::int64_t height) {
    const Matrix<K> u = random_matrix<K>(f, n, 1, rng, height);
    const Matrix<K> v0 = random_matrix<K>(f, n, 1, rng, height);
    const Matrix<K> v1 = random_matrix<K>(f, n, 1, rng, height);
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return Pencil<K>(outer(u, v0), outer(u, v1));
    return Pencil<K>(outer(v0, u), outer(v1, u));
}

template <FieldElement K>
Pencil<K> random_rank_at_most(const FieldSpec& f, std::size_t n, std::size_t r, std::mt19937_64& rng,
                              std::int64_t height) {
    Pencil<K> p = Pencil<K>::zero(f, n);
    for (std::size_t j = 0; j < r; ++j) p = add(p, random_rank_one<K>(f, n, rng, height));
    return p;
}

template <FieldElement K>
void check_target_factors(const Matrix<K>& g, const std::vector<Poly<K>>& target) {
    if (!g.is_square()) throw InputError("constant matrix must be square");
    if (target.size() != g.rows()) throw InputError("need one target invariant factor per row");
    std::size_t total = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (!(target[i].field() == g.field())) throw FieldMismatch();
        if (!target[i].is_monic()) throw InputError("target invariant factors must be monic");
        if (i > 0 && !divides(target[i - 1], target[i]))
            throw InputError("target invariant factors do not form a divisibility chain");
        total += *target[i].degree();
    }
    if (total != g.rows()) throw InputError("target invariant factor degrees must sum to the size");
}

// Sum of r rank-one pencils, or a strict equivalent of the target canonical
// pencil minus A, alternating by trial index.
// Constant vectors worth placing in the kernel of a perturbation of A:
// the whole space and the kernels of A1 and of A(c) for a few c. With
// `left` the left kernels are used.
template <FieldElement K>
std::vector<Matrix<K>> pencil_kernels(const Pencil<K>& a, bool left) {
    const FieldSpec& f = a.field();
    std::vector<Matrix<K>> out{Matrix<K>::identity(f, a.n())};
    auto add_kernel = [&](const Matrix<K>& m) {
        Matrix<K> ker = (left ? m.transpose() : m).kernel();
        if (ker.cols() > 0) out.push_back(std::move(ker));
    };
    add_kernel(a.A1);
    const std::int64_t points = f.is_finite() ? std::min<std::int64_t>(f.characteristic(), 8) : 5;
    for (std::int64_t i = 0; i < points; ++i) {
        const std::int64_t c = f.is_finite() ? i : (i + 1) / 2 * (i % 2 ? 1 : -1);
        add_kernel(a.A0 + K::make(f, c) * a.A1);
    }
    return out;
}

// X·W − A·Y vanishing on an (n − r)-dimensional space of constant vectors
// is linear in (X, Y). When both are invertible, P = X·W·Y⁻¹ − A has normal
// rank ≤ r and A + P is strictly equivalent to W.
template <FieldElement K>
std::optional<Pencil<K>> intertwined_pencil(const Pencil<K>& a, const Pencil<K>& w, std::size_t r,
                                            std::mt19937_64& rng, std::int64_t height) {
    const FieldSpec& f = a.field();
    const std::size_t n = a.n(), d = n - r, nn = n * n;
    const bool left = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    const auto spaces = pencil_kernels(left ? w : a, left);
    Matrix<K> basis(f, n, d);
    for (std::size_t t = 0; t < d; ++t) {
        const Matrix<K>& sp = spaces[std::uniform_int_distribution<std::size_t>(0, spaces.size() - 1)(rng)];
        const Matrix<K> v = sp * random_matrix<K>(f, sp.cols(), 1, rng, height);
        for (std::size_t i = 0; i < n; ++i) basis(i, t) = v(i, 0);
    }
    if (basis.rank() < d) return std::nullopt;
    const Matrix<K>* wk[2] = {&w.A0, &w.A1};
    const Matrix<K>* ak[2] = {&a.A0, &a.A1};
    Matrix<K> sys(f, 2 * n * d, 2 * nn);
    for (std::size_t t = 0; t < d; ++t) {
        Matrix<K> v(f, n, 1);
        for (std::size_t i = 0; i < n; ++i) v(i, 0) = basis(i, t);
        for (std::size_t k = 0; k < 2; ++k) {
            const std::size_t row0 = (t * 2 + k) * n;
            if (!left) {
                const Matrix<K> mv = *wk[k] * v;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        sys(row0 + i, i * n + j) += mv(j, 0);
                        for (std::size_t b = 0; b < n; ++b) sys(row0 + i, nn + b * n + j) -= (*ak[k])(i, b) * v(j, 0);
                    }
            } else {
                const Matrix<K> ua = (v.transpose() * *ak[k]).transpose();
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t b = 0; b < n; ++b) {
                            sys(row0 + j, i * n + b) += v(i, 0) * (*wk[k])(b, j);
                            if (i == 0) sys(row0 + j, nn + b * n + j) -= ua(b, 0);
                        }
            }
        }
    }
    const Matrix<K> ker = sys.kernel();
    if (ker.cols() == 0) return std::nullopt;
    Matrix<K> x(f, n, n), y(f, n, n);
    for (std::size_t b = 0; b < ker.cols(); ++b) {
        const K coef = random_scalar<K>(f, rng, height);
        if (coef.is_zero()) continue;
        for (std::size_t i = 0; i < nn; ++i) {
            x(i / n, i % n) += coef * ker(i, b);
            y(i / n, i % n) += coef * ker(nn + i, b);
        }
    }
    const auto yinv = y.inverse();
    if (!yinv || x.rank() < n) return std::nullopt;
    return subtract(multiply(x, w, *yinv), a);
}

template <FieldElement K>
Pencil<K> direct_candidate(const Pencil<K>& a, const Pencil<K>* wb, std::size_t r, std::uint64_t k,
                           const Budget& b, std::uint64_t salt) {
    const FieldSpec& f = a.field();
    const std::size_t n = a.n();
    std::mt19937_64 rng(stream_seed(b.opt.seed ^ salt, k));
    const std::int64_t h = height_at(k, b.opt.random_trials);
    if (wb && k % 3 == 1 && r < n)
        if (auto p = intertwined_pencil(a, *wb, r, rng, h)) return std::move(*p);
    if (wb && k % 3 == 0) {
        const Matrix<K> q = random_matrix<K>(f, n, n, rng, h);
        const Matrix<K> rr = random_matrix<K>(f, n, n, rng, h);
        return subtract(multiply(q, *wb, rr), a);
    }
    return random_rank_at_most<K>(f, n, r, rng, h);
}

template <FieldElement K>
std::optional<Pencil<K>> search_perturbation(const Pencil<K>& a, const Pencil<K>* wb, std::size_t r, Budget& b,
                                             std::uint64_t salt, const std::function<bool(const Pencil<K>&)>& ok) {
    const FieldSpec& f = a.field();
    const std::size_t n = a.n();
    auto accept = [&](Pencil<K> p) -> std::optional<Pencil<K>> {
        if (normal_rank(p) > r || !ok(add(a, p))) return std::nullopt;
        return p;
    };
    if (f.is_finite()) {
        const std::uint64_t p = f.characteristic();
        const std::uint64_t space = saturating_pow(p, 2 * n * n);
        if (space <= b.opt.exhaustive_cap) {
            auto hit = first_hit<Pencil<K>>(space, b.opt.jobs, [&](std::uint64_t k) {
                Pencil<K> c = Pencil<K>::zero(f, n);
                decode<K>(k, p, {&c.A0, &c.A1});
                return accept(std::move(c));
            });
            account(b, hit, space);
            if (hit) return std::move(hit->value);
            return std::nullopt;
        }
    }
    auto hit = first_hit<Pencil<K>>(b.opt.random_trials, b.opt.jobs, [&](std::uint64_t k) {
        return accept(direct_candidate(a, wb, r, k, b, salt));
    });
    account(b, hit, b.opt.random_trials);
    if (hit) return std::move(hit->value);
    return std::nullopt;
}

template <FieldElement K>
std::optional<Pencil<K>> direct_search(const Pencil<K>& a, const WeierstrassStructure<K>& sb, std::size_t r,
                                       Budget& b) {
    const Pencil<K> wb = weierstrass_canonical(sb);
    if (r >= a.n()) {
        b.trials += 1;
        return subtract(wb, a);
    }
    return search_perturbation<K>(a, &wb, r, b, kDirectSalt, [&](const Pencil<K>& x) {
        const auto s = try_compute_structure(x);
        return s && *s == sb;
    });
}

template <FieldElement K>
std::optional<Pencil<K>> run_route(const Pencil<K>& a, const WeierstrassStructure<K>& sa,
                                   const WeierstrassStructure<K>& sb, std::size_t r, const Route<K>& route,
                                   Budget& b) {
    const FieldSpec& f = a.field();
    const std::size_t n = a.n();
    switch (route.kind) {
        case RouteKind::Equal:
            if (!(sa == sb)) throw InvariantViolation("equal route on different structures");
            return Pencil<K>::zero(f, n);
        case RouteKind::UnspectralPoint: {
            if (route.point.is_infinite()) {
                const auto a1inv = a.A1.inverse();
                if (!a1inv) throw InvariantViolation("leading coefficient is singular at an unspectral infinity");
                const Matrix<K> g = -(*a1inv * a.A0);
                std::vector<Poly<K>> target;
                for (const auto& e : sb.entries()) target.push_back(e.gamma);
                const auto k = solve_constant(g, target, r, b.opt, &b.trials);
                if (!k) return std::nullopt;
                return Pencil<K>(-(a.A1 * *k), Matrix<K>(f, n, n));
            }
            const K c = *route.point.value;
            const Pencil<K> a2 = reverse(shift(a, c));
            const auto sa2 = reverse_structure(shift_structure(sa, c));
            const auto sb2 = reverse_structure(shift_structure(sb, c));
            const auto p2 = run_route(a2, sa2, sb2, r, Route<K>::unspectral({}), b);
            if (!p2) return std::nullopt;
            return Pencil<K>(-c * p2->A0, p2->A0);
        }
        case RouteKind::Deflation: {
            const auto split_a = split_at(sa, route.lambda0);
            const auto split_b = split_at(sb, route.lambda0);
            const Pencil<K> w22 = weierstrass_canonical(split_a.rest);
            const Pencil<K> w = direct_sum(weierstrass_canonical(split_a.local), w22);
            const auto eq = find_strict_equivalence(a, w, b.opt);
            if (!eq) return std::nullopt;
            const auto p22 = run_route(w22, split_a.rest, split_b.rest, r, *route.inner, b);
            if (!p22) return std::nullopt;
            const Pencil<K> embedded = direct_sum(Pencil<K>::zero(f, split_a.local.n()), *p22);
            return multiply(*eq->Q.inverse(), embedded, *eq->R.inverse());
        }
        case RouteKind::Search:
            return direct_search(a, sb, r, b);
    }
    return std::nullopt;
}

template <FieldElement K>
struct Construction {
    Pencil<K> P;
    Route<K> route;
};

template <FieldElement K>
std::optional<Construction<K>> construct(const Pencil<K>& a, const WeierstrassStructure<K>& sa,
                                         const WeierstrassStructure<K>& sb, std::size_t r, Budget& b) {
    if (sa == sb) return Construction<K>{Pencil<K>::zero(a.field(), a.n()), Route<K>::equal()};
    if (auto route = sufficiency_hypothesis(sa, sb))
        if (auto p = run_route(a, sa, sb, r, *route, b)) return Construction<K>{std::move(*p), std::move(*route)};
    if (auto p = direct_search(a, sb, r, b)) return Construction<K>{std::move(*p), Route<K>::search()};
    return std::nullopt;
}

template <FieldElement K>
void check_regular_input(const Pencil<K>& a) {
    if (!is_regular(a)) throw InputError("pencil is singular");
}

}  // namespace

template <FieldElement K>
WeierstrassStructure<K> complete_placement_target(const WeierstrassStructure<K>& sa, const Poly<K>& p,
                                                  std::size_t r) {
    if (!check_placement(sa, p, r)) throw InputError("the placement condition fails for this polynomial");
    const FieldSpec& f = sa.field();
    const std::size_t n = sa.n();
    if (n == 0) return sa;
    r = std::min(r, n);
    Poly<K> head = Poly<K>::one(f);
    for (std::size_t i = 0; i + r < n; ++i) head = head * sa[i].gamma;
    const Poly<K> gamma = divexact(p, head);
    const auto inf = SpectralPoint<K>::infinity();
    const std::size_t d = n - *p.degree() - (mu_a(sa, inf) - M_r(sa, inf, r));

    auto alpha = [&](std::ptrdiff_t i) { return i < 1 ? Poly<K>::one(f) : sa[static_cast<std::size_t>(i) - 1].gamma; };
    auto qa = [&](std::ptrdiff_t i) { return i < 1 ? std::size_t{0} : sa[static_cast<std::size_t>(i) - 1].q; };
    const auto rr = static_cast<std::ptrdiff_t>(r);
    std::vector<HomogeneousFactor<K>> e;
    for (std::ptrdiff_t i = 1; i < static_cast<std::ptrdiff_t>(n); ++i) e.push_back({alpha(i - rr), qa(i - rr)});
    const auto nn = static_cast<std::ptrdiff_t>(n);
    e.push_back({alpha(nn - rr) * gamma, qa(nn - rr) + d});
    return WeierstrassStructure<K>(f, std::move(e));
}

template <FieldElement K>
std::vector<Poly<K>> similarity_invariants(const Matrix<K>& g) {
    if (!g.is_square()) throw InputError("constant matrix must be square");
    return invariant_factors(PolyMatrix<K>::linear(-g, Matrix<K>::identity(g.field(), g.rows())));
}

template <FieldElement K>
std::optional<Matrix<K>> solve_constant(const Matrix<K>& g, const std::vector<Poly<K>>& target, std::size_t r,
                                        const SearchOptions& opt, std::uint64_t* trials) {
    check_target_factors(g, target);
    const FieldSpec& f = g.field();
    const std::size_t n = g.rows();
    const auto current = similarity_invariants(g);
    {
        const auto ws = finite_structure(f, current, n);
        const auto wt = finite_structure(f, target, n);
        if (!check_interlacing(ws, wt, r))
            throw InputError("target invariant factors do not interlace with the current ones");
    }
    std::uint64_t used = 0;
    auto finish = [&](std::optional<Matrix<K>> m) {
        if (trials) *trials += used;
        return m;
    };
    if (current == target) return finish(Matrix<K>(f, n, n));
    if (r >= n) {
        used = 1;
        return finish(companion_sum(f, target) - g);
    }
    if (r == 0) return finish(std::nullopt);

    auto accept = [&](Matrix<K> p) -> std::optional<Matrix<K>> {
        if (similarity_invariants(g + p) != target) return std::nullopt;
        return p;
    };
    if (f.is_finite()) {
        const std::uint64_t p = f.characteristic();
        const std::uint64_t space = saturating_pow(p, 2 * n * r);
        if (space <= opt.exhaustive_cap) {
            auto hit = first_hit<Matrix<K>>(space, opt.jobs, [&](std::uint64_t k) {
                Matrix<K> x(f, n, r), y(f, r, n);
                decode<K>(k, p, {&x, &y});
                return accept(x * y);
            });
            used = hit ? hit->index + 1 : space;
            if (hit) return finish(std::move(hit->value));
            return finish(std::nullopt);
        }
    }
    Poly<K> chi = Poly<K>::one(f);
    for (const auto& t : target) chi = chi * t;
    const Matrix<K> canonical = companion_sum(f, target);
    const auto target_spaces = invariant_subspaces(canonical, chi);
    Poly<K> chi_g = Poly<K>::one(f);
    for (const auto& t : current) chi_g = chi_g * t;
    const auto source_spaces = invariant_subspaces(g, chi_g);
    auto hit = first_hit<Matrix<K>>(opt.random_trials, opt.jobs, [&](std::uint64_t k) {
        std::mt19937_64 rng(stream_seed(opt.seed ^ kConstantSalt, k));
        const std::int64_t h = height_at(k, opt.random_trials);
        Matrix<K> x = random_matrix<K>(f, n, r, rng, h);
        Matrix<K> y = random_matrix<K>(f, n, r, rng, h);
        if (k % 3 == 2) {
            const bool left = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
            const auto& spaces = left ? target_spaces : source_spaces;
            Matrix<K> basis(f, n, n - r);
            for (std::size_t t = 0; t < n - r; ++t) {
                const Matrix<K>& w = spaces[std::uniform_int_distribution<std::size_t>(0, spaces.size() - 1)(rng)];
                const Matrix<K> z = random_matrix<K>(f, w.cols(), 1, rng, h);
                const Matrix<K> v = w * z;
                for (std::size_t i = 0; i < n; ++i) basis(i, t) = v(i, 0);
            }
            if (basis.rank() < n - r) return std::optional<Matrix<K>>();
            auto p = intertwined_candidate(g, canonical, basis, left, rng, h);
            if (!p || p->rank() > r) return std::optional<Matrix<K>>();
            return accept(std::move(*p));
        }
        // Every third trial solves for the last column so the
        // characteristic polynomial matches.
        if (k % 3 == 0) {
            Matrix<K> partial = g;
            for (std::size_t j = 0; j + 1 < r; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t l = 0; l < n; ++l) partial(i, l) += x(i, j) * y(l, j);
            Matrix<K> xl(f, n, 1);
            for (std::size_t i = 0; i < n; ++i) xl(i, 0) = x(i, r - 1);
            if (auto yl = complete_last_column(partial, xl, chi, rng, h))
                for (std::size_t i = 0; i < n; ++i) y(i, r - 1) = (*yl)(i, 0);
        }
        return accept(outer(x, y));
    });
    used = hit ? hit->index + 1 : opt.random_trials;
    if (hit) return finish(std::move(hit->value));
    return finish(std::nullopt);
}

template <FieldElement K>
std::optional<Certificate<K>> synthesize(const Pencil<K>& a, const WeierstrassStructure<K>& sb, std::size_t r,
                                         const SearchOptions& opt) {
    if (!(a.field() == sb.field())) throw FieldMismatch();
    if (a.n() != sb.n()) throw InputError("target structure size differs from the pencil size");
    check_regular_input(a);
    const auto sa = compute_structure(a);
    if (auto w = interlacing_violation(sa, sb, r))
        throw InputError("target is unreachable: interlacing fails at index " + std::to_string(w->index));
    Budget b{opt};
    auto c = construct(a, sa, sb, r, b);
    if (!c) return std::nullopt;
    Certificate<K> cert{std::move(c->P), r, sb, std::move(c->route), b.trials};
    if (!verify_certificate(a, cert)) throw InvariantViolation("constructed perturbation failed verification");
    return cert;
}

template <FieldElement K>
std::optional<Certificate<K>> synthesize_placement(const Pencil<K>& a, const Poly<K>& p, std::size_t r,
                                                   const SearchOptions& opt) {
    if (!(a.field() == p.field())) throw FieldMismatch();
    check_regular_input(a);
    const auto sa = compute_structure(a);
    const auto target = complete_placement_target(sa, p, r);
    Budget b{opt};
    std::optional<Construction<K>> c;
    if (sa == target) {
        c = Construction<K>{Pencil<K>::zero(a.field(), a.n()), Route<K>::equal()};
    } else if (auto route = sufficiency_hypothesis(sa, target)) {
        if (auto pp = run_route(a, sa, target, r, *route, b)) c = Construction<K>{std::move(*pp), std::move(*route)};
    }
    if (!c) {
        const Pencil<K> wb = weierstrass_canonical(target);
        auto pp = search_perturbation<K>(a, &wb, r, b, kPlacementSalt, [&](const Pencil<K>& x) {
            const Poly<K> d = pencil_det(x);
            return !d.is_zero() && d.monic() == p;
        });
        if (pp) c = Construction<K>{std::move(*pp), Route<K>::search()};
    }
    if (!c) return std::nullopt;
    Certificate<K> cert{std::move(c->P), r, p, std::move(c->route), b.trials};
    if (!verify_certificate(a, cert)) throw InvariantViolation("constructed perturbation failed verification");
    return cert;
}

template <FieldElement K>
bool verify_certificate(const Pencil<K>& a, const Certificate<K>& cert) {
    try {
        if (!(a.field() == cert.P.field()) || a.n() != cert.P.n()) return false;
        if (normal_rank(cert.P) > cert.claimed_rank) return false;
        const Pencil<K> sum = add(a, cert.P);
        if (const auto* s = std::get_if<WeierstrassStructure<K>>(&cert.target)) {
            const auto got = try_compute_structure(sum);
            return got && *got == *s;
        }
        const Poly<K>& p = std::get<Poly<K>>(cert.target);
        const Poly<K> d = pencil_det(sum);
        return !d.is_zero() && !p.is_zero() && d.monic() == p.monic();
    } catch (const InputError&) {
        return false;
    }
}

#define LRP_INSTANTIATE(K)                                                                                      \
    template WeierstrassStructure<K> complete_placement_target(const WeierstrassStructure<K>&, const Poly<K>&,  \
                                                               std::size_t);                                   \
    template std::vector<Poly<K>> similarity_invariants(const Matrix<K>&);                                      \
    template std::optional<Matrix<K>> solve_constant(const Matrix<K>&, const std::vector<Poly<K>>&, std::size_t, \
                                                     const SearchOptions&, std::uint64_t*);                    \
    template std::optional<Certificate<K>> synthesize(const Pencil<K>&, const WeierstrassStructure<K>&,         \
                                                      std::size_t, const SearchOptions&);                      \
    template std::optional<Certificate<K>> synthesize_placement(const Pencil<K>&, const Poly<K>&, std::size_t,  \
                                                                const SearchOptions&);                         \
    template bool verify_certificate(const Pencil<K>&, const Certificate<K>&);

LRP_INSTANTIATE(Rational)
LRP_INSTANTIATE(Zp)

}  // namespace lrp

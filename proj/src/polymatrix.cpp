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

#include "lrp/polymatrix.hpp"

#include <utility>

namespace lrp {

template <FieldElement K>
PolyMatrix<K> PolyMatrix<K>::identity(FieldSpec f, std::size_t n) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly<K>::one(f);
    return m;
}

template <FieldElement K>
PolyMatrix<K> PolyMatrix<K>::linear(const Matrix<K>& c0, const Matrix<K>& c1) {
    c0.check_same(c1);
    PolyMatrix m(c0.field(), c0.rows(), c0.cols());
    for (std::size_t i = 0; i < c0.rows(); ++i)
        for (std::size_t j = 0; j < c0.cols(); ++j)
            m(i, j) = Poly<K>(c0.field(), typename Poly<K>::Coeffs{c0(i, j), c1(i, j)});
    return m;
}

template <FieldElement K>
PolyMatrix<K> PolyMatrix<K>::constant(const Matrix<K>& c) {
    PolyMatrix m(c.field(), c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = Poly<K>::constant(c.field(), c(i, j));
    return m;
}

template <FieldElement K>
void PolyMatrix<K>::check_same(const PolyMatrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("polynomial matrix size mismatch");
}

template <FieldElement K>
bool PolyMatrix<K>::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

template <FieldElement K>
std::optional<std::size_t> PolyMatrix<K>::degree() const {
    std::optional<std::size_t> d;
    for (const auto& p : a_) d = std::max(d, p.degree());
    return d;
}

template <FieldElement K>
Matrix<K> PolyMatrix<K>::coefficient(std::size_t k) const {
    Matrix<K> m(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).coeff(k);
    return m;
}

template <FieldElement K>
PolyMatrix<K> PolyMatrix<K>::multiply(const PolyMatrix& a, const PolyMatrix& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    if (a.cols_ != b.rows_) throw InputError("polynomial matrix product size mismatch");
    PolyMatrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

namespace {

// Fraction-free echelon elimination; returns (rank, sign, last pivot).
template <FieldElement K>
std::size_t bareiss(PolyMatrix<K>& m, int& sign) {
    const FieldSpec f = m.field();
    Poly<K> prev = Poly<K>::one(f);
    std::size_t r = 0;
    sign = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Poly<K> t = m(r, c) * m(i, j);
                if (!m(i, c).is_zero()) t -= m(i, c) * m(r, j);
                m(i, j) = prev.is_one() ? std::move(t) : divexact(t, prev);
            }
            m(i, c) = Poly<K>(f);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

template <FieldElement K>
class SmithElimination {
   public:
    SmithElimination(PolyMatrix<K> g, PolyMatrix<K>* u, PolyMatrix<K>* v) : s_(std::move(g)), u_(u), v_(v) {}

    std::vector<Poly<K>> run() {
        const std::size_t m = s_.rows(), n = s_.cols();
        std::vector<Poly<K>> factors;
        for (std::size_t t = 0; t < std::min(m, n); ++t) {
            if (!settle_pivot(t)) break;
            const K lead = s_(t, t).leading();
            if (!lead.is_one()) scale_row(t, lead.inverse());
            factors.push_back(s_(t, t));
        }
        return factors;
    }

    PolyMatrix<K>& diagonal() { return s_; }

   private:
    // Brings a pivot to (t,t) that clears row t, column t, and divides the
    // remaining submatrix. Returns false when the submatrix is zero.
    bool settle_pivot(std::size_t t) {
        const std::size_t m = s_.rows(), n = s_.cols();
        for (;;) {
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const auto& e = s_(i, j);
                    if (e.is_zero()) continue;
                    if (bi == m || *e.degree() < *s_(bi, bj).degree()) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == m) return false;
            if (bi != t) swap_rows(t, bi);
            if (bj != t) swap_cols(t, bj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s_(i, t).is_zero()) continue;
                auto [q, r] = divmod(s_(i, t), s_(t, t));
                add_row(i, t, q);
                dirty |= !r.is_zero();
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s_(t, j).is_zero()) continue;
                auto [q, r] = divmod(s_(t, j), s_(t, t));
                add_col(j, t, q);
                dirty |= !r.is_zero();
            }
            if (dirty) continue;

            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (!divides(s_(t, t), s_(i, j))) {
                        add_row(t, i, -Poly<K>::one(s_.field()));
                        fixed = true;
                    }
            if (!fixed) return true;
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < s_.cols(); ++j) std::swap(s_(a, j), s_(b, j));
        if (u_)
            for (std::size_t j = 0; j < u_->cols(); ++j) std::swap((*u_)(a, j), (*u_)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < s_.rows(); ++i) std::swap(s_(i, a), s_(i, b));
        if (v_)
            for (std::size_t i = 0; i < v_->rows(); ++i) std::swap((*v_)(i, a), (*v_)(i, b));
    }
    // row_dst -= q * row_src
    void add_row(std::size_t dst, std::size_t src, const Poly<K>& q) {
        for (std::size_t j = 0; j < s_.cols(); ++j)
            if (!s_(src, j).is_zero()) s_(dst, j) -= q * s_(src, j);
        if (u_)
            for (std::size_t j = 0; j < u_->cols(); ++j)
                if (!(*u_)(src, j).is_zero()) (*u_)(dst, j) -= q * (*u_)(src, j);
    }
    // col_dst -= q * col_src
    void add_col(std::size_t dst, std::size_t src, const Poly<K>& q) {
        for (std::size_t i = 0; i < s_.rows(); ++i)
            if (!s_(i, src).is_zero()) s_(i, dst) -= q * s_(i, src);
        if (v_)
            for (std::size_t i = 0; i < v_->rows(); ++i)
                if (!(*v_)(i, src).is_zero()) (*v_)(i, dst) -= q * (*v_)(i, src);
    }
    void scale_row(std::size_t r, const K& k) {
        for (std::size_t j = 0; j < s_.cols(); ++j) s_(r, j) *= k;
        if (u_)
            for (std::size_t j = 0; j < u_->cols(); ++j) (*u_)(r, j) *= k;
    }

    PolyMatrix<K> s_;
    PolyMatrix<K>* u_;
    PolyMatrix<K>* v_;
};

template <FieldElement K>
Poly<K> cofactor_det(const PolyMatrix<K>& g, const std::vector<std::size_t>& rows, std::vector<std::size_t> cols) {
    const FieldSpec& f = g.field();
    if (rows.empty()) return Poly<K>::one(f);
    if (rows.size() == 1) return g(rows[0], cols[0]);
    const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    Poly<K> acc(f);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Poly<K>& e = g(rows[0], cols[k]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> sub = cols;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
        Poly<K> term = e * cofactor_det(g, rest, sub);
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Calls fn on every k-subset of {0..n-1}, ascending.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

template <FieldElement K>
std::size_t normal_rank(const PolyMatrix<K>& g) {
    PolyMatrix<K> m = g;
    int sign = 1;
    return bareiss(m, sign);
}

template <FieldElement K>
Poly<K> det(const PolyMatrix<K>& g) {
    if (g.rows() != g.cols()) throw InputError("determinant of a non-square polynomial matrix");
    if (g.rows() == 0) return Poly<K>::one(g.field());
    PolyMatrix<K> m = g;
    int sign = 1;
    if (bareiss(m, sign) < g.rows()) return Poly<K>(g.field());
    Poly<K> d = m(g.rows() - 1, g.cols() - 1);
    return sign < 0 ? -d : d;
}

template <FieldElement K>
SmithResult<K> smith_form(const PolyMatrix<K>& g) {
    SmithResult<K> res{PolyMatrix<K>::identity(g.field(), g.rows()), PolyMatrix<K>(g.field(), g.rows(), g.cols()),
                       PolyMatrix<K>::identity(g.field(), g.cols()), {}};
    SmithElimination<K> e(g, &res.U, &res.V);
    res.invariant_factors = e.run();
    res.S = std::move(e.diagonal());
    return res;
}

template <FieldElement K>
std::vector<Poly<K>> invariant_factors(const PolyMatrix<K>& g) {
    SmithElimination<K> e(g, nullptr, nullptr);
    return e.run();
}

template <FieldElement K>
Poly<K> minor(const PolyMatrix<K>& g, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw InputError("minor needs as many rows as columns");
    return cofactor_det(g, rows, cols);
}

template <FieldElement K>
std::vector<Poly<K>> determinantal_divisors(const PolyMatrix<K>& g) {
    if (g.rows() > 4 || g.cols() > 4) throw InputError("exhaustive minor enumeration is limited to 4x4");
    std::vector<Poly<K>> out;
    for (std::size_t k = 1; k <= std::min(g.rows(), g.cols()); ++k) {
        Poly<K> d(g.field());
        for_each_subset(g.rows(), k, [&](const std::vector<std::size_t>& rs) {
            for_each_subset(g.cols(), k, [&](const std::vector<std::size_t>& cs) {
                if (!d.is_one()) d = gcd(d, cofactor_det(g, rs, cs));
            });
        });
        if (d.is_zero()) break;
        out.push_back(d);
    }
    return out;
}

template <FieldElement K>
bool is_unimodular(const PolyMatrix<K>& u) {
    if (u.rows() != u.cols()) throw InputError("unimodularity of a non-square matrix");
    return det(u).is_unit();
}

#define LRP_INSTANTIATE(K)                                                                                \
    template class PolyMatrix<K>;                                                                         \
    template std::size_t normal_rank(const PolyMatrix<K>&);                                               \
    template Poly<K> det(const PolyMatrix<K>&);                                                           \
    template SmithResult<K> smith_form(const PolyMatrix<K>&);                                             \
    template std::vector<Poly<K>> invariant_factors(const PolyMatrix<K>&);                                \
    template std::vector<Poly<K>> determinantal_divisors(const PolyMatrix<K>&);                           \
    template Poly<K> minor(const PolyMatrix<K>&, const std::vector<std::size_t>&, const std::vector<std::size_t>&); \
    template bool is_unimodular(const PolyMatrix<K>&);

LRP_INSTANTIATE(Rational)
LRP_INSTANTIATE(Zp)

}  // namespace lrp

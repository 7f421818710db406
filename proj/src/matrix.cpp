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

#include "lrp/matrix.hpp"

#include <utility>

#include "lrp/errors.hpp"

namespace lrp {

template <FieldElement K>
Matrix<K> Matrix<K>::identity(FieldSpec f, std::size_t n) {
    Matrix m(f, n, n);
    const K one = K::make(f, 1);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

template <FieldElement K>
Matrix<K> Matrix<K>::from_ints(FieldSpec f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw InputError("ragged matrix literal");
        std::size_t j = 0;
        for (auto x : row) m(i, j++) = K::make(f, x);
        ++i;
    }
    return m;
}

template <FieldElement K>
void Matrix<K>::check_same(const Matrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix size mismatch");
}

template <FieldElement K>
bool Matrix<K>::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

template <FieldElement K>
Matrix<K>& Matrix<K>::operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

template <FieldElement K>
Matrix<K>& Matrix<K>::operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

template <FieldElement K>
Matrix<K>& Matrix<K>::operator*=(const K& k) {
    for (auto& x : a_) x *= k;
    return *this;
}

template <FieldElement K>
Matrix<K> Matrix<K>::multiply(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    if (a.cols_ != b.rows_) throw InputError("matrix product size mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const K& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
        }
    return r;
}

template <FieldElement K>
Matrix<K> Matrix<K>::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
template <FieldElement K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const K inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const K t = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= t * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

template <FieldElement K>
std::size_t Matrix<K>::rank() const {
    Matrix t = *this;
    return rref(t).size();
}

template <FieldElement K>
K Matrix<K>::det() const {
    if (!is_square()) throw InputError("determinant of a non-square matrix");
    Matrix m = *this;
    K d = K::make(field_, 1);
    const std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return K::make(field_, 0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        const K inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const K t = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= t * m(c, j);
        }
    }
    return d;
}

template <FieldElement K>
std::optional<Matrix<K>> Matrix<K>::inverse() const {
    if (!is_square()) throw InputError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = K::make(field_, 1);
    }
    const auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <FieldElement K>
Matrix<K> Matrix<K>::kernel() const {
    Matrix m = *this;
    const auto piv = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix basis(field_, cols_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = K::make(field_, 1);
        for (std::size_t r = 0; r < piv.size(); ++r) basis(piv[r], k) = -m(r, free[k]);
    }
    return basis;
}

template <FieldElement K>
Matrix<K> block_diagonal(const Matrix<K>& a, const Matrix<K>& b) {
    if (!(a.field() == b.field())) throw FieldMismatch();
    Matrix<K> r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

template class Matrix<Rational>;
template class Matrix<Zp>;
template Matrix<Rational> block_diagonal(const Matrix<Rational>&, const Matrix<Rational>&);
template Matrix<Zp> block_diagonal(const Matrix<Zp>&, const Matrix<Zp>&);

}  // namespace lrp

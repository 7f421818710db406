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

#ifndef LRP_MATRIX_HPP
#define LRP_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "lrp/field.hpp"

namespace lrp {

/// Dense constant matrix over an exact field, row-major.
template <FieldElement K>
class Matrix {
   public:
    Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, K::make(f, 0)) {}

    static Matrix identity(FieldSpec f, std::size_t n);
    static Matrix from_ints(FieldSpec f, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    std::size_t rank() const;
    K det() const;
    std::optional<Matrix> inverse() const;
    /// Columns form a basis of the right kernel.
    Matrix kernel() const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const K& k);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.a_) x = -x;
        return a;
    }
    friend Matrix operator*(Matrix a, const K& k) { return a *= k; }
    friend Matrix operator*(const K& k, Matrix a) { return a *= k; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    void check_same(const Matrix& o) const;

   private:
    static Matrix multiply(const Matrix& a, const Matrix& b);

    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

/// Block diagonal diag(a, b).
template <FieldElement K>
Matrix<K> block_diagonal(const Matrix<K>& a, const Matrix<K>& b);

extern template class Matrix<Rational>;
extern template class Matrix<Zp>;

}  // namespace lrp

#endif

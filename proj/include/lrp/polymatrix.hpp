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
 * @file polymatrix.hpp
 * @brief Matrices over F[s]: normal rank, determinant, Smith normal form and
 *        determinantal divisors.
 *
 * smith_form() eliminates with gcd-reducing row and column operations. The
 * pivot is always a nonzero entry of minimal degree in the working
 * submatrix, ties broken in row-major order, which keeps the output
 * deterministic. determinantal_divisors() enumerates minors directly and
 * shares no code with the elimination, so the two cross-check each other.
 */

#ifndef LRP_POLYMATRIX_HPP
#define LRP_POLYMATRIX_HPP

#include <cstddef>
#include <vector>

#include "lrp/matrix.hpp"
#include "lrp/poly.hpp"

namespace lrp {

template <FieldElement K>
class PolyMatrix {
   public:
    PolyMatrix(FieldSpec f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Poly<K>(f)) {}

    static PolyMatrix identity(FieldSpec f, std::size_t n);
    /// c0 + s*c1
    static PolyMatrix linear(const Matrix<K>& c0, const Matrix<K>& c1);
    static PolyMatrix constant(const Matrix<K>& c);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Poly<K>& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Poly<K>& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_diagonal() const;
    /// Maximum entry degree; empty for the zero matrix.
    std::optional<std::size_t> degree() const;
    /// Coefficient matrix of s^k.
    Matrix<K> coefficient(std::size_t k) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return multiply(a, b); }
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    void check_same(const PolyMatrix& o) const;

   private:
    static PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Poly<K>> a_;
};

template <FieldElement K>
struct SmithResult {
    PolyMatrix<K> U;  ///< m×m unimodular
    PolyMatrix<K> S;  ///< m×n, S = U·G·V, diagonal
    PolyMatrix<K> V;  ///< n×n unimodular
    std::vector<Poly<K>> invariant_factors;  ///< monic, γ1 | γ2 | … | γρ
};

/// Rank over F(s), by fraction-free elimination.
template <FieldElement K>
std::size_t normal_rank(const PolyMatrix<K>& g);

/// Exact determinant of a square polynomial matrix, by fraction-free elimination.
template <FieldElement K>
Poly<K> det(const PolyMatrix<K>& g);

template <FieldElement K>
SmithResult<K> smith_form(const PolyMatrix<K>& g);

/// Invariant factors, same elimination as smith_form without transforms.
template <FieldElement K>
std::vector<Poly<K>> invariant_factors(const PolyMatrix<K>& g);

/// D1, …, Dρ from exhaustive minor enumeration. Limited to matrices with
/// both dimensions ≤ 4; throws InputError beyond that.
template <FieldElement K>
std::vector<Poly<K>> determinantal_divisors(const PolyMatrix<K>& g);

/// Determinant of the minor on the given rows and columns, by cofactor expansion.
template <FieldElement K>
Poly<K> minor(const PolyMatrix<K>& g, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

template <FieldElement K>
bool is_unimodular(const PolyMatrix<K>& u);

extern template class PolyMatrix<Rational>;
extern template class PolyMatrix<Zp>;

}  // namespace lrp

#endif

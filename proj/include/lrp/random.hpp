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

#ifndef LRP_RANDOM_HPP
#define LRP_RANDOM_HPP

#include <cstdint>
#include <random>

#include "lrp/matrix.hpp"

namespace lrp {

/// Seed of the k-th independent stream derived from a base seed.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t k) noexcept {
    return seed * 0x9E3779B97F4A7C15ULL + k * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL;
}

/// Uniform residue over F_p; an integer in [-height, height] over Q.
template <FieldElement K>
K random_scalar(const FieldSpec& f, std::mt19937_64& rng, std::int64_t height = 2) {
    if (f.is_finite()) {
        std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(f.characteristic()) - 1);
        return K::make(f, d(rng));
    }
    std::uniform_int_distribution<std::int64_t> d(-height, height);
    return K::make(f, d(rng));
}

template <FieldElement K>
Matrix<K> random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                        std::int64_t height = 2) {
    Matrix<K> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar<K>(f, rng, height);
    return m;
}

}  // namespace lrp

#endif

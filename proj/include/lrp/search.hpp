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
 * @file search.hpp
 * @brief Budgets and a deterministic parallel scan over candidate indices.
 *
 * first_hit() walks the index range in consecutive blocks. Inside a block
 * worker w tests the indices congruent to w modulo the worker count; after
 * the block the smallest successful index wins. The answer is therefore the
 * smallest successful index overall, whatever the number of workers.
 */

#ifndef LRP_SEARCH_HPP
#define LRP_SEARCH_HPP

#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace lrp {

struct SearchOptions {
    /// Largest candidate space enumerated exhaustively.
    std::uint64_t exhaustive_cap = std::uint64_t{1} << 20;
    /// Randomized trials per search layer.
    std::uint64_t random_trials = 100000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

template <class T>
struct Hit {
    std::uint64_t index;
    T value;
};

/// Smallest k < count with fn(k) engaged. fn must be safe to call concurrently.
template <class T, class Fn>
std::optional<Hit<T>> first_hit(std::uint64_t count, unsigned jobs, Fn&& fn) {
    if (jobs <= 1) {
        for (std::uint64_t k = 0; k < count; ++k)
            if (std::optional<T> v = fn(k)) return Hit<T>{k, std::move(*v)};
        return std::nullopt;
    }
    const std::uint64_t block = std::uint64_t{256} * jobs;
    for (std::uint64_t start = 0; start < count; start += block) {
        const std::uint64_t stop = count - start < block ? count : start + block;
        std::mutex mu;
        std::optional<Hit<T>> best;
        std::exception_ptr error;
        {
            std::vector<std::jthread> workers;
            for (unsigned w = 0; w < jobs; ++w)
                workers.emplace_back([&, w] {
                    try {
                        for (std::uint64_t k = start + w; k < stop; k += jobs) {
                            {
                                std::lock_guard lock(mu);
                                if (best && best->index < k) return;
                            }
                            if (std::optional<T> v = fn(k)) {
                                std::lock_guard lock(mu);
                                if (!best || k < best->index) best = Hit<T>{k, std::move(*v)};
                                return;
                            }
                        }
                    } catch (...) {
                        std::lock_guard lock(mu);
                        if (!error) error = std::current_exception();
                    }
                });
        }
        if (error) std::rethrow_exception(error);
        if (best) return best;
    }
    return std::nullopt;
}

/// base^exp, saturating at the maximum of std::uint64_t.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

}  // namespace lrp

#endif

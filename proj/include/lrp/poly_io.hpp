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

#ifndef LRP_POLY_IO_HPP
#define LRP_POLY_IO_HPP

#include <string>
#include <string_view>

#include "lrp/poly.hpp"

namespace lrp {

/// Parses a sum of terms `c*s^k` (the `*` and the exponent are optional),
/// e.g. "s^2+1", "2/3*s - 1", "-s^3 + 4s". Throws InputError.
template <FieldElement K>
Poly<K> parse_poly(const FieldSpec& f, std::string_view text);

/// Inverse of parse_poly, highest degree first: "s^2 + 2/3*s - 1".
template <FieldElement K>
std::string to_string(const Poly<K>& p);

}  // namespace lrp

#endif

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
 * @file cli.hpp
 * @brief The lrpencil command line: analyze, check, perturb, place, verify
 *        and oracle.
 *
 * Exit codes: 0 feasible or verified, 1 infeasible or failed verification,
 * 2 feasibility unknown, 3 no construction within the budget, 64 usage and
 * input errors, 70 internal errors.
 */

#ifndef LRP_CLI_HPP
#define LRP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lrp::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kNotFound = 3;
inline constexpr int kUsage = 64;
inline constexpr int kInternal = 70;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lrp::cli

#endif

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

#ifndef LRP_ERRORS_HPP
#define LRP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrp {

/// Malformed input or a violated precondition of a public operation.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Operands live over different fields.
class FieldMismatch : public InputError {
   public:
    FieldMismatch() : InputError("operands are defined over different fields") {}
    using InputError::InputError;
};

/// An internal invariant failed. Always a bug, never a user error.
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace lrp

#endif

// Copyright 2026 The qcq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCQ_ERRORS_H
#define QCQ_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcq {

/// Operand shapes disagree (vector lengths, matrix widths).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Block lengths the algebra does not support (even n, n out of range).
struct UnsupportedLength : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed coefficient string; carries the offending character offset.
struct ParseError : std::invalid_argument {
    ParseError(const std::string &msg, size_t position)
        : std::invalid_argument(msg + " (at position " + std::to_string(position) + ")"), position_(position) {
    }
    size_t position() const {
        return position_;
    }

   private:
    size_t position_;
};

/// A value violates the invariants of the type it is meant to build.
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds what an exhaustive routine is allowed to enumerate.
struct CapacityError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Caller broke a documented precondition (unverified input, wrong code).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// An internal cross-check failed. Always a bug.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qcq

#endif

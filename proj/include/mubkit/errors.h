// Copyright 2026 The mubkit Authors
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

#ifndef MUBKIT_ERRORS_H
#define MUBKIT_ERRORS_H

#include <stdexcept>
#include <string>

namespace mubkit {

/// An index (basis label, matrix row, group component) outside its range.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Operands that live in spaces of different dimension.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value that violates a documented invariant (bad spin label, vector
/// that is not unit norm, set of vectors that is not orthonormal).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A request whose size exceeds the configured bound for exact work.
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

/// A mathematical guarantee failed to hold. Always indicates a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace mubkit

#endif  // MUBKIT_ERRORS_H

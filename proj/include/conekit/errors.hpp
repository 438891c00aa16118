// Copyright 2026 The conekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONEKIT_ERRORS_HPP
#define CONEKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conekit {

struct InvalidSize : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GeometryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyRegion : GeometryError {
    using GeometryError::GeometryError;
};
struct NoRoom : GeometryError {
    using GeometryError::GeometryError;
};
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct AmbiguousCharge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidAction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LocalizationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
/// Raised when an internal invariant that must always hold is found broken.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace conekit

#endif

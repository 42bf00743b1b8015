// Copyright 2026 The qconv Authors
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

#ifndef QCONV_ERRORS_H
#define QCONV_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qconv {

/// Polynomial degree exceeded kMaxDegree.
struct DegreeOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Text input did not parse. Line and column are 1-based (0 when unknown).
struct ParseError : std::invalid_argument {
    size_t line;
    size_t column;
    ParseError(const std::string &msg, size_t line = 0, size_t column = 0);
};

/// Z-bar operators requested for a code whose conditioning polynomial is not a monomial.
struct CatastrophicCode : std::domain_error {
    using std::domain_error::domain_error;
};

/// No error pattern satisfies the given syndromes.
struct InfeasibleSyndromes : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive search refused because the instance is too large.
struct InstanceTooLarge : std::length_error {
    using std::length_error::length_error;
};

}  // namespace qconv

#endif

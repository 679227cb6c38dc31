// Copyright 2026 The qwork Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qwork {

/// Caller passed arguments that do not fit together (dimension mismatch,
/// out-of-range parameter, empty grid).
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A value failed a physical validity check (Hermiticity, trace, positivity,
/// unitarity, normalization).
class ValidationError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// An operation was called outside the regime it is defined for, e.g. asking
/// for the average work of a state that still carries coherence.
class PreconditionError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace qwork

// Copyright 2026 The Hyperent Authors.
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

#ifndef HYPERENT_ERRORS_HPP
#define HYPERENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperent {

/// Malformed hypergraph input (compact text or JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested computation exceeds a hard resource cap (2^n state table,
/// 2^m subset enumeration) and was refused rather than attempted.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hyperent

#endif

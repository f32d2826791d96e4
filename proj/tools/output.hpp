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

#ifndef HYPERENT_TOOLS_OUTPUT_HPP
#define HYPERENT_TOOLS_OUTPUT_HPP

#include <string>

#include "json.hpp"

#include "hyperent/rational.hpp"

namespace hyperent::cli {

enum class Format {
    kText,
    kJson,
    kTsv,
};

Format parse_format(const std::string& name);

/// 6-significant-digit decimal.
std::string decimal6(double value);

/// "p/q" always (integers render as "p/1") so rows stay column-stable.
std::string fraction_plain(const Rational& r);

/// "p/q (decimal)".
std::string fraction(const Rational& r);

/// {"num": .., "den": .., "value": ..}; num/den are JSON integers when they
/// fit int64, decimal strings beyond that.
nlohmann::json rational_json(const Rational& r);

}  // namespace hyperent::cli

#endif

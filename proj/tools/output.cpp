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

#include "output.hpp"

#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hyperent::cli {

Format parse_format(const std::string& name) {
    if (name == "text") {
        return Format::kText;
    }
    if (name == "json") {
        return Format::kJson;
    }
    if (name == "tsv") {
        return Format::kTsv;
    }
    throw std::invalid_argument("unknown format: " + name);
}

std::string decimal6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::string fraction_plain(const Rational& r) {
    return Rational::int_to_string(r.numerator()) + "/" + Rational::int_to_string(r.denominator());
}

std::string fraction(const Rational& r) {
    return fraction_plain(r) + " (" + decimal6(r.to_double()) + ")";
}

namespace {

nlohmann::json int128_json(Rational::Int v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return Rational::int_to_string(v);
}

}  // namespace

nlohmann::json rational_json(const Rational& r) {
    nlohmann::json j;
    j["num"] = int128_json(r.numerator());
    j["den"] = int128_json(r.denominator());
    j["value"] = r.to_double();
    return j;
}

}  // namespace hyperent::cli

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

#include <cmath>
#include <random>

#include "doctest.h"
#include "hyperent/rational.hpp"

using hyperent::Rational;

TEST_CASE("rationals reduce on construction") {
    CHECK(Rational(4, 16) == Rational(1, 4));
    CHECK(Rational(-4, 16) == Rational(-1, 4));
    CHECK(Rational(4, -16) == Rational(-1, 4));
    CHECK(Rational(-4, -16) == Rational(1, 4));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("dyadic constructor") {
    CHECK(Rational::dyadic(-4, 4) == Rational(-1, 4));
    CHECK(Rational::dyadic(0, 10) == Rational(0));
    CHECK(Rational::dyadic(1, 0) == Rational(1));
    CHECK_THROWS_AS(Rational::dyadic(1, 127), std::invalid_argument);
    CHECK_THROWS_AS(Rational::dyadic(1, -1), std::invalid_argument);
}

TEST_CASE("arithmetic identities") {
    const Rational a(3, 16);
    const Rational b(-1, 4);
    CHECK(a + b == Rational(-1, 16));
    CHECK(a - b == Rational(7, 16));
    CHECK(a * b == Rational(-3, 64));
    CHECK(-b == Rational(1, 4));
    CHECK(b.abs() == Rational(1, 4));
    CHECK(Rational(1, 4) - b * b == Rational(3, 16));
}

TEST_CASE("ordering, including deep dyadic denominators") {
    CHECK(Rational(-1, 4) < Rational(0));
    CHECK(Rational(3, 16) < Rational(1, 4));
    CHECK(Rational(1, 4) <= Rational(1, 4));
    CHECK(Rational(1, 2) > Rational(3, 16));
    // Denominators near the top of the dyadic range the library produces.
    const Rational tiny = Rational::dyadic(1, 120);
    const Rational tinier = Rational::dyadic(1, 124);
    CHECK(tinier < tiny);
    CHECK(tiny < Rational(1, 4));
    CHECK(Rational::dyadic(-1, 124) < tinier);
}

TEST_CASE("string rendering") {
    CHECK(Rational(3, 16).to_string() == "3/16");
    CHECK(Rational(-1, 4).to_string() == "-1/4");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(6).to_string() == "6");
    // 2^100 exceeds 64 bits.
    CHECK(Rational::dyadic(1, 100).to_string() == "1/1267650600228229401496703205376");
    CHECK(Rational::int_to_string(Rational::Int(-1)) == "-1");
}

TEST_CASE("to_double matches small fractions") {
    CHECK(Rational(3, 16).to_double() == doctest::Approx(0.1875));
    CHECK(Rational(-1, 4).to_double() == doctest::Approx(-0.25));
}

TEST_CASE("randomized arithmetic agrees with floating point") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 500; ++i) {
        const long long n1 = static_cast<long long>(rng() % 41) - 20;
        const long long n2 = static_cast<long long>(rng() % 41) - 20;
        const long long d1 = 1 + static_cast<long long>(rng() % 20);
        const long long d2 = 1 + static_cast<long long>(rng() % 20);
        const Rational a(n1, d1);
        const Rational b(n2, d2);
        const double fa = static_cast<double>(n1) / d1;
        const double fb = static_cast<double>(n2) / d2;
        CHECK((a + b).to_double() == doctest::Approx(fa + fb));
        CHECK((a - b).to_double() == doctest::Approx(fa - fb));
        CHECK((a * b).to_double() == doctest::Approx(fa * fb));
        CHECK((a < b) == (fa < fb - 1e-12 ? true : (std::abs(fa - fb) < 1e-12 ? false : fa < fb)));
    }
}

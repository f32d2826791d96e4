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

#ifndef HYPERENT_RATIONAL_HPP
#define HYPERENT_RATIONAL_HPP

#include <stdexcept>
#include <string>

namespace hyperent {

/// Exact reduced fraction over 128-bit integers.
///
/// Every quantity this library produces is a dyadic rational with |value| <= 1
/// and reduced denominator dividing 2^(2n) for n <= 63 vertices, so numerators
/// and denominators stay below 2^126 and all arithmetic here (which normalizes
/// through gcds before cross-multiplying) is overflow-free on that domain.
class Rational {
  public:
    using Int = __int128;

    constexpr Rational() = default;
    constexpr Rational(long long value) : num_(value) {}  // NOLINT: implicit by design

    Rational(Int numerator, Int denominator) : num_(numerator), den_(denominator) {
        if (den_ == 0) {
            throw std::invalid_argument("Rational: zero denominator");
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    /// numerator / 2^log2_denominator
    static Rational dyadic(Int numerator, int log2_denominator) {
        if (log2_denominator < 0 || log2_denominator > 126) {
            throw std::invalid_argument("Rational::dyadic: exponent out of range");
        }
        return Rational(numerator, Int(1) << log2_denominator);
    }

    Int numerator() const { return num_; }
    Int denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

    friend Rational operator-(const Rational& r) { return Rational(-r.num_, r.den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Int g = gcd(a.den_, b.den_);
        Int scale_a = b.den_ / g;
        Int scale_b = a.den_ / g;
        return Rational(a.num_ * scale_a + b.num_ * scale_b, a.den_ * scale_a);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        Int g1 = gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
        Int g2 = gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
        return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b) {
        Int g = gcd(a.den_, b.den_);
        return a.num_ * (b.den_ / g) < b.num_ * (a.den_ / g);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) /
                                   static_cast<long double>(den_));
    }

    /// "p/q" (reduced), or just "p" for integers.
    std::string to_string() const {
        if (den_ == 1) {
            return int_to_string(num_);
        }
        return int_to_string(num_) + "/" + int_to_string(den_);
    }

    static Int gcd(Int a, Int b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static std::string int_to_string(Int v) {
        if (v == 0) {
            return "0";
        }
        bool negative = v < 0;
        unsigned __int128 u =
            negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
        std::string digits;
        while (u != 0) {
            digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
            u /= 10;
        }
        if (negative) {
            digits.push_back('-');
        }
        return std::string(digits.rbegin(), digits.rend());
    }

  private:
    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace hyperent

#endif

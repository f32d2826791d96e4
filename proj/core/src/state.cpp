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

#include "hyperent/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperent/errors.hpp"
#include "packed_table.hpp"

namespace hyperent {

SignVector::SignVector(int qubit_count, std::vector<std::uint64_t> minus_words)
    : n_(qubit_count), words_(std::move(minus_words)) {
    if (n_ < 0 || n_ > kMaxStateQubits) {
        throw std::invalid_argument("SignVector: qubit count out of range");
    }
    if (words_.size() != detail::word_count(n_)) {
        throw std::invalid_argument("SignVector: wrong packed length");
    }
    words_.back() &= detail::partial_word_mask(n_);
}

SignVector SignVector::all_plus(int qubit_count) {
    if (qubit_count < 0 || qubit_count > kMaxStateQubits) {
        throw InfeasibleError("state vector over " + std::to_string(qubit_count) +
                              " qubits exceeds the cap of " + std::to_string(kMaxStateQubits));
    }
    return SignVector(qubit_count, std::vector<std::uint64_t>(detail::word_count(qubit_count), 0));
}

int SignVector::sign(std::uint64_t index) const {
    if (index >= size()) {
        throw std::out_of_range("SignVector::sign: index out of range");
    }
    return ((words_[index >> 6] >> (index & 63)) & 1) ? -1 : 1;
}

std::uint64_t SignVector::minus_count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) {
        total += static_cast<std::uint64_t>(std::popcount(w));
    }
    return total;
}

SignVector build_state(const Hypergraph& g, int max_state_qubits) {
    const int n = g.vertex_count();
    if (n > max_state_qubits || n > kMaxStateQubits) {
        throw InfeasibleError("state vector over " + std::to_string(n) +
                              " qubits exceeds the cap of " +
                              std::to_string(std::min(max_state_qubits, kMaxStateQubits)));
    }
    std::vector<std::uint64_t> words(detail::word_count(n), 0);
    for (EdgeMask e : g.edges()) {
        detail::xor_monomial(words, n, e);
    }
    return SignVector(n, std::move(words));
}

SignVector apply_hyperedge_gate(const SignVector& sv, EdgeMask e) {
    const int n = sv.qubit_count();
    if ((e & ~full_edge(n)) != 0) {
        throw std::invalid_argument("apply_hyperedge_gate: edge uses a qubit above " +
                                    std::to_string(n));
    }
    std::vector<std::uint64_t> words = sv.minus_words();
    detail::xor_monomial(words, n, e);
    return SignVector(n, std::move(words));
}

ReducedDensity1Q::ReducedDensity1Q(Rational off_diagonal) : a_(off_diagonal) {
    if (a_.abs() > Rational(1, 2)) {
        throw std::invalid_argument("ReducedDensity1Q: |a| must be at most 1/2");
    }
}

Rational ReducedDensity1Q::determinant() const { return Rational(1, 4) - a_ * a_; }

Rational ReducedDensity1Q::lambda_min() const { return Rational(1, 2) - a_.abs(); }

ReducedDensity1Q reduced_density(const SignVector& sv, int t) {
    const int n = sv.qubit_count();
    if (t < 1 || t > n) {
        throw std::out_of_range("reduced_density: qubit " + std::to_string(t) +
                                " out of range 1.." + std::to_string(n));
    }
    const std::uint64_t t_bit = std::uint64_t{1} << (t - 1);
    const std::uint64_t below = t_bit - 1;
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    std::int64_t acc = 0;
    for (std::uint64_t y = 0; y < half; ++y) {
        const std::uint64_t x0 = (y & below) | ((y & ~below) << 1);
        acc += sv.sign(x0) == sv.sign(x0 | t_bit) ? 1 : -1;
    }
    return ReducedDensity1Q(Rational::dyadic(acc, n));
}

double AmplitudeVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

AmplitudeVector to_amplitudes(const SignVector& sv) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(sv.size()));
    AmplitudeVector av;
    av.qubit_count = sv.qubit_count();
    av.amplitudes.resize(sv.size());
    for (std::uint64_t x = 0; x < sv.size(); ++x) {
        av.amplitudes[x] = sv.sign(x) * scale;
    }
    return av;
}

Mat2 Mat2::operator*(const Mat2& other) const {
    Mat2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out(r, c) = (*this)(r, 0) * other(0, c) + (*this)(r, 1) * other(1, c);
        }
    }
    return out;
}

Mat2 Mat2::adjoint() const {
    return Mat2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

double Mat2::max_abs_diff(const Mat2& other) const {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(m[i] - other.m[i]));
    }
    return worst;
}

bool Mat2::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_abs_diff(identity()) <= tol;
}

AmplitudeVector apply_local_unitary(const AmplitudeVector& av, int t, const Mat2& u) {
    if (t < 1 || t > av.qubit_count) {
        throw std::out_of_range("apply_local_unitary: qubit " + std::to_string(t) +
                                " out of range 1.." + std::to_string(av.qubit_count));
    }
    if (!u.is_unitary(1e-10)) {
        throw std::invalid_argument("apply_local_unitary: matrix is not unitary within 1e-10");
    }
    const std::uint64_t t_bit = std::uint64_t{1} << (t - 1);
    const std::uint64_t below = t_bit - 1;
    const std::uint64_t half = std::uint64_t{1} << (av.qubit_count - 1);
    AmplitudeVector out = av;
    for (std::uint64_t y = 0; y < half; ++y) {
        const std::uint64_t x0 = (y & below) | ((y & ~below) << 1);
        const std::uint64_t x1 = x0 | t_bit;
        const std::complex<double> a0 = av.amplitudes[x0];
        const std::complex<double> a1 = av.amplitudes[x1];
        out.amplitudes[x0] = u(0, 0) * a0 + u(0, 1) * a1;
        out.amplitudes[x1] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return out;
}

Mat2 reduced_density_float(const AmplitudeVector& av, int t) {
    if (t < 1 || t > av.qubit_count) {
        throw std::out_of_range("reduced_density_float: qubit " + std::to_string(t) +
                                " out of range 1.." + std::to_string(av.qubit_count));
    }
    const std::uint64_t t_bit = std::uint64_t{1} << (t - 1);
    const std::uint64_t below = t_bit - 1;
    const std::uint64_t half = std::uint64_t{1} << (av.qubit_count - 1);
    std::complex<double> r00 = 0.0;
    std::complex<double> r01 = 0.0;
    std::complex<double> r11 = 0.0;
    for (std::uint64_t y = 0; y < half; ++y) {
        const std::uint64_t x0 = (y & below) | ((y & ~below) << 1);
        const std::complex<double> a0 = av.amplitudes[x0];
        const std::complex<double> a1 = av.amplitudes[x0 | t_bit];
        r00 += a0 * std::conj(a0);
        r01 += a0 * std::conj(a1);
        r11 += a1 * std::conj(a1);
    }
    Mat2 rho;
    rho(0, 0) = r00;
    rho(0, 1) = r01;
    rho(1, 0) = std::conj(r01);
    rho(1, 1) = r11;
    return rho;
}

Mat2 random_local_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        std::complex<double> c00(gauss(rng), gauss(rng));
        std::complex<double> c10(gauss(rng), gauss(rng));
        std::complex<double> c01(gauss(rng), gauss(rng));
        std::complex<double> c11(gauss(rng), gauss(rng));
        const double n0 = std::sqrt(std::norm(c00) + std::norm(c10));
        if (n0 < 1e-6) {
            continue;
        }
        c00 /= n0;
        c10 /= n0;
        const std::complex<double> overlap = std::conj(c00) * c01 + std::conj(c10) * c11;
        c01 -= overlap * c00;
        c11 -= overlap * c10;
        const double n1 = std::sqrt(std::norm(c01) + std::norm(c11));
        if (n1 < 1e-6) {
            continue;
        }
        c01 /= n1;
        c11 /= n1;
        Mat2 u;
        u(0, 0) = c00;
        u(1, 0) = c10;
        u(0, 1) = c01;
        u(1, 1) = c11;
        return u;
    }
}

}  // namespace hyperent

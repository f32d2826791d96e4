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

#ifndef HYPERENT_STATE_HPP
#define HYPERENT_STATE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hyperent/hypergraph.hpp"
#include "hyperent/rational.hpp"

namespace hyperent {

// Brute-force state-vector oracle. A hypergraph state is a real equally
// weighted state: amplitude(x) = signs[x] / sqrt(2^n) with signs[x] = ±1,
// so the exact track stores only the sign pattern and all reduced-density
// quantities are dyadic rationals with zero tolerance. Floating-point
// amplitudes exist solely for arbitrary local unitaries.
//
// Basis convention: bit i-1 of the index x is qubit/variable x_i (x_1 is the
// least significant bit).

/// Signs of sqrt(2^n)·|state⟩, bit-packed: bit x of the words is set exactly
/// when the amplitude at x is negative.
class SignVector {
  public:
    SignVector(int qubit_count, std::vector<std::uint64_t> minus_words);

    /// |+⟩^⊗n: every sign +1.
    static SignVector all_plus(int qubit_count);

    int qubit_count() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }

    /// +1 or -1.
    int sign(std::uint64_t index) const;

    /// Number of negative entries; equals the Hamming weight of the
    /// underlying Boolean function.
    std::uint64_t minus_count() const;

    const std::vector<std::uint64_t>& minus_words() const { return words_; }

    friend bool operator==(const SignVector&, const SignVector&) = default;

  private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Builds the hypergraph state: signs[x] = (-1)^(u(g)(x)), i.e. the result of
/// applying every hyperedge gate to |+⟩^⊗n. Throws InfeasibleError when
/// n > max_state_qubits.
SignVector build_state(const Hypergraph& g, int max_state_qubits = kMaxStateQubits);

/// Applies the hyperedge gate for e: flips the sign at exactly those x whose
/// bits cover e. The empty edge flips every entry (global phase). Gates
/// commute, so application order never matters.
SignVector apply_hyperedge_gate(const SignVector& sv, EdgeMask e);

/// Single-qubit reduced density matrix of a real equally weighted state:
/// [[1/2, a], [a, 1/2]] with the off-diagonal a an exact dyadic rational,
/// |a| <= 1/2.
class ReducedDensity1Q {
  public:
    explicit ReducedDensity1Q(Rational off_diagonal);

    const Rational& off_diagonal() const { return a_; }

    /// det = 1/4 - a^2.
    Rational determinant() const;

    /// Smallest eigenvalue, 1/2 - |a|; satisfies det = λ(1-λ).
    Rational lambda_min() const;

  private:
    Rational a_;
};

/// Exact partial trace onto qubit t (1-based): a = 2^-n · Σ_y s(y,t=0)·s(y,t=1)
/// over the 2^(n-1) settings y of the other qubits.
ReducedDensity1Q reduced_density(const SignVector& sv, int t);

/// Dense complex amplitudes; norm stays 1 up to float rounding.
struct AmplitudeVector {
    int qubit_count = 0;
    std::vector<std::complex<double>> amplitudes;

    double norm() const;
};

/// amplitudes[x] = signs[x] / sqrt(2^n).
AmplitudeVector to_amplitudes(const SignVector& sv);

/// 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<std::complex<double>, 4> m{};

    static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }

    std::complex<double>& operator()(int row, int col) { return m[2 * row + col]; }
    const std::complex<double>& operator()(int row, int col) const { return m[2 * row + col]; }

    Mat2 operator*(const Mat2& other) const;
    Mat2 adjoint() const;
    std::complex<double> trace() const { return m[0] + m[3]; }
    std::complex<double> det() const { return m[0] * m[3] - m[1] * m[2]; }

    double max_abs_diff(const Mat2& other) const;
    bool is_unitary(double tol) const;
};

/// Applies u on qubit t (1-based), identity elsewhere. Throws
/// std::invalid_argument unless u·u† = I within 1e-10.
AmplitudeVector apply_local_unitary(const AmplitudeVector& av, int t, const Mat2& u);

/// Floating-point partial trace onto qubit t: Hermitian, trace 1 up to
/// rounding.
Mat2 reduced_density_float(const AmplitudeVector& av, int t);

/// Haar-ish random 2x2 unitary: orthonormalizes a complex Gaussian matrix.
Mat2 random_local_unitary(std::mt19937_64& rng);

}  // namespace hyperent

#endif

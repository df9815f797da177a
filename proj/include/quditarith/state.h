// Copyright 2026 The quditarith Authors
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

#ifndef QUDITARITH_STATE_H
#define QUDITARITH_STATE_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quditarith/digits.h"

namespace quditarith {

using Amplitude = std::complex<double>;

/// Tolerance on the squared-norm of a state after any gate application.
inline constexpr double kNormTolerance = 1e-9;

/// Contiguous run of global qudit indices [first, first + count).
struct QuditRange {
    std::size_t first = 0;
    std::size_t count = 0;

    std::size_t end() const { return first + count; }
    bool contains(std::size_t q) const { return q >= first && q < end(); }
    bool overlaps(const QuditRange &other) const { return first < other.end() && other.first < end(); }
    friend bool operator==(const QuditRange &, const QuditRange &) = default;
};

struct Register {
    std::string name;
    std::size_t size = 0;
    friend bool operator==(const Register &, const Register &) = default;
};

/// Named registers laid out back to back over global qudit indices 0..q-1.
class RegisterLayout {
   public:
    RegisterLayout(unsigned base, std::vector<Register> registers);

    unsigned base() const { return base_; }
    std::size_t total_qudits() const { return total_; }
    const std::vector<Register> &registers() const { return registers_; }

    QuditRange range(std::size_t register_index) const;
    QuditRange range(const std::string &name) const;
    std::size_t index_of(const std::string &name) const;

    friend bool operator==(const RegisterLayout &, const RegisterLayout &) = default;

   private:
    unsigned base_;
    std::vector<Register> registers_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
};

/// Dense vector of base^num_qudits amplitudes.
///
/// Basis index convention: index = sum over qudits of digit(i) * d^(q-1-i), so
/// qudit 0 is the most significant digit of the index.
class StateVector {
   public:
    /// The all-zero basis state |0...0>.
    StateVector(unsigned base, std::size_t num_qudits);
    StateVector(unsigned base, std::size_t num_qudits, std::vector<Amplitude> amplitudes);

    unsigned base() const { return base_; }
    std::size_t num_qudits() const { return num_qudits_; }
    std::size_t dimension() const { return amplitudes_.size(); }

    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    std::span<Amplitude> amplitudes() { return amplitudes_; }
    Amplitude operator[](std::size_t index) const { return amplitudes_[index]; }
    Amplitude &operator[](std::size_t index) { return amplitudes_[index]; }

    /// Index distance between consecutive levels of qudit q.
    std::size_t stride(std::size_t qudit) const;

    double squared_norm() const;

   private:
    unsigned base_;
    std::size_t num_qudits_;
    std::vector<Amplitude> amplitudes_;
};

/// Basis index of the concatenated digit strings (first string most significant).
std::size_t basis_index(std::span<const DigitString> digits);

/// Digits of a basis index over num_qudits qudits, MSB first.
DigitString basis_digits(std::size_t index, unsigned base, std::size_t num_qudits);

/// Computational basis state with one digit string per register of the layout.
StateVector basis_state(const RegisterLayout &layout, std::span<const DigitString> register_digits);

}  // namespace quditarith

#endif

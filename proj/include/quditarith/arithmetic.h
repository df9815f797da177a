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

#ifndef QUDITARITH_ARITHMETIC_H
#define QUDITARITH_ARITHMETIC_H

#include <cstdint>
#include <vector>

#include "quditarith/circuit.h"

namespace quditarith {

enum class Mode { kAdd, kSub };

const char *mode_name(Mode mode);

/// One N-input, n-digit adder/subtractor instance in base d.
struct AdderSpec {
    unsigned base = 2;
    std::size_t digits_per_input = 1;
    std::vector<std::uint64_t> inputs;
    Mode mode = Mode::kAdd;

    std::size_t num_inputs() const { return inputs.size(); }
    std::size_t ancillas() const;
    /// t + n, the width of the register holding the result.
    std::size_t result_width() const { return ancillas() + digits_per_input; }
    std::size_t total_qudits() const { return ancillas() + num_inputs() * digits_per_input; }

    /// Throws std::invalid_argument on a malformed spec.
    void validate() const;
};

/// Smallest t with d^t >= N; 0 for a single input.
std::size_t required_ancillas(std::size_t num_inputs, unsigned base);

/// Ancilla register "anc" (omitted when t = 0) followed by "in0".."in{N-1}".
RegisterLayout adder_layout(unsigned base, std::size_t digits_per_input, std::size_t num_inputs);

/// Ancilla plus first input: the register held in the Fourier basis.
QuditRange fourier_register(const RegisterLayout &layout);

/// Phase-adds the source register's value into a Fourier-basis register.
///
/// The source digit of weight d^j is paired with each Fourier qudit of weight
/// d^p with j + p < q_F and applies CP_d(sign * 2 pi * d^(j+p-q_F)), where q_F
/// is the Fourier register width. That is q_F - j gates for digit j and
/// n(n+1)/2 + n*t in total when q_F = t + n.
Circuit build_adder_component(const RegisterLayout &layout, QuditRange fourier, QuditRange source, Mode mode);

/// Encoding shifts, QFT on ancilla+in0, one ADDER component per remaining
/// input, IQFT on ancilla+in0. Measuring the Fourier register yields
/// classical_oracle(spec).
Circuit build_full_adder(const AdderSpec &spec);

/// One SHIFT per nonzero input digit.
Circuit build_encoding(const RegisterLayout &layout, const AdderSpec &spec);

/// ADD: sum of inputs. SUB: (inputs[0] - sum of the rest) mod d^(t+n).
std::uint64_t classical_oracle(const AdderSpec &spec);

}  // namespace quditarith

#endif

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

#include "quditarith/arithmetic.h"

#include <numbers>
#include <stdexcept>
#include <string>

namespace quditarith {

const char *mode_name(Mode mode) {
    return mode == Mode::kAdd ? "ADD" : "SUB";
}

std::size_t required_ancillas(std::size_t num_inputs, unsigned base) {
    if (num_inputs < 1) {
        throw std::invalid_argument("need at least one input");
    }
    if (base < 2) {
        throw std::invalid_argument("base must be at least 2");
    }
    std::size_t t = 0;
    std::uint64_t reach = 1;
    while (reach < num_inputs) {
        reach *= base;
        ++t;
    }
    return t;
}

std::size_t AdderSpec::ancillas() const {
    return required_ancillas(num_inputs(), base);
}

void AdderSpec::validate() const {
    if (base < 2) {
        throw std::invalid_argument("base must be at least 2");
    }
    if (digits_per_input < 1) {
        throw std::invalid_argument("digits per input must be at least 1");
    }
    if (inputs.empty()) {
        throw std::invalid_argument("need at least one input");
    }
    const std::uint64_t limit = checked_pow(base, digits_per_input);
    checked_pow(base, result_width());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i] >= limit) {
            throw std::invalid_argument("input " + std::to_string(i) + " = " + std::to_string(inputs[i]) +
                                        " does not fit in " + std::to_string(digits_per_input) + " base-" +
                                        std::to_string(base) + " digits");
        }
    }
}

RegisterLayout adder_layout(unsigned base, std::size_t digits_per_input, std::size_t num_inputs) {
    std::vector<Register> regs;
    const std::size_t t = required_ancillas(num_inputs, base);
    if (t > 0) {
        regs.push_back({"anc", t});
    }
    for (std::size_t i = 0; i < num_inputs; ++i) {
        regs.push_back({"in" + std::to_string(i), digits_per_input});
    }
    return RegisterLayout(base, std::move(regs));
}

QuditRange fourier_register(const RegisterLayout &layout) {
    return {0, layout.range("in0").end()};
}

Circuit build_adder_component(const RegisterLayout &layout, QuditRange fourier, QuditRange source, Mode mode) {
    if (fourier.count == 0 || source.count == 0) {
        throw std::invalid_argument("adder registers must be non-empty");
    }
    if (fourier.end() > layout.total_qudits() || source.end() > layout.total_qudits()) {
        throw std::out_of_range("adder register exceeds layout");
    }
    if (fourier.overlaps(source)) {
        throw std::invalid_argument("source register overlaps the Fourier register");
    }
    const unsigned d = layout.base();
    const double sign = mode == Mode::kAdd ? 1.0 : -1.0;
    const std::size_t qf = fourier.count;
    Circuit c(layout);
    for (std::size_t j = 0; j < source.count && j < qf; ++j) {
        const std::size_t control = source.end() - 1 - j;
        for (std::size_t p = 0; j + p < qf; ++p) {
            const std::size_t target = fourier.end() - 1 - p;
            const double angle = 2.0 * std::numbers::pi / static_cast<double>(checked_pow(d, qf - j - p));
            c.append(GateOp::cphase(control, target, sign * angle));
        }
    }
    return c;
}

Circuit build_encoding(const RegisterLayout &layout, const AdderSpec &spec) {
    Circuit c(layout);
    for (std::size_t i = 0; i < spec.num_inputs(); ++i) {
        const QuditRange reg = layout.range("in" + std::to_string(i));
        const DigitString digits = from_integer(spec.inputs[i], spec.base, reg.count);
        for (std::size_t k = 0; k < reg.count; ++k) {
            if (digits[k] != 0) {
                c.append(GateOp::shift(reg.first + k, digits[k]));
            }
        }
    }
    return c;
}

Circuit build_full_adder(const AdderSpec &spec) {
    spec.validate();
    const RegisterLayout layout = adder_layout(spec.base, spec.digits_per_input, spec.num_inputs());
    const QuditRange fourier = fourier_register(layout);
    Circuit c(layout);
    c.append(build_encoding(layout, spec), "encode");
    c.append(build_qft(layout, fourier), "QFT");
    for (std::size_t i = 1; i < spec.num_inputs(); ++i) {
        const std::string name = "in" + std::to_string(i);
        c.append(build_adder_component(layout, fourier, layout.range(name), spec.mode),
                 std::string(mode_name(spec.mode)) + " " + std::to_string(i));
    }
    c.append(build_iqft(layout, fourier), "IQFT");
    return c;
}

std::uint64_t classical_oracle(const AdderSpec &spec) {
    spec.validate();
    if (spec.mode == Mode::kAdd) {
        std::uint64_t sum = 0;
        for (std::uint64_t v : spec.inputs) {
            if (__builtin_add_overflow(sum, v, &sum)) {
                throw std::overflow_error("sum of inputs overflows 64 bits");
            }
        }
        return sum;
    }
    const std::uint64_t modulus = checked_pow(spec.base, spec.result_width());
    std::uint64_t acc = spec.inputs[0] % modulus;
    for (std::size_t i = 1; i < spec.inputs.size(); ++i) {
        acc = (acc + modulus - spec.inputs[i] % modulus) % modulus;
    }
    return acc;
}

}  // namespace quditarith

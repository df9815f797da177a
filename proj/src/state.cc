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

#include "quditarith/state.h"

#include <stdexcept>
#include <unordered_set>

namespace quditarith {

RegisterLayout::RegisterLayout(unsigned base, std::vector<Register> registers)
    : base_(base), registers_(std::move(registers)) {
    if (base_ < 2) {
        throw std::invalid_argument("layout base must be at least 2");
    }
    std::unordered_set<std::string> seen;
    for (const auto &r : registers_) {
        if (!seen.insert(r.name).second) {
            throw std::invalid_argument("duplicate register name '" + r.name + "'");
        }
        if (r.size == 0) {
            throw std::invalid_argument("register '" + r.name + "' has no qudits");
        }
        offsets_.push_back(total_);
        total_ += r.size;
    }
}

QuditRange RegisterLayout::range(std::size_t register_index) const {
    if (register_index >= registers_.size()) {
        throw std::out_of_range("register index out of range");
    }
    return {offsets_[register_index], registers_[register_index].size};
}

QuditRange RegisterLayout::range(const std::string &name) const {
    return range(index_of(name));
}

std::size_t RegisterLayout::index_of(const std::string &name) const {
    for (std::size_t i = 0; i < registers_.size(); ++i) {
        if (registers_[i].name == name) {
            return i;
        }
    }
    throw std::out_of_range("no register named '" + name + "'");
}

StateVector::StateVector(unsigned base, std::size_t num_qudits)
    : base_(base), num_qudits_(num_qudits), amplitudes_(checked_pow(base, num_qudits)) {
    if (base_ < 2) {
        throw std::invalid_argument("state base must be at least 2");
    }
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(unsigned base, std::size_t num_qudits, std::vector<Amplitude> amplitudes)
    : base_(base), num_qudits_(num_qudits), amplitudes_(std::move(amplitudes)) {
    if (base_ < 2) {
        throw std::invalid_argument("state base must be at least 2");
    }
    if (amplitudes_.size() != checked_pow(base, num_qudits)) {
        throw std::invalid_argument("amplitude count does not match base^num_qudits");
    }
}

std::size_t StateVector::stride(std::size_t qudit) const {
    if (qudit >= num_qudits_) {
        throw std::out_of_range("qudit index " + std::to_string(qudit) + " out of range");
    }
    std::size_t s = 1;
    for (std::size_t i = qudit + 1; i < num_qudits_; ++i) {
        s *= base_;
    }
    return s;
}

double StateVector::squared_norm() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

std::size_t basis_index(std::span<const DigitString> digits) {
    std::size_t index = 0;
    for (const auto &ds : digits) {
        for (unsigned d : ds.digits()) {
            index = index * ds.base() + d;
        }
    }
    return index;
}

DigitString basis_digits(std::size_t index, unsigned base, std::size_t num_qudits) {
    return from_integer(index, base, num_qudits);
}

StateVector basis_state(const RegisterLayout &layout, std::span<const DigitString> register_digits) {
    const auto &regs = layout.registers();
    if (register_digits.size() != regs.size()) {
        throw std::invalid_argument("expected one digit string per register");
    }
    for (std::size_t i = 0; i < regs.size(); ++i) {
        if (register_digits[i].base() != layout.base()) {
            throw std::invalid_argument("digit string base does not match layout for register '" + regs[i].name + "'");
        }
        if (register_digits[i].width() != regs[i].size) {
            throw std::invalid_argument("digit string width does not match register '" + regs[i].name + "'");
        }
    }
    StateVector state(layout.base(), layout.total_qudits());
    state[0] = 0.0;
    state[basis_index(register_digits)] = 1.0;
    return state;
}

}  // namespace quditarith

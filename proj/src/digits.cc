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

#include "quditarith/digits.h"

#include <stdexcept>

namespace quditarith {

namespace {

constexpr unsigned kMaxSingleCharBase = 36;

void check_base(unsigned base) {
    if (base < 2) {
        throw std::invalid_argument("base must be at least 2, got " + std::to_string(base));
    }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in base arithmetic");
    }
    return out;
}

}  // namespace

DigitString::DigitString(unsigned base, std::vector<unsigned> digits) : base_(base), digits_(std::move(digits)) {
    check_base(base_);
    for (unsigned d : digits_) {
        if (d >= base_) {
            throw std::invalid_argument(
                "digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
        }
    }
}

unsigned DigitString::digit_at_weight(std::size_t exponent) const {
    if (exponent >= digits_.size()) {
        throw std::out_of_range("digit exponent out of range");
    }
    return digits_[digits_.size() - 1 - exponent];
}

std::string DigitString::to_string() const {
    std::string out;
    if (base_ <= kMaxSingleCharBase) {
        out.reserve(digits_.size());
        for (unsigned d : digits_) {
            out.push_back(d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10)));
        }
        return out;
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) {
            out.push_back('.');
        }
        out += std::to_string(digits_[i]);
    }
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        out = checked_mul(out, base);
    }
    return out;
}

DigitString from_integer(std::uint64_t value, unsigned base, std::size_t width) {
    check_base(base);
    std::vector<unsigned> digits(width, 0);
    std::uint64_t rest = value;
    for (std::size_t i = width; i-- > 0;) {
        digits[i] = static_cast<unsigned>(rest % base);
        rest /= base;
    }
    if (rest != 0) {
        throw std::overflow_error(
            "value " + std::to_string(value) + " does not fit in " + std::to_string(width) + " base-" +
            std::to_string(base) + " digits");
    }
    return DigitString(base, std::move(digits));
}

std::uint64_t to_integer(const DigitString &digits) {
    std::uint64_t out = 0;
    for (unsigned d : digits.digits()) {
        out = checked_mul(out, digits.base());
        if (__builtin_add_overflow(out, std::uint64_t{d}, &out)) {
            throw std::overflow_error("digit string does not fit in 64 bits");
        }
    }
    return out;
}

DigitString parse_digit_string(const std::string &text, unsigned base) {
    check_base(base);
    std::vector<unsigned> digits;
    if (base <= kMaxSingleCharBase) {
        for (char c : text) {
            unsigned v;
            if (c >= '0' && c <= '9') {
                v = static_cast<unsigned>(c - '0');
            } else if (c >= 'a' && c <= 'z') {
                v = static_cast<unsigned>(c - 'a') + 10;
            } else if (c >= 'A' && c <= 'Z') {
                v = static_cast<unsigned>(c - 'A') + 10;
            } else {
                throw std::invalid_argument(std::string("invalid digit character '") + c + "'");
            }
            digits.push_back(v);
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('.', start);
            if (end == std::string::npos) {
                end = text.size();
            }
            digits.push_back(static_cast<unsigned>(std::stoul(text.substr(start, end - start))));
            start = end + 1;
        }
    }
    if (digits.empty()) {
        throw std::invalid_argument("empty digit string");
    }
    return DigitString(base, std::move(digits));
}

}  // namespace quditarith

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

#ifndef QUDITARITH_DIGITS_H
#define QUDITARITH_DIGITS_H

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace quditarith {

/// An unsigned integer written as base-d digits, most significant digit first.
///
/// Index 0 is the most significant digit, so 8 in base 2 with width 4 is
/// stored as {1, 0, 0, 0}. Construction validates every digit against the
/// base.
class DigitString {
   public:
    DigitString(unsigned base, std::vector<unsigned> digits);

    unsigned base() const { return base_; }
    std::size_t width() const { return digits_.size(); }
    const std::vector<unsigned> &digits() const { return digits_; }
    unsigned operator[](std::size_t i) const { return digits_[i]; }

    /// Digit multiplying base^exponent (exponent 0 is the least significant).
    unsigned digit_at_weight(std::size_t exponent) const;

    /// Renders one character per digit (0-9, then a-z) for base <= 36, and
    /// dot-separated decimal digits above that.
    std::string to_string() const;

    friend auto operator<=>(const DigitString &, const DigitString &) = default;
    friend bool operator==(const DigitString &, const DigitString &) = default;

   private:
    unsigned base_;
    std::vector<unsigned> digits_;
};

/// MSB-first expansion of value in the given base, padded to width digits.
/// Throws std::overflow_error when value >= base^width and
/// std::invalid_argument when base < 2.
DigitString from_integer(std::uint64_t value, unsigned base, std::size_t width);

/// Inverse of from_integer. Throws std::overflow_error if the value does not
/// fit in 64 bits.
std::uint64_t to_integer(const DigitString &digits);

/// Parses a digit string produced by DigitString::to_string.
DigitString parse_digit_string(const std::string &text, unsigned base);

/// base^exponent with overflow checking.
std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent);

}  // namespace quditarith

#endif

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

#ifndef QUDITARITH_RESOURCES_H
#define QUDITARITH_RESOURCES_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quditarith/circuit.h"

namespace quditarith {

/// Closed-form gate count of the n-digit, N-input QFT adder:
///   (N+1) n [(n+1)/2 + t] + t^2 + 2t + n, minus one when t+n is odd.
///
/// The count does not depend on the base; d enters only through t. Encoding
/// shifts are not counted.
std::uint64_t gate_count_formula(std::size_t digits_per_input, std::size_t num_inputs, std::size_t ancillas);

/// d^(t+n), the number of distinct values the result register can hold.
std::uint64_t capacity(std::size_t digits_per_input, std::size_t ancillas, unsigned base);

struct ResourceReport {
    unsigned base = 2;
    std::size_t digits_per_input = 1;
    std::size_t num_inputs = 1;
    std::size_t ancillas = 0;
    std::uint64_t formula_count = 0;
    GateTally tally;
    std::uint64_t capacity = 0;

    bool reconciles() const { return formula_count == tally.arithmetic_gates(); }
};

/// Builds the adder with all-zero inputs and compares its tally to the formula.
ResourceReport resource_report(unsigned base, std::size_t digits_per_input, std::size_t num_inputs);

struct SweepRow {
    unsigned base;
    std::size_t digits_per_input;
    std::size_t num_inputs;
    std::size_t ancillas;
    std::uint64_t capacity;
    std::uint64_t gate_count;
    friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

inline constexpr std::uint64_t kMaxSweepCapacity = std::uint64_t{1} << 24;

/// Every (d, n, N >= 2) with capacity <= max_capacity, sorted by (d, capacity, N, n).
std::vector<SweepRow> sweep(std::span<const unsigned> bases, std::uint64_t max_capacity);

/// Header `d,n,N,t,capacity,gate_count`, LF line endings.
std::string sweep_to_csv(std::span<const SweepRow> rows);

}  // namespace quditarith

#endif

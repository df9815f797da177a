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

#include "quditarith/resources.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "quditarith/arithmetic.h"

namespace quditarith {

std::uint64_t gate_count_formula(std::size_t digits_per_input, std::size_t num_inputs, std::size_t ancillas) {
    if (digits_per_input < 1 || num_inputs < 1) {
        throw std::invalid_argument("gate count needs n >= 1 and N >= 1");
    }
    const std::uint64_t n = digits_per_input;
    const std::uint64_t big_n = num_inputs;
    const std::uint64_t t = ancillas;
    // Twice the formula, so the (n+1)/2 term stays integral until the end.
    const std::uint64_t doubled = (big_n + 1) * n * ((n + 1) + 2 * t) + 2 * (t * t + 2 * t + n);
    if (doubled % 2 != 0) {
        throw std::logic_error("gate count formula produced a non-integer");
    }
    std::uint64_t count = doubled / 2;
    if ((t + n) % 2 == 1) {
        --count;
    }
    return count;
}

std::uint64_t capacity(std::size_t digits_per_input, std::size_t ancillas, unsigned base) {
    return checked_pow(base, digits_per_input + ancillas);
}

ResourceReport resource_report(unsigned base, std::size_t digits_per_input, std::size_t num_inputs) {
    AdderSpec spec{base, digits_per_input, std::vector<std::uint64_t>(num_inputs, 0), Mode::kAdd};
    const Circuit circuit = build_full_adder(spec);
    ResourceReport r;
    r.base = base;
    r.digits_per_input = digits_per_input;
    r.num_inputs = num_inputs;
    r.ancillas = spec.ancillas();
    r.formula_count = gate_count_formula(digits_per_input, num_inputs, r.ancillas);
    r.tally = circuit.tally();
    r.capacity = capacity(digits_per_input, r.ancillas, base);
    return r;
}

std::vector<SweepRow> sweep(std::span<const unsigned> bases, std::uint64_t max_capacity) {
    if (bases.empty()) {
        throw std::invalid_argument("sweep needs at least one base");
    }
    if (max_capacity > kMaxSweepCapacity) {
        throw std::invalid_argument("sweep max capacity above " + std::to_string(kMaxSweepCapacity));
    }
    std::vector<SweepRow> rows;
    for (unsigned d : bases) {
        if (d < 2) {
            throw std::invalid_argument("sweep base must be at least 2");
        }
        // capacity >= d^(n+t) and t >= 1 for N >= 2, so n is bounded by the loop test.
        for (std::size_t n = 1; checked_pow(d, n + 1) <= max_capacity; ++n) {
            for (std::size_t big_n = 2;; ++big_n) {
                const std::size_t t = required_ancillas(big_n, d);
                const std::uint64_t cap = capacity(n, t, d);
                if (cap > max_capacity) {
                    break;
                }
                rows.push_back({d, n, big_n, t, cap, gate_count_formula(n, big_n, t)});
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow &a, const SweepRow &b) {
        return std::tie(a.base, a.capacity, a.num_inputs, a.digits_per_input) <
               std::tie(b.base, b.capacity, b.num_inputs, b.digits_per_input);
    });
    return rows;
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
    std::ostringstream out;
    out << "d,n,N,t,capacity,gate_count\n";
    for (const auto &r : rows) {
        out << r.base << ',' << r.digits_per_input << ',' << r.num_inputs << ',' << r.ancillas << ',' << r.capacity
            << ',' << r.gate_count << '\n';
    }
    return out.str();
}

}  // namespace quditarith

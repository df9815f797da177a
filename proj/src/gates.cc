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

#include "quditarith/gates.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace quditarith {

namespace {

void check_base(unsigned base) {
    if (base < 2) {
        throw std::invalid_argument("gate base must be at least 2, got " + std::to_string(base));
    }
}

Amplitude unit_phase(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

// Full-space index with a zero digit inserted at each of the given strides
// (ascending).
std::size_t insert_zero_digits(std::size_t compressed, std::span<const std::size_t> ascending_strides, unsigned base) {
    for (std::size_t s : ascending_strides) {
        compressed = (compressed / s) * s * base + compressed % s;
    }
    return compressed;
}

}  // namespace

GateMatrix::GateMatrix(unsigned base, unsigned arity, std::vector<Amplitude> entries)
    : base_(base), arity_(arity), dim_(arity == 1 ? base : std::size_t{base} * base), entries_(std::move(entries)) {
    check_base(base);
    if (arity != 1 && arity != 2) {
        throw std::invalid_argument("gate arity must be 1 or 2");
    }
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("gate entry count does not match base^arity squared");
    }
}

bool GateMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (r != c && entries_[r * dim_ + c] != Amplitude{}) {
                return false;
            }
        }
    }
    return true;
}

double GateMatrix::unitarity_error() const {
    double worst = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            Amplitude acc{};
            for (std::size_t k = 0; k < dim_; ++k) {
                acc += std::conj(entries_[k * dim_ + i]) * entries_[k * dim_ + j];
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

GateMatrix GateMatrix::adjoint() const {
    std::vector<Amplitude> out(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
        }
    }
    return GateMatrix(base_, arity_, std::move(out));
}

GateMatrix hadamard_matrix(unsigned base) {
    check_base(base);
    const double scale = 1.0 / std::sqrt(static_cast<double>(base));
    std::vector<Amplitude> entries(std::size_t{base} * base);
    for (unsigned m = 0; m < base; ++m) {
        for (unsigned j = 0; j < base; ++j) {
            // Reduce j*m mod d first so the angle stays in [0, 2 pi).
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * m) % base) / base;
            entries[m * base + j] = scale * unit_phase(angle);
        }
    }
    return GateMatrix(base, 1, std::move(entries));
}

GateMatrix cphase_matrix(unsigned base, double theta) {
    check_base(base);
    const std::size_t dim = std::size_t{base} * base;
    std::vector<Amplitude> entries(dim * dim);
    for (unsigned j = 0; j < base; ++j) {
        for (unsigned m = 0; m < base; ++m) {
            const std::size_t l = j * base + m;
            entries[l * dim + l] = unit_phase(theta * static_cast<double>(j * m));
        }
    }
    return GateMatrix(base, 2, std::move(entries));
}

GateMatrix shift_matrix(unsigned base, unsigned k) {
    check_base(base);
    if (k >= base) {
        throw std::invalid_argument("shift amount " + std::to_string(k) + " out of range for base " + std::to_string(base));
    }
    std::vector<Amplitude> entries(std::size_t{base} * base);
    for (unsigned m = 0; m < base; ++m) {
        entries[((m + k) % base) * base + m] = 1.0;
    }
    return GateMatrix(base, 1, std::move(entries));
}

void apply_gate(StateVector &state, const GateMatrix &gate, std::span<const std::size_t> targets) {
    if (gate.base() != state.base()) {
        throw std::invalid_argument("gate base does not match state base");
    }
    if (targets.size() != gate.arity()) {
        throw std::invalid_argument("target count does not match gate arity");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] >= state.num_qudits()) {
            throw std::out_of_range("target qudit " + std::to_string(targets[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw std::invalid_argument("gate targets must be distinct");
            }
        }
    }

    const unsigned d = state.base();
    const std::size_t dim = gate.dimension();
    std::vector<std::size_t> strides;
    for (std::size_t t : targets) {
        strides.push_back(state.stride(t));
    }
    std::vector<std::size_t> offsets(dim);
    for (std::size_t local = 0; local < dim; ++local) {
        std::size_t rest = local;
        std::size_t off = 0;
        for (std::size_t r = strides.size(); r-- > 0;) {
            off += (rest % d) * strides[r];
            rest /= d;
        }
        offsets[local] = off;
    }
    std::vector<std::size_t> ascending = strides;
    std::sort(ascending.begin(), ascending.end());

    auto amps = state.amplitudes();
    const std::size_t groups = state.dimension() / dim;

    if (gate.is_diagonal()) {
        std::vector<Amplitude> diag(dim);
        for (std::size_t l = 0; l < dim; ++l) {
            diag[l] = gate(l, l);
        }
        for (std::size_t g = 0; g < groups; ++g) {
            const std::size_t base = insert_zero_digits(g, ascending, d);
            for (std::size_t l = 0; l < dim; ++l) {
                amps[base + offsets[l]] *= diag[l];
            }
        }
        return;
    }

    std::vector<Amplitude> in(dim);
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t base = insert_zero_digits(g, ascending, d);
        for (std::size_t l = 0; l < dim; ++l) {
            in[l] = amps[base + offsets[l]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            Amplitude acc{};
            for (std::size_t c = 0; c < dim; ++c) {
                acc += gate(r, c) * in[c];
            }
            amps[base + offsets[r]] = acc;
        }
    }
}

void swap_gate_apply(StateVector &state, std::size_t i, std::size_t j) {
    if (i == j) {
        throw std::invalid_argument("swap requires two distinct qudits");
    }
    const std::size_t si = state.stride(i);
    const std::size_t sj = state.stride(j);
    const unsigned d = state.base();
    auto amps = state.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        const std::size_t di = (idx / si) % d;
        const std::size_t dj = (idx / sj) % d;
        if (di < dj) {
            const std::size_t partner = idx - di * si - dj * sj + dj * si + di * sj;
            std::swap(amps[idx], amps[partner]);
        }
    }
}

}  // namespace quditarith

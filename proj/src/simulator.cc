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

#include "quditarith/simulator.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "quditarith/gates.h"

namespace quditarith {

namespace {

// Uniform double in [0, 1) from the top 53 bits; std distributions are
// implementation-defined so they would break cross-platform seeding.
double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace

void NoiseConfig::validate() const {
    if (!(readout_flip_probability >= 0.0 && readout_flip_probability <= 1.0)) {
        throw std::invalid_argument("readout flip probability must lie in [0, 1]");
    }
}

Histogram::Histogram(unsigned base, std::size_t width) : base_(base), width_(width) {
}

std::uint64_t Histogram::count(const DigitString &key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
}

void Histogram::record(const DigitString &outcome, std::uint64_t n) {
    if (outcome.base() != base_ || outcome.width() != width_) {
        throw std::invalid_argument("outcome does not match histogram base/width");
    }
    counts_[outcome] += n;
    shots_ += n;
}

DigitString Histogram::top_outcome() const {
    if (counts_.empty()) {
        throw std::logic_error("empty histogram has no top outcome");
    }
    auto best = counts_.begin();
    for (auto it = counts_.begin(); it != counts_.end(); ++it) {
        if (it->second > best->second) {
            best = it;
        }
    }
    return best->first;
}

std::string histogram_to_json(const Histogram &histogram, int indent) {
    nlohmann::ordered_json j;
    j["base"] = histogram.base();
    j["shots"] = histogram.shots();
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto &[key, n] : histogram.counts()) {
        counts[key.to_string()] = n;
    }
    j["counts"] = std::move(counts);
    return j.dump(indent) + "\n";
}

void execute(const Circuit &circuit, StateVector &state) {
    if (state.base() != circuit.base() || state.num_qudits() != circuit.layout().total_qudits()) {
        throw std::invalid_argument("state dimensions do not match the circuit layout");
    }
    const unsigned d = circuit.base();
    const GateMatrix h = hadamard_matrix(d);
    const GateMatrix h_dag = h.adjoint();
    const double initial_norm = state.squared_norm();

    for (const auto &op : circuit.ops()) {
        switch (op.kind) {
            case GateKind::kHadamard:
                apply_gate(state, op.adjoint ? h_dag : h, op.qudits);
                break;
            case GateKind::kCPhase:
                apply_gate(state, cphase_matrix(d, *op.theta), op.qudits);
                break;
            case GateKind::kSwap:
                swap_gate_apply(state, op.qudits[0], op.qudits[1]);
                break;
            case GateKind::kShift:
                apply_gate(state, shift_matrix(d, *op.k), op.qudits);
                break;
        }
    }
    if (std::abs(state.squared_norm() - initial_norm) > kNormTolerance) {
        throw std::runtime_error("state norm drifted during execution");
    }
}

StateVector execute(const Circuit &circuit) {
    StateVector state(circuit.base(), circuit.layout().total_qudits());
    execute(circuit, state);
    return state;
}

std::vector<double> marginal_probabilities(const StateVector &state, QuditRange qudits) {
    if (qudits.count == 0) {
        throw std::invalid_argument("empty register selection");
    }
    if (qudits.end() > state.num_qudits()) {
        throw std::out_of_range("measured qudits exceed the state");
    }
    const std::size_t outcomes = checked_pow(state.base(), qudits.count);
    const std::size_t low_stride = checked_pow(state.base(), state.num_qudits() - qudits.end());
    std::vector<double> probs(outcomes, 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        probs[(idx / low_stride) % outcomes] += std::norm(amps[idx]);
    }
    return probs;
}

Histogram measure(const StateVector &state, QuditRange qudits, std::uint64_t shots, const NoiseConfig &noise) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    noise.validate();
    const unsigned d = state.base();
    const std::vector<double> probs = marginal_probabilities(state, qudits);
    std::vector<double> cdf(probs.size());
    double running = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        running += probs[i];
        cdf[i] = running;
    }

    std::mt19937_64 rng(noise.seed);
    const double p = noise.readout_flip_probability;
    // Sample into a flat counter first; DigitString keys are built once per distinct outcome.
    std::map<std::size_t, std::uint64_t> tally;
    std::vector<unsigned> digits(qudits.count);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double r = uniform01(rng) * cdf.back();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
        std::size_t outcome = static_cast<std::size_t>(std::min<std::ptrdiff_t>(
            it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
        if (p > 0.0) {
            std::size_t rest = outcome;
            for (std::size_t k = qudits.count; k-- > 0;) {
                digits[k] = static_cast<unsigned>(rest % d);
                rest /= d;
            }
            outcome = 0;
            for (std::size_t k = 0; k < qudits.count; ++k) {
                if (uniform01(rng) < p) {
                    digits[k] = static_cast<unsigned>((digits[k] + 1 + uniform_below(rng, d - 1)) % d);
                }
                outcome = outcome * d + digits[k];
            }
        }
        ++tally[outcome];
    }

    Histogram hist(d, qudits.count);
    for (const auto &[outcome, n] : tally) {
        hist.record(from_integer(outcome, d, qudits.count), n);
    }
    return hist;
}

std::vector<Amplitude> dense_unitary(const Circuit &circuit) {
    const std::size_t q = circuit.layout().total_qudits();
    const std::size_t dim = checked_pow(circuit.base(), q);
    if (dim > 4096) {
        throw std::invalid_argument("dense unitary limited to 4096 basis states");
    }
    std::vector<Amplitude> u(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Amplitude> amps(dim);
        amps[col] = 1.0;
        StateVector state(circuit.base(), q, std::move(amps));
        execute(circuit, state);
        for (std::size_t row = 0; row < dim; ++row) {
            u[row * dim + col] = state[row];
        }
    }
    return u;
}

}  // namespace quditarith

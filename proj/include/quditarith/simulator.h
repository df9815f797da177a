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

#ifndef QUDITARITH_SIMULATOR_H
#define QUDITARITH_SIMULATOR_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quditarith/circuit.h"

namespace quditarith {

/// Symmetric readout error: each measured digit is replaced, with probability
/// readout_flip_probability, by a uniformly chosen different level.
struct NoiseConfig {
    double readout_flip_probability = 0.0;
    std::uint64_t seed = 0x5eed;

    void validate() const;
};

/// Shot counts keyed by the measured register's digits (MSB first).
class Histogram {
   public:
    Histogram(unsigned base, std::size_t width);

    unsigned base() const { return base_; }
    std::size_t width() const { return width_; }
    std::uint64_t shots() const { return shots_; }
    const std::map<DigitString, std::uint64_t> &counts() const { return counts_; }
    std::uint64_t count(const DigitString &key) const;

    void record(const DigitString &outcome, std::uint64_t n = 1);

    /// Most frequent outcome; ties go to the smallest key.
    DigitString top_outcome() const;

   private:
    unsigned base_;
    std::size_t width_;
    std::uint64_t shots_ = 0;
    std::map<DigitString, std::uint64_t> counts_;
};

/// {"base":d,"shots":s,"counts":{"<digits>":n,...}} with keys in ascending order.
std::string histogram_to_json(const Histogram &histogram, int indent = 2);

/// Applies circuit ops in order. Throws if the state does not match the layout.
void execute(const Circuit &circuit, StateVector &state);
StateVector execute(const Circuit &circuit);

/// Probability of each outcome of the selected qudits, indexed by the
/// outcome's MSB-first value.
std::vector<double> marginal_probabilities(const StateVector &state, QuditRange qudits);

/// Samples shots outcomes of the selected qudits from the exact marginal.
/// The state is not collapsed. Output is fully determined by (state, qudits,
/// shots, noise).
Histogram measure(const StateVector &state, QuditRange qudits, std::uint64_t shots, const NoiseConfig &noise = {});

/// Column-by-column unitary of a circuit, row-major; dimension base^q.
std::vector<Amplitude> dense_unitary(const Circuit &circuit);

}  // namespace quditarith

#endif

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

#ifndef QUDITARITH_GATES_H
#define QUDITARITH_GATES_H

#include <span>
#include <vector>

#include "quditarith/state.h"

namespace quditarith {

/// Dense unitary on one or two qudits, row-major, dimension base^arity.
///
/// For arity 2 the first target qudit is the more significant local digit:
/// local index = digit(targets[0]) * d + digit(targets[1]).
class GateMatrix {
   public:
    GateMatrix(unsigned base, unsigned arity, std::vector<Amplitude> entries);

    unsigned base() const { return base_; }
    unsigned arity() const { return arity_; }
    std::size_t dimension() const { return dim_; }
    Amplitude operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    std::span<const Amplitude> entries() const { return entries_; }

    bool is_diagonal() const;
    /// max |(U^dagger U - I)_{ij}|
    double unitarity_error() const;
    GateMatrix adjoint() const;

   private:
    unsigned base_;
    unsigned arity_;
    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

/// Generalized Hadamard: entry (m, j) = exp(2 pi i j m / d) / sqrt(d).
GateMatrix hadamard_matrix(unsigned base);

/// Two-qudit diagonal phase: entry for control level j, target level m is exp(i theta j m).
GateMatrix cphase_matrix(unsigned base, double theta);

/// Permutation |m> -> |(m + k) mod d>.
GateMatrix shift_matrix(unsigned base, unsigned k);

/// Applies gate to the target qudits in place by stride iteration over the
/// amplitude array. Diagonal gates take a phase-only path.
void apply_gate(StateVector &state, const GateMatrix &gate, std::span<const std::size_t> targets);

/// Exchanges the digits of qudits i and j in every basis index.
void swap_gate_apply(StateVector &state, std::size_t i, std::size_t j);

}  // namespace quditarith

#endif

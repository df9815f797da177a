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

#ifndef QUDITARITH_CIRCUIT_H
#define QUDITARITH_CIRCUIT_H

#include <optional>
#include <string>
#include <vector>

#include "quditarith/state.h"

namespace quditarith {

enum class GateKind { kHadamard, kCPhase, kSwap, kShift };

const char *gate_kind_name(GateKind kind);

struct GateOp {
    GateKind kind;
    std::vector<std::size_t> qudits;
    std::optional<double> theta;  // radians, CPHASE only
    std::optional<unsigned> k;    // SHIFT only
    bool adjoint = false;         // HADAMARD only: apply H_d^dagger

    static GateOp hadamard(std::size_t q, bool adjoint = false);
    /// Phase exp(i theta j m) for control level j and target level m.
    static GateOp cphase(std::size_t control, std::size_t target, double theta);
    static GateOp swap(std::size_t a, std::size_t b);
    static GateOp shift(std::size_t q, unsigned k);

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

struct GateTally {
    std::size_t hadamard = 0;
    std::size_t cphase = 0;
    std::size_t swap = 0;
    std::size_t shift = 0;

    /// Gates counted by the closed-form resource formula (encoding shifts excluded).
    std::size_t arithmetic_gates() const { return hadamard + cphase + swap; }
    std::size_t total() const { return arithmetic_gates() + shift; }

    GateTally &operator+=(const GateTally &other);
    friend GateTally operator+(GateTally a, const GateTally &b) { return a += b; }
    friend bool operator==(const GateTally &, const GateTally &) = default;
};

/// Labelled half-open range of op indices, e.g. one ADDER component.
struct Segment {
    std::string label;
    std::size_t begin = 0;
    std::size_t end = 0;
    friend bool operator==(const Segment &, const Segment &) = default;
};

/// Flat list of gate ops over a register layout. Every appended op is
/// validated against the layout and the tally is kept in step with the ops.
class Circuit {
   public:
    explicit Circuit(RegisterLayout layout);

    unsigned base() const { return layout_.base(); }
    const RegisterLayout &layout() const { return layout_; }
    const std::vector<GateOp> &ops() const { return ops_; }
    const GateTally &tally() const { return tally_; }
    const std::vector<Segment> &segments() const { return segments_; }
    bool empty() const { return ops_.empty(); }

    void append(GateOp op);
    /// Appends all ops of other (same layout) and records them as one segment
    /// when label is non-empty. Segments of other are carried over.
    void append(const Circuit &other, const std::string &label = {});

   private:
    void validate(const GateOp &op) const;

    RegisterLayout layout_;
    std::vector<GateOp> ops_;
    GateTally tally_;
    std::vector<Segment> segments_;
};

GateTally recount(const std::vector<GateOp> &ops);

/// Quantum Fourier transform on a contiguous qudit range, MSB first: for each
/// position an H_d followed by CP_d(2 pi / d^s) controlled by the qudit s-1
/// places deeper, then floor(q'/2) SWAPs reversing the range. The resulting
/// unitary is the d^q'-point DFT with positive exponent.
Circuit build_qft(const RegisterLayout &layout, QuditRange targets);

/// Reverse of build_qft with conjugated gates (negated angles, H_d^dagger).
Circuit build_iqft(const RegisterLayout &layout, QuditRange targets);

/// Concatenates fragments sharing one layout. Throws on empty input or
/// mismatched layouts.
Circuit concat(const std::vector<Circuit> &circuits);

/// {base, registers:[{name,size}], ops:[{kind, qudits, theta?, k?, adjoint?}]}
std::string circuit_to_json(const Circuit &circuit, int indent = 2);

/// OpenQASM-2-style text. Only defined for base 2; throws std::invalid_argument otherwise.
std::string circuit_to_qasm(const Circuit &circuit);

/// One line per op with segment headers, for humans.
std::string circuit_to_text(const Circuit &circuit);

}  // namespace quditarith

#endif

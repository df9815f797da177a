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

#include "quditarith/circuit.h"

#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace quditarith {

namespace {

std::string format_angle(double theta) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", theta);
    return buf;
}

void check_range(const RegisterLayout &layout, QuditRange targets) {
    if (targets.count == 0) {
        throw std::invalid_argument("QFT target range is empty");
    }
    if (targets.end() > layout.total_qudits()) {
        throw std::out_of_range("QFT target range exceeds layout");
    }
}

}  // namespace

const char *gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::kHadamard:
            return "HADAMARD";
        case GateKind::kCPhase:
            return "CPHASE";
        case GateKind::kSwap:
            return "SWAP";
        case GateKind::kShift:
            return "SHIFT";
    }
    return "?";
}

GateOp GateOp::hadamard(std::size_t q, bool adjoint) {
    return GateOp{GateKind::kHadamard, {q}, std::nullopt, std::nullopt, adjoint};
}

GateOp GateOp::cphase(std::size_t control, std::size_t target, double theta) {
    return GateOp{GateKind::kCPhase, {control, target}, theta, std::nullopt, false};
}

GateOp GateOp::swap(std::size_t a, std::size_t b) {
    return GateOp{GateKind::kSwap, {a, b}, std::nullopt, std::nullopt, false};
}

GateOp GateOp::shift(std::size_t q, unsigned k) {
    return GateOp{GateKind::kShift, {q}, std::nullopt, k, false};
}

GateTally &GateTally::operator+=(const GateTally &other) {
    hadamard += other.hadamard;
    cphase += other.cphase;
    swap += other.swap;
    shift += other.shift;
    return *this;
}

GateTally recount(const std::vector<GateOp> &ops) {
    GateTally t;
    for (const auto &op : ops) {
        switch (op.kind) {
            case GateKind::kHadamard:
                ++t.hadamard;
                break;
            case GateKind::kCPhase:
                ++t.cphase;
                break;
            case GateKind::kSwap:
                ++t.swap;
                break;
            case GateKind::kShift:
                ++t.shift;
                break;
        }
    }
    return t;
}

Circuit::Circuit(RegisterLayout layout) : layout_(std::move(layout)) {
}

void Circuit::validate(const GateOp &op) const {
    const std::size_t expected_arity = (op.kind == GateKind::kCPhase || op.kind == GateKind::kSwap) ? 2 : 1;
    if (op.qudits.size() != expected_arity) {
        throw std::invalid_argument(std::string(gate_kind_name(op.kind)) + " expects " +
                                    std::to_string(expected_arity) + " qudit(s)");
    }
    for (std::size_t q : op.qudits) {
        if (q >= layout_.total_qudits()) {
            throw std::out_of_range("op references qudit " + std::to_string(q) + " outside the layout");
        }
    }
    if (expected_arity == 2 && op.qudits[0] == op.qudits[1]) {
        throw std::invalid_argument("two-qudit op on a single qudit");
    }
    if (op.theta.has_value() != (op.kind == GateKind::kCPhase)) {
        throw std::invalid_argument("theta must be present exactly for CPHASE");
    }
    if (op.k.has_value() != (op.kind == GateKind::kShift)) {
        throw std::invalid_argument("k must be present exactly for SHIFT");
    }
    if (op.k && *op.k >= layout_.base()) {
        throw std::invalid_argument("shift amount out of range for base");
    }
    if (op.adjoint && op.kind != GateKind::kHadamard) {
        throw std::invalid_argument("adjoint flag is only meaningful on HADAMARD");
    }
}

void Circuit::append(GateOp op) {
    validate(op);
    tally_ += recount({op});
    ops_.push_back(std::move(op));
}

void Circuit::append(const Circuit &other, const std::string &label) {
    if (!(other.layout_ == layout_)) {
        throw std::invalid_argument("cannot append circuits with different layouts");
    }
    const std::size_t offset = ops_.size();
    for (const auto &s : other.segments_) {
        segments_.push_back({s.label, s.begin + offset, s.end + offset});
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    tally_ += other.tally_;
    if (!label.empty()) {
        segments_.push_back({label, offset, ops_.size()});
    }
}

Circuit build_qft(const RegisterLayout &layout, QuditRange targets) {
    check_range(layout, targets);
    const unsigned d = layout.base();
    Circuit c(layout);
    const std::size_t width = targets.count;
    for (std::size_t pos = 0; pos < width; ++pos) {
        const std::size_t target = targets.first + pos;
        c.append(GateOp::hadamard(target));
        double denom = d;
        for (std::size_t s = 2; pos + s <= width; ++s) {
            denom *= d;
            c.append(GateOp::cphase(target + s - 1, target, 2.0 * std::numbers::pi / denom));
        }
    }
    for (std::size_t i = 0; i < width / 2; ++i) {
        c.append(GateOp::swap(targets.first + i, targets.end() - 1 - i));
    }
    return c;
}

Circuit build_iqft(const RegisterLayout &layout, QuditRange targets) {
    Circuit forward = build_qft(layout, targets);
    Circuit c(layout);
    const auto &ops = forward.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        GateOp op = *it;
        if (op.kind == GateKind::kCPhase) {
            op.theta = -*op.theta;
        } else if (op.kind == GateKind::kHadamard) {
            op.adjoint = !op.adjoint;
        }
        c.append(std::move(op));
    }
    return c;
}

Circuit concat(const std::vector<Circuit> &circuits) {
    if (circuits.empty()) {
        throw std::invalid_argument("concat needs at least one circuit");
    }
    Circuit out(circuits.front().layout());
    for (const auto &c : circuits) {
        out.append(c);
    }
    return out;
}

std::string circuit_to_json(const Circuit &circuit, int indent) {
    nlohmann::ordered_json j;
    j["base"] = circuit.base();
    auto regs = nlohmann::ordered_json::array();
    for (const auto &r : circuit.layout().registers()) {
        regs.push_back({{"name", r.name}, {"size", r.size}});
    }
    j["registers"] = std::move(regs);
    auto ops = nlohmann::ordered_json::array();
    for (const auto &op : circuit.ops()) {
        nlohmann::ordered_json o;
        o["kind"] = gate_kind_name(op.kind);
        o["qudits"] = op.qudits;
        if (op.theta) {
            o["theta"] = *op.theta;
        }
        if (op.k) {
            o["k"] = *op.k;
        }
        if (op.adjoint) {
            o["adjoint"] = true;
        }
        ops.push_back(std::move(o));
    }
    j["ops"] = std::move(ops);
    return j.dump(indent) + "\n";
}

std::string circuit_to_qasm(const Circuit &circuit) {
    if (circuit.base() != 2) {
        throw std::invalid_argument("QASM export is only defined for base 2");
    }
    const auto &layout = circuit.layout();
    std::vector<std::string> names;
    for (std::size_t r = 0; r < layout.registers().size(); ++r) {
        const auto range = layout.range(r);
        for (std::size_t i = 0; i < range.count; ++i) {
            names.push_back(layout.registers()[r].name + "[" + std::to_string(i) + "]");
        }
    }
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    for (const auto &r : layout.registers()) {
        out << "qreg " << r.name << "[" << r.size << "];\n";
    }
    for (const auto &op : circuit.ops()) {
        switch (op.kind) {
            case GateKind::kHadamard:
                out << "h " << names[op.qudits[0]] << ";\n";
                break;
            case GateKind::kCPhase:
                out << "cp(" << format_angle(*op.theta) << ") " << names[op.qudits[0]] << "," << names[op.qudits[1]]
                    << ";\n";
                break;
            case GateKind::kSwap:
                out << "swap " << names[op.qudits[0]] << "," << names[op.qudits[1]] << ";\n";
                break;
            case GateKind::kShift:
                out << "x " << names[op.qudits[0]] << ";\n";
                break;
        }
    }
    return out.str();
}

std::string circuit_to_text(const Circuit &circuit) {
    std::ostringstream out;
    const auto &segments = circuit.segments();
    out << "base " << circuit.base() << ", " << circuit.layout().total_qudits() << " qudits\n";
    for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
        for (const auto &s : segments) {
            if (s.begin == i && s.end > s.begin) {
                out << "# " << s.label << "\n";
            }
        }
        const auto &op = circuit.ops()[i];
        out << "  " << gate_kind_name(op.kind);
        if (op.adjoint) {
            out << "_DAG";
        }
        for (std::size_t q : op.qudits) {
            out << " " << q;
        }
        if (op.theta) {
            out << " theta=" << format_angle(*op.theta);
        }
        if (op.k) {
            out << " k=" << *op.k;
        }
        out << "\n";
    }
    const auto &t = circuit.tally();
    out << "tally H=" << t.hadamard << " CP=" << t.cphase << " SWAP=" << t.swap << " SHIFT=" << t.shift << "\n";
    return out.str();
}

}  // namespace quditarith

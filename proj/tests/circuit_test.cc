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

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "oracles.h"
#include "quditarith/circuit.h"
#include "quditarith/simulator.h"

using namespace quditarith;

namespace {

RegisterLayout single(unsigned d, std::size_t q) {
    return RegisterLayout(d, {{"r", q}});
}

std::vector<Amplitude> conj_transpose(const std::vector<Amplitude> &m, std::size_t dim) {
    std::vector<Amplitude> out(m.size());
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            out[c * dim + r] = std::conj(m[r * dim + c]);
        }
    }
    return out;
}

}  // namespace

TEST(build_qft, single_qudit_is_one_hadamard) {
    const Circuit c = build_qft(single(3, 1), {0, 1});
    ASSERT_EQ(c.ops().size(), 1u);
    EXPECT_EQ(c.ops()[0], GateOp::hadamard(0));
}

TEST(build_qft, tally_closed_form) {
    const Circuit c = build_qft(single(2, 3), {0, 3});
    EXPECT_EQ(c.tally(), (GateTally{3, 3, 1, 0}));
    for (std::size_t q = 1; q <= 9; ++q) {
        const Circuit qft = build_qft(single(5, q), {0, q});
        EXPECT_EQ(qft.tally(), (GateTally{q, q * (q - 1) / 2, q / 2, 0}));
        EXPECT_EQ(qft.tally(), recount(qft.ops()));
    }
}

TEST(build_qft, qubit_pair_equals_dft) {
    const auto u = dense_unitary(build_qft(single(2, 2), {0, 2}));
    EXPECT_LE(oracle::max_abs_diff(u, oracle::dft(4)), 1e-9);
}

TEST(build_qft, equals_dft_for_small_sizes) {
    for (unsigned d = 2; d <= 5; ++d) {
        for (std::size_t q = 1; oracle::ipow(d, q) <= 256; ++q) {
            const auto u = dense_unitary(build_qft(single(d, q), {0, q}));
            EXPECT_LE(oracle::max_abs_diff(u, oracle::dft(oracle::ipow(d, q))), 1e-9) << "d=" << d << " q=" << q;
        }
    }
}

TEST(build_qft, sub_range_acts_only_on_targets) {
    // QFT on the middle two qubits of four equals I x DFT4 x I.
    RegisterLayout layout = single(2, 4);
    const auto u = dense_unitary(build_qft(layout, {1, 2}));
    const auto f = oracle::dft(4);
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t c = 0; c < 16; ++c) {
            const bool outer_equal = (r >> 3) == (c >> 3) && (r & 1) == (c & 1);
            const Amplitude expected = outer_equal ? f[((r >> 1) & 3) * 4 + ((c >> 1) & 3)] : 0.0;
            ASSERT_LE(std::abs(u[r * 16 + c] - expected), 1e-9);
        }
    }
}

TEST(build_iqft, is_conjugate_transpose_of_qft) {
    const Circuit one = build_iqft(single(2, 1), {0, 1});
    ASSERT_EQ(one.ops().size(), 1u);
    EXPECT_EQ(one.ops()[0].kind, GateKind::kHadamard);

    for (unsigned d = 2; d <= 5; ++d) {
        for (std::size_t q = 1; oracle::ipow(d, q) <= 64; ++q) {
            const std::size_t dim = oracle::ipow(d, q);
            const auto u = dense_unitary(build_qft(single(d, q), {0, q}));
            const auto v = dense_unitary(build_iqft(single(d, q), {0, q}));
            EXPECT_LE(oracle::max_abs_diff(v, conj_transpose(u, dim)), 1e-9) << "d=" << d << " q=" << q;
        }
    }
}

TEST(build_iqft, reverses_ops_with_conjugated_gates) {
    const Circuit f = build_qft(single(4, 3), {0, 3});
    const Circuit b = build_iqft(single(4, 3), {0, 3});
    ASSERT_EQ(f.ops().size(), b.ops().size());
    const std::size_t n = f.ops().size();
    for (std::size_t i = 0; i < n; ++i) {
        const GateOp &fo = f.ops()[i];
        const GateOp &bo = b.ops()[n - 1 - i];
        EXPECT_EQ(fo.kind, bo.kind);
        EXPECT_EQ(fo.qudits, bo.qudits);
        if (fo.theta) {
            EXPECT_EQ(*bo.theta, -*fo.theta);
        }
        if (fo.kind == GateKind::kHadamard) {
            EXPECT_TRUE(bo.adjoint);
        }
    }
    EXPECT_EQ(f.tally(), b.tally());
}

TEST(build_iqft, undoes_qft_on_random_basis_states) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned d = 2 + static_cast<unsigned>(rng() % 4);
        const std::size_t q = 1 + rng() % 4;
        const RegisterLayout layout = single(d, q);
        const Circuit round = concat({build_qft(layout, {0, q}), build_iqft(layout, {0, q})});
        const std::size_t dim = oracle::ipow(d, q);
        const std::size_t index = rng() % dim;
        std::vector<Amplitude> amps(dim);
        amps[index] = 1.0;
        StateVector s(d, q, amps);
        execute(round, s);
        EXPECT_GE(std::norm(s[index]), 1 - 1e-9);
    }
}

TEST(build_qft, empty_range_rejected) {
    EXPECT_THROW(build_qft(single(2, 2), {0, 0}), std::invalid_argument);
    EXPECT_THROW(build_qft(single(2, 2), {1, 2}), std::out_of_range);
    EXPECT_THROW(build_iqft(single(2, 2), {0, 0}), std::invalid_argument);
}

TEST(concat, tallies_add_and_layout_must_match) {
    const RegisterLayout layout = single(3, 3);
    const Circuit a = build_qft(layout, {0, 3});
    const Circuit b = build_iqft(layout, {0, 2});
    const Circuit empty(layout);
    EXPECT_EQ(concat({a, empty}).ops(), a.ops());
    const Circuit ab = concat({a, b});
    EXPECT_EQ(ab.tally(), a.tally() + b.tally());
    EXPECT_EQ(ab.tally(), recount(ab.ops()));
    EXPECT_THROW(concat({a, Circuit(single(3, 2))}), std::invalid_argument);
    EXPECT_THROW(concat({}), std::invalid_argument);
}

TEST(circuit, op_validation) {
    Circuit c(single(3, 2));
    EXPECT_THROW(c.append(GateOp::hadamard(2)), std::out_of_range);
    EXPECT_THROW(c.append(GateOp::swap(1, 1)), std::invalid_argument);
    EXPECT_THROW(c.append(GateOp::shift(0, 3)), std::invalid_argument);
    GateOp bad = GateOp::hadamard(0);
    bad.theta = 1.0;
    EXPECT_THROW(c.append(bad), std::invalid_argument);
    GateOp no_k = GateOp::shift(0, 1);
    no_k.k.reset();
    EXPECT_THROW(c.append(no_k), std::invalid_argument);
    EXPECT_TRUE(c.empty());
}

TEST(export, json_schema) {
    RegisterLayout layout(2, {{"anc", 1}, {"in0", 1}});
    Circuit c(layout);
    c.append(GateOp::shift(1, 1));
    c.append(build_qft(layout, {0, 2}));
    c.append(build_iqft(layout, {0, 2}));
    const auto j = nlohmann::json::parse(circuit_to_json(c));
    EXPECT_EQ(j["base"], 2);
    EXPECT_EQ(j["registers"][0]["name"], "anc");
    EXPECT_EQ(j["registers"][1]["size"], 1);
    ASSERT_EQ(j["ops"].size(), c.ops().size());
    EXPECT_EQ(j["ops"][0]["kind"], "SHIFT");
    EXPECT_EQ(j["ops"][0]["k"], 1);
    EXPECT_FALSE(j["ops"][0].contains("theta"));
    EXPECT_EQ(j["ops"][2]["kind"], "CPHASE");
    EXPECT_EQ(j["ops"][2]["qudits"], (std::vector<int>{1, 0}));
    EXPECT_DOUBLE_EQ(j["ops"][2]["theta"].get<double>(), c.ops()[2].theta.value());
    EXPECT_EQ(j["ops"].back()["adjoint"], true);
}

TEST(export, qasm_qubits_only) {
    RegisterLayout layout(2, {{"anc", 1}, {"in0", 1}});
    Circuit c(layout);
    c.append(GateOp::shift(1, 1));
    c.append(build_qft(layout, {0, 2}));
    const std::string qasm = circuit_to_qasm(c);
    EXPECT_EQ(qasm,
              "OPENQASM 2.0;\n"
              "include \"qelib1.inc\";\n"
              "qreg anc[1];\n"
              "qreg in0[1];\n"
              "x in0[0];\n"
              "h anc[0];\n"
              "cp(1.5707963267948966) in0[0],anc[0];\n"
              "h in0[0];\n"
              "swap anc[0],in0[0];\n");
    EXPECT_THROW(circuit_to_qasm(build_qft(single(4, 2), {0, 2})), std::invalid_argument);
}

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

#include <numbers>
#include <random>

#include "oracles.h"
#include "quditarith/gates.h"

using namespace quditarith;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_near(Amplitude actual, Amplitude expected, double tol = 1e-12) {
    EXPECT_NEAR(actual.real(), expected.real(), tol);
    EXPECT_NEAR(actual.imag(), expected.imag(), tol);
}

std::vector<Amplitude> copy(const StateVector &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

}  // namespace

TEST(gates, hadamard_qubit) {
    const GateMatrix h = hadamard_matrix(2);
    const double r = 1.0 / std::sqrt(2.0);
    expect_near(h(0, 0), r);
    expect_near(h(0, 1), r);
    expect_near(h(1, 0), r);
    expect_near(h(1, 1), -r);
}

TEST(gates, hadamard_ququart) {
    const GateMatrix h = hadamard_matrix(4);
    for (std::size_t i = 0; i < 4; ++i) {
        expect_near(h(0, i), 0.5);
        expect_near(h(i, 0), 0.5);
    }
    expect_near(h(1, 1), Amplitude(0, 0.5));
}

TEST(gates, hadamard_is_positive_dft_and_unitary) {
    for (unsigned d = 2; d <= 9; ++d) {
        const GateMatrix h = hadamard_matrix(d);
        EXPECT_LE(h.unitarity_error(), 1e-12) << "d=" << d;
        const auto f = oracle::dft(d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                expect_near(h(r, c), f[r * d + c]);
            }
        }
        // adjoint is the inverse
        const GateMatrix hd = h.adjoint();
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                Amplitude acc{};
                for (std::size_t k = 0; k < d; ++k) {
                    acc += hd(r, k) * h(k, c);
                }
                expect_near(acc, r == c ? 1.0 : 0.0);
            }
        }
    }
    EXPECT_THROW(hadamard_matrix(1), std::invalid_argument);
}

TEST(gates, cphase_examples) {
    const GateMatrix cz = cphase_matrix(2, kPi);
    EXPECT_TRUE(cz.is_diagonal());
    expect_near(cz(0, 0), 1);
    expect_near(cz(1, 1), 1);
    expect_near(cz(2, 2), 1);
    expect_near(cz(3, 3), -1);

    const GateMatrix id = cphase_matrix(5, 0.0);
    for (std::size_t r = 0; r < id.dimension(); ++r) {
        for (std::size_t c = 0; c < id.dimension(); ++c) {
            EXPECT_EQ(id(r, c), Amplitude(r == c ? 1.0 : 0.0));
        }
    }

    // control j=3, target m=3: exp(i * 9 pi / 2) = i
    const GateMatrix c4 = cphase_matrix(4, 2 * kPi / 4);
    expect_near(c4(15, 15), Amplitude(0, 1));
    EXPECT_LE(c4.unitarity_error(), 1e-12);
}

TEST(gates, shift_examples) {
    const GateMatrix x = shift_matrix(2, 1);
    EXPECT_EQ(x(0, 1), Amplitude(1));
    EXPECT_EQ(x(1, 0), Amplitude(1));
    EXPECT_EQ(x(0, 0), Amplitude(0));

    const GateMatrix id = shift_matrix(3, 0);
    EXPECT_TRUE(id.is_diagonal());

    StateVector s(4, 1);
    std::vector<std::size_t> t{0};
    apply_gate(s, shift_matrix(4, 3), t);
    EXPECT_EQ(s[3], Amplitude(1));
    EXPECT_THROW(shift_matrix(4, 4), std::invalid_argument);
}

TEST(gates, all_constructed_matrices_are_unitary) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-10, 10);
    for (unsigned d = 2; d <= 6; ++d) {
        EXPECT_LE(hadamard_matrix(d).unitarity_error(), 1e-12);
        for (unsigned k = 0; k < d; ++k) {
            EXPECT_LE(shift_matrix(d, k).unitarity_error(), 1e-12);
        }
        for (int i = 0; i < 5; ++i) {
            EXPECT_LE(cphase_matrix(d, angle(rng)).unitarity_error(), 1e-12);
        }
    }
}

TEST(apply_gate, identity_and_not_on_msb) {
    std::mt19937_64 rng(5);
    StateVector s(3, 3, oracle::random_state(27, rng));
    const auto before = copy(s);
    std::vector<std::size_t> t{1};
    apply_gate(s, shift_matrix(3, 0), t);
    EXPECT_EQ(copy(s), before);

    StateVector q(2, 2);
    std::vector<std::size_t> msb{0};
    apply_gate(q, shift_matrix(2, 1), msb);
    EXPECT_EQ(q[2], Amplitude(1));  // |10>
}

TEST(apply_gate, hadamard_twice_is_identity_for_qubits) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector s(2, 4, oracle::random_state(16, rng));
        const auto before = copy(s);
        std::vector<std::size_t> t{rng() % 4};
        apply_gate(s, hadamard_matrix(2), t);
        apply_gate(s, hadamard_matrix(2), t);
        EXPECT_LE(oracle::max_abs_diff(copy(s), before), 1e-12);
    }
}

TEST(apply_gate, errors) {
    StateVector s(2, 2);
    std::vector<std::size_t> out_of_range{2};
    EXPECT_THROW(apply_gate(s, hadamard_matrix(2), out_of_range), std::out_of_range);
    std::vector<std::size_t> two{0, 1};
    EXPECT_THROW(apply_gate(s, hadamard_matrix(2), two), std::invalid_argument);
    std::vector<std::size_t> dup{1, 1};
    EXPECT_THROW(apply_gate(s, cphase_matrix(2, 1.0), dup), std::invalid_argument);
    std::vector<std::size_t> one{0};
    EXPECT_THROW(apply_gate(s, hadamard_matrix(3), one), std::invalid_argument);
}

// Brute-force equivalence: stride application against the explicit
// d^q x d^q embedding for every target choice with d^q <= 256.
TEST(apply_gate, matches_full_matrix_oracle) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(-7, 7);
    for (unsigned d = 2; d <= 5; ++d) {
        for (std::size_t q = 1; oracle::ipow(d, q) <= 256; ++q) {
            const std::size_t dim = oracle::ipow(d, q);
            for (std::size_t a = 0; a < q; ++a) {
                const std::vector<GateMatrix> singles{hadamard_matrix(d), hadamard_matrix(d).adjoint(),
                                                      shift_matrix(d, d - 1)};
                for (const auto &g : singles) {
                    std::vector<std::size_t> t{a};
                    StateVector s(d, q, oracle::random_state(dim, rng));
                    const auto expected = oracle::matvec(oracle::embed(g, t, q), copy(s));
                    apply_gate(s, g, t);
                    ASSERT_LE(oracle::max_abs_diff(copy(s), expected), 1e-12);
                }
                for (std::size_t b = 0; b < q; ++b) {
                    if (a == b) {
                        continue;
                    }
                    // A non-diagonal two-qudit gate exercises the general path
                    // with target order mattering.
                    std::vector<Amplitude> e(d * d * d * d);
                    const GateMatrix h = hadamard_matrix(d);
                    const GateMatrix cp = cphase_matrix(d, angle(rng));
                    for (std::size_t r = 0; r < d * d; ++r) {
                        for (std::size_t c = 0; c < d * d; ++c) {
                            // (H x 1) * CP, unitary and not diagonal
                            e[r * d * d + c] = h(r / d, c / d) * (r % d == c % d ? 1.0 : 0.0) * cp(c, c);
                        }
                    }
                    const GateMatrix mixed(d, 2, e);
                    ASSERT_LE(mixed.unitarity_error(), 1e-12);
                    for (const GateMatrix *g : {&cp, &mixed}) {
                        std::vector<std::size_t> t{a, b};
                        StateVector s(d, q, oracle::random_state(dim, rng));
                        const auto expected = oracle::matvec(oracle::embed(*g, t, q), copy(s));
                        apply_gate(s, *g, t);
                        ASSERT_LE(oracle::max_abs_diff(copy(s), expected), 1e-12)
                            << "d=" << d << " q=" << q << " targets=" << a << "," << b;
                        ASSERT_NEAR(s.squared_norm(), 1.0, kNormTolerance);
                    }
                }
            }
        }
    }
}

TEST(apply_gate, is_linear) {
    std::mt19937_64 rng(17);
    const unsigned d = 3;
    const std::size_t q = 3;
    const Amplitude alpha(0.6, 0.1);
    const Amplitude beta(-0.2, 0.75);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = oracle::random_state(27, rng);
        const auto y = oracle::random_state(27, rng);
        std::vector<Amplitude> mix(27);
        for (std::size_t i = 0; i < 27; ++i) {
            mix[i] = alpha * x[i] + beta * y[i];
        }
        std::vector<std::size_t> t{rng() % q};
        StateVector sx(d, q, x), sy(d, q, y), sm(d, q, mix);
        apply_gate(sx, hadamard_matrix(d), t);
        apply_gate(sy, hadamard_matrix(d), t);
        apply_gate(sm, hadamard_matrix(d), t);
        for (std::size_t i = 0; i < 27; ++i) {
            ASSERT_LE(std::abs(sm[i] - (alpha * sx[i] + beta * sy[i])), 1e-12);
        }
    }
}

TEST(swap_gate, examples) {
    StateVector s(2, 2);
    std::vector<std::size_t> t{0};
    apply_gate(s, shift_matrix(2, 1), t);  // |10>
    swap_gate_apply(s, 0, 1);
    EXPECT_EQ(s[1], Amplitude(1));  // |01>

    StateVector q(4, 2);
    std::vector<std::size_t> t0{0}, t1{1};
    apply_gate(q, shift_matrix(4, 3), t0);
    apply_gate(q, shift_matrix(4, 1), t1);  // |31> = 13
    swap_gate_apply(q, 0, 1);
    EXPECT_EQ(q[1 * 4 + 3], Amplitude(1));  // |13>

    EXPECT_THROW(swap_gate_apply(q, 1, 1), std::invalid_argument);
    EXPECT_THROW(swap_gate_apply(q, 0, 2), std::out_of_range);
}

TEST(swap_gate, twice_is_identity_and_matches_permutation_oracle) {
    std::mt19937_64 rng(19);
    for (unsigned d = 2; d <= 4; ++d) {
        const std::size_t q = 3;
        const std::size_t dim = oracle::ipow(d, q);
        StateVector s(d, q, oracle::random_state(dim, rng));
        const auto before = copy(s);
        swap_gate_apply(s, 0, 2);
        for (std::size_t idx = 0; idx < dim; ++idx) {
            const std::size_t a = oracle::digit_of(idx, 0, d, q);
            const std::size_t b = oracle::digit_of(idx, 1, d, q);
            const std::size_t c = oracle::digit_of(idx, 2, d, q);
            ASSERT_EQ(s[(c * d + b) * d + a], before[idx]);
        }
        swap_gate_apply(s, 2, 0);
        EXPECT_EQ(copy(s), before);
    }
}

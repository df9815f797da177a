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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quditarith/arithmetic.h"
#include "quditarith/resources.h"
#include "quditarith/simulator.h"

namespace quditarith::cli {

namespace {

std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(item);
    }
    return parts;
}

std::uint64_t parse_decimal(const std::string &token, const std::string &flag) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError(flag + ": '" + token + "' is not a non-negative decimal integer");
    }
    try {
        return std::stoull(token);
    } catch (const std::exception &) {
        throw UsageError(flag + ": '" + token + "' is out of range");
    }
}

void check_base(unsigned base) {
    if (base < 2) {
        throw UsageError("--base: must be at least 2");
    }
}

void check_digits(std::size_t digits) {
    if (digits < 1) {
        throw UsageError("--digits: must be at least 1");
    }
}

Mode parse_mode(const CliConfig &config) {
    if (config.command == "sub" || config.mode == "sub") {
        return Mode::kSub;
    }
    if (config.mode != "add") {
        throw UsageError("--mode: expected 'add' or 'sub', got '" + config.mode + "'");
    }
    return Mode::kAdd;
}

AdderSpec spec_from_config(const CliConfig &config) {
    check_base(config.base);
    check_digits(config.digits);
    if (config.inputs.empty()) {
        throw UsageError("--inputs: at least one input is required");
    }
    AdderSpec spec;
    spec.base = config.base;
    spec.digits_per_input = config.digits;
    spec.mode = parse_mode(config);
    std::uint64_t limit;
    try {
        limit = checked_pow(config.base, config.digits);
    } catch (const std::overflow_error &) {
        throw UsageError("--digits: base^digits does not fit in 64 bits");
    }
    for (const auto &token : split_commas(config.inputs)) {
        std::uint64_t value;
        if (config.inputs_in_base) {
            try {
                value = to_integer(parse_digit_string(token, config.base));
            } catch (const std::exception &e) {
                throw UsageError("--inputs: '" + token + "' is not a base-" + std::to_string(config.base) +
                                 " digit string (" + e.what() + ")");
            }
        } else {
            value = parse_decimal(token, "--inputs");
        }
        if (value >= limit) {
            throw UsageError("--inputs: " + std::to_string(value) + " does not fit in " +
                             std::to_string(config.digits) + " base-" + std::to_string(config.base) + " digits");
        }
        spec.inputs.push_back(value);
    }
    if (spec.inputs.empty()) {
        throw UsageError("--inputs: at least one input is required");
    }
    return spec;
}

void emit(const CliConfig &config, std::ostream &out, const std::string &text) {
    if (config.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
        throw UsageError("--output: cannot open '" + config.output + "' for writing");
    }
    file << text;
}

// Dense simulation guard: 2^26 amplitudes is about 1 GiB.
constexpr std::uint64_t kMaxAmplitudes = std::uint64_t{1} << 26;

}  // namespace

int run_add(const CliConfig &config, std::ostream &out) {
    const AdderSpec spec = spec_from_config(config);
    if (config.shots < 1) {
        throw UsageError("--shots: must be at least 1");
    }
    if (!(config.noise >= 0.0 && config.noise <= 1.0)) {
        throw UsageError("--noise: must lie in [0, 1]");
    }
    const std::string format = config.format.empty() ? "json" : config.format;
    if (format != "json" && format != "text") {
        throw UsageError("--format: " + format + " is not supported for " + config.command);
    }
    std::uint64_t dim;
    try {
        dim = checked_pow(spec.base, spec.total_qudits());
    } catch (const std::overflow_error &) {
        dim = kMaxAmplitudes + 1;
    }
    if (dim > kMaxAmplitudes) {
        throw UsageError("--inputs: " + std::to_string(spec.total_qudits()) + " qudits of base " +
                         std::to_string(spec.base) + " exceed the dense simulator limit");
    }

    const Circuit circuit = build_full_adder(spec);
    const StateVector state = execute(circuit);
    const Histogram hist = measure(state, fourier_register(circuit.layout()), config.shots,
                                   NoiseConfig{config.noise, config.seed});
    const DigitString top = hist.top_outcome();
    if (format == "json") {
        emit(config, out, histogram_to_json(hist));
    }
    out << "result=" << top.to_string() << " value=" << to_integer(top) << "\n";
    return kExitOk;
}

int run_gate_count(const CliConfig &config, std::ostream &out) {
    check_base(config.base);
    check_digits(config.digits);
    if (config.num_inputs < 1) {
        throw UsageError("--num-inputs: must be at least 1");
    }
    const std::string format = config.format.empty() ? "text" : config.format;
    if (format != "text" && format != "csv") {
        throw UsageError("--format: " + format + " is not supported for gate-count");
    }
    const std::size_t t = required_ancillas(config.num_inputs, config.base);
    const std::uint64_t formula = gate_count_formula(config.digits, config.num_inputs, t);
    if (format == "csv") {
        const SweepRow row{config.base, config.digits, config.num_inputs, t,
                           capacity(config.digits, t, config.base), formula};
        emit(config, out, sweep_to_csv(std::span(&row, 1)));
        return kExitOk;
    }
    std::ostringstream line;
    line << "formula=" << formula;
    int code = kExitOk;
    if (config.verify) {
        const ResourceReport report = resource_report(config.base, config.digits, config.num_inputs);
        line << " tally=" << report.tally.arithmetic_gates() << (report.reconciles() ? " MATCH" : " MISMATCH");
        if (!report.reconciles()) {
            code = kExitInternal;
        }
    }
    line << "\n";
    emit(config, out, line.str());
    return code;
}

int run_sweep(const CliConfig &config, std::ostream &out) {
    std::vector<unsigned> bases;
    for (const auto &token : split_commas(config.bases)) {
        const std::uint64_t b = parse_decimal(token, "--bases");
        if (b < 2 || b > 1024) {
            throw UsageError("--bases: base " + token + " out of range [2, 1024]");
        }
        bases.push_back(static_cast<unsigned>(b));
    }
    if (bases.empty()) {
        throw UsageError("--bases: at least one base is required");
    }
    if (config.max_capacity > kMaxSweepCapacity) {
        throw UsageError("--max-capacity: must not exceed " + std::to_string(kMaxSweepCapacity));
    }
    const std::string format = config.format.empty() ? "csv" : config.format;
    if (format != "csv") {
        throw UsageError("--format: " + format + " is not supported for sweep");
    }
    const auto rows = sweep(bases, config.max_capacity);
    emit(config, out, sweep_to_csv(rows));
    return kExitOk;
}

int run_export_circuit(const CliConfig &config, std::ostream &out) {
    const AdderSpec spec = spec_from_config(config);
    const std::string format = config.format.empty() ? "json" : config.format;
    if (format == "qasm" && spec.base != 2) {
        throw UsageError("--format: qasm export is only available for --base 2");
    }
    if (format != "json" && format != "qasm" && format != "text") {
        throw UsageError("--format: " + format + " is not supported for export-circuit");
    }
    const Circuit circuit = build_full_adder(spec);
    if (format == "json") {
        emit(config, out, circuit_to_json(circuit));
    } else if (format == "qasm") {
        emit(config, out, circuit_to_qasm(circuit));
    } else {
        emit(config, out, circuit_to_text(circuit));
    }
    return kExitOk;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Qudit QFT adder construction, simulation and resource analysis", "qarith"};
    app.require_subcommand(1);
    CliConfig config;

    auto adder_flags = [&config](CLI::App *sub) {
        sub->add_option("--base", config.base, "Qudit dimension d");
        sub->add_option("--digits", config.digits, "Base-d digits per input (n)");
        sub->add_option("--inputs", config.inputs, "Comma-separated inputs")->required();
        sub->add_flag("--inputs-base", config.inputs_in_base, "Read inputs as base-d digit strings");
        sub->add_option("--output", config.output, "Write the artifact to this file");
        sub->add_option("--format", config.format, "Output format");
    };

    auto *add = app.add_subcommand("add", "Simulate the N-input adder");
    auto *sub = app.add_subcommand("sub", "Simulate the N-input subtractor (first input minus the rest)");
    for (auto *cmd : {add, sub}) {
        adder_flags(cmd);
        cmd->add_option("--shots", config.shots, "Measurement shots");
        cmd->add_option("--noise", config.noise, "Readout flip probability per digit");
        cmd->add_option("--seed", config.seed, "Sampling seed");
    }

    auto *gate_count = app.add_subcommand("gate-count", "Closed-form gate count");
    gate_count->add_option("--base", config.base, "Qudit dimension d");
    gate_count->add_option("--digits", config.digits, "Base-d digits per input (n)");
    gate_count->add_option("--num-inputs", config.num_inputs, "Number of inputs (N)")->required();
    gate_count->add_flag("--verify", config.verify, "Build the circuit and compare its tally");
    gate_count->add_option("--output", config.output, "Write the result to this file");
    gate_count->add_option("--format", config.format, "text or csv");

    auto *sweep_cmd = app.add_subcommand("sweep", "Gate count versus output capacity table");
    sweep_cmd->add_option("--bases", config.bases, "Comma-separated bases");
    sweep_cmd->add_option("--max-capacity", config.max_capacity, "Largest capacity d^(t+n) to include");
    sweep_cmd->add_option("--output", config.output, "Write the CSV to this file");
    sweep_cmd->add_option("--format", config.format, "csv");

    auto *export_cmd = app.add_subcommand("export-circuit", "Write the adder circuit");
    adder_flags(export_cmd);
    export_cmd->add_option("--mode", config.mode, "add or sub");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (add->parsed() || sub->parsed()) {
            config.command = add->parsed() ? "add" : "sub";
            return run_add(config, out);
        }
        if (gate_count->parsed()) {
            config.command = "gate-count";
            return run_gate_count(config, out);
        }
        if (sweep_cmd->parsed()) {
            config.command = "sweep";
            return run_sweep(config, out);
        }
        config.command = "export-circuit";
        return run_export_circuit(config, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace quditarith::cli

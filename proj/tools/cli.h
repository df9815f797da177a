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

#ifndef QUDITARITH_TOOLS_CLI_H
#define QUDITARITH_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace quditarith::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Bad user input; the message names the offending flag.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string command;
    unsigned base = 2;
    std::size_t digits = 1;
    std::string inputs;
    bool inputs_in_base = false;
    std::size_t num_inputs = 0;
    std::string mode = "add";
    std::uint64_t shots = 1024;
    double noise = 0.0;
    std::uint64_t seed = 0x5eed;
    std::string output;
    std::string format;
    bool verify = false;
    std::string bases = "2,4";
    std::uint64_t max_capacity = 4096;
};

int run_add(const CliConfig &config, std::ostream &out);
int run_gate_count(const CliConfig &config, std::ostream &out);
int run_sweep(const CliConfig &config, std::ostream &out);
int run_export_circuit(const CliConfig &config, std::ostream &out);

/// Parses args (without the program name) and dispatches. Never throws;
/// returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace quditarith::cli

#endif

// Copyright 2026 The symsim Authors
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

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "symsim/dynamics.hpp"
#include "symsim/schur.hpp"
#include "symsim/structure.hpp"

namespace symsim::cli {

using json = nlohmann::json;

/// exp(-i H t) for a Hamiltonian given in the input.
struct HamiltonianEvolution {
    SymmetricOperator hamiltonian;
    double time = 0.0;
};

/// Where the unitary of `evolve` / `loss` comes from; at most one per input.
using UnitarySource = std::variant<std::monostate, ComplexExpansion, HamiltonianEvolution, BlockOperator>;

/// Validated contents of an input file.
struct ProblemSpec {
    int n = 1;
    SymmetricOperator terms;
    std::optional<SymmetricOperator> observable;
    UnitarySource unitary;
    std::optional<double> time;
    std::optional<BlockState> state;
    std::vector<LabeledSample> dataset;
    std::optional<StructureTensor> structure_tensor;
    std::optional<FTensor> f_tensor;
    /// FNV-1a 64 of the raw input text, hex.
    std::string digest;
};

/// Parses an input document. Relative file references resolve against
/// `base_dir`. Throws ValidationError naming the offending field.
ProblemSpec parse_spec(const std::string &text, const std::filesystem::path &base_dir = {});

/// Command-line options that refine a spec.
struct Options {
    std::string method = "blocks";
    std::optional<double> time;
    std::optional<std::filesystem::path> observable;
    std::optional<std::filesystem::path> state;
    std::optional<std::filesystem::path> dataset;
    std::string what = "structure";
    int max_n = 5;
    double tolerance = 1e-10;
    /// Directory for cached tensors; empty disables caching.
    std::filesystem::path cache_dir;
};

/// A failed numerical check inside a successful run (exit code 2).
struct RunOutcome {
    json document;
    int exit_code = 0;
};

/// Executes one command: dims, gse, ground-state, evolve, loss, tensors.
/// Throws ValidationError / NumericalError from the owning modules.
RunOutcome run(const std::string &command, const ProblemSpec &spec, const Options &options);

/// Oracle cross-check ladder for n = 1..max_n. Prints one line per check to
/// `log` and returns a document with every check result.
RunOutcome verify(int max_n, std::ostream &log);

/// Full command-line entry point; returns the process exit code.
int main(int argc, char **argv);

std::string fnv1a_hex(const std::string &text);

}  // namespace symsim::cli

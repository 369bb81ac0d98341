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

#include "symsim/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "symsim/error.hpp"
#include "symsim/io.hpp"
#include "symsim/kernels.hpp"
#include "symsim/parallel.hpp"

namespace symsim::cli {

namespace {

std::filesystem::path resolve(const std::filesystem::path &base, const std::string &p) {
    std::filesystem::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

std::string file_field(const json &doc, const char *key) {
    if (!doc.at(key).is_string()) {
        throw ValidationError(std::string("field \"") + key + "\" must be a file path string");
    }
    return doc.at(key).get<std::string>();
}

UnitarySource parse_unitary(const json &u, int n, const std::filesystem::path &base_dir) {
    if (!u.is_object()) {
        throw ValidationError("field \"unitary\" must be an object");
    }
    int sources = 0;
    for (const char *key : {"coeffs", "hamiltonian", "blocks", "blocks_file"}) {
        sources += u.contains(key) ? 1 : 0;
    }
    if (sources != 1) {
        throw ValidationError(
            "field \"unitary\" must name exactly one source: coeffs | hamiltonian (+time) | blocks | blocks_file");
    }
    if (u.contains("coeffs")) {
        return io::complex_terms_from_json(u.at("coeffs"), n, "unitary.coeffs");
    }
    if (u.contains("hamiltonian")) {
        if (!u.contains("time") || !u.at("time").is_number()) {
            throw ValidationError("field \"unitary.time\" is required with unitary.hamiltonian");
        }
        return HamiltonianEvolution{io::terms_from_json(u.at("hamiltonian"), n, "unitary.hamiltonian"),
                                    u.at("time").get<double>()};
    }
    json blocks = u.contains("blocks") ? u.at("blocks") : io::read_json_file(resolve(base_dir, file_field(u, "blocks_file")));
    BlockOperator op = io::block_operator_from_json(blocks);
    if (op.n() != n) {
        throw ValidationError("unitary blocks are for n=" + std::to_string(op.n()) + ", input has n=" + std::to_string(n));
    }
    return op;
}

SymmetricOperator observable_from_file(const std::filesystem::path &path, int n) {
    const json doc = io::read_json_file(path);
    if (doc.is_array()) {
        return io::terms_from_json(doc, n, "observable");
    }
    if (doc.contains("n") && doc.at("n") != n) {
        throw ValidationError("observable file is for a different n");
    }
    if (!doc.contains("terms")) {
        throw ValidationError("observable file needs a \"terms\" array");
    }
    return io::terms_from_json(doc.at("terms"), n, "observable.terms");
}

std::string support_key(const SymmetricOperator &h) {
    std::string key = std::to_string(h.n());
    for (const auto &[i, c] : h.terms()) {
        key += i.str();
    }
    return fnv1a_hex(key);
}

StructureTensor structure_tensor(const ProblemSpec &spec, const Options &options) {
    if (spec.structure_tensor) {
        return *spec.structure_tensor;
    }
    if (options.cache_dir.empty()) {
        return structure_tensor_for(spec.terms);
    }
    const auto path = options.cache_dir / ("structure_" + support_key(spec.terms) + ".json");
    if (std::filesystem::exists(path)) {
        return io::structure_tensor_from_json(io::read_json_file(path));
    }
    StructureTensor tensor = structure_tensor_for(spec.terms);
    std::filesystem::create_directories(options.cache_dir);
    io::write_json_file(path, io::structure_tensor_to_json(tensor));
    return tensor;
}

BlockOperator hamiltonian_blocks(const SymmetricOperator &h, const ProblemSpec &spec, const Options &options) {
    if (spec.f_tensor) {
        return block_operator(h, *spec.f_tensor);
    }
    if (options.cache_dir.empty()) {
        return block_operator(h);
    }
    const auto path = options.cache_dir / ("f_" + support_key(h) + ".json");
    FTensor tensor;
    if (std::filesystem::exists(path)) {
        tensor = io::f_tensor_from_json(io::read_json_file(path));
    } else {
        std::vector<MonomialIndex> support;
        for (const auto &[i, c] : h.terms()) {
            support.push_back(i);
        }
        tensor = compute_f_tensor(h.n(), support);
        std::filesystem::create_directories(options.cache_dir);
        io::write_json_file(path, io::f_tensor_to_json(tensor));
    }
    return block_operator(h, tensor);
}

std::vector<MonomialIndex> support_or_all(const SymmetricOperator &h) {
    if (h.empty()) {
        return enumerate_monomials(h.n());
    }
    std::vector<MonomialIndex> out;
    for (const auto &[i, c] : h.terms()) {
        out.push_back(i);
    }
    return out;
}

struct ResolvedUnitary {
    BlockOperator blocks;
    json description;
};

ResolvedUnitary resolve_unitary(const ProblemSpec &spec, const Options &options) {
    if (std::holds_alternative<ComplexExpansion>(spec.unitary)) {
        return {unitary_from_coeffs(std::get<ComplexExpansion>(spec.unitary)), {{"source", "coeffs"}}};
    }
    if (std::holds_alternative<HamiltonianEvolution>(spec.unitary)) {
        const auto &ev = std::get<HamiltonianEvolution>(spec.unitary);
        return {evolution_from_blocks(hamiltonian_blocks(ev.hamiltonian, spec, options), ev.time),
                {{"source", "hamiltonian"}, {"time", ev.time}}};
    }
    if (std::holds_alternative<BlockOperator>(spec.unitary)) {
        const auto &blocks = std::get<BlockOperator>(spec.unitary);
        require_unitary(blocks);
        return {blocks, {{"source", "blocks"}}};
    }
    const double t = options.time.value_or(spec.time.value_or(0.0));
    return {evolution_from_blocks(hamiltonian_blocks(spec.terms, spec, options), t),
            {{"source", "terms"}, {"time", t}}};
}

SymmetricOperator resolve_observable(const ProblemSpec &spec, const Options &options) {
    if (options.observable) {
        return observable_from_file(*options.observable, spec.n);
    }
    return spec.observable.value_or(spec.terms);
}

BlockState resolve_state(const ProblemSpec &spec, const Options &options) {
    if (options.state) {
        BlockState rho = io::block_state_from_json(io::read_json_file(*options.state));
        if (rho.n() != spec.n) {
            throw ValidationError("state file is for n=" + std::to_string(rho.n()) + ", input has n=" +
                                  std::to_string(spec.n));
        }
        return rho;
    }
    if (!spec.state) {
        throw ValidationError("evolve needs a block state (--state or \"state\"/\"state_file\" in the input)");
    }
    return *spec.state;
}

std::vector<LabeledSample> resolve_dataset(const ProblemSpec &spec, const Options &options) {
    std::vector<LabeledSample> samples = spec.dataset;
    if (options.dataset) {
        samples = io::dataset_from_json(io::read_json_file(*options.dataset), options.dataset->parent_path());
    }
    for (const auto &s : samples) {
        if (s.state.n() != spec.n) {
            throw ValidationError("dataset sample is for a different n than the input");
        }
    }
    return samples;
}

json dims_results(int n) {
    json irreps = json::array();
    std::uint64_t total = 0;
    for (const auto &lambda : enumerate_irreps(n)) {
        irreps.push_back({{"lambda0", lambda.lambda0},
                          {"lambda1", lambda.lambda1},
                          {"q_dim", lambda.q_dim()},
                          {"multiplicity", irrep_multiplicity(lambda).get_str()}});
        total += static_cast<std::uint64_t>(lambda.q_dim()) * static_cast<std::uint64_t>(lambda.q_dim());
    }
    return {{"n", n},
            {"monomial_count", monomial_count(n)},
            {"irreps", std::move(irreps)},
            {"sum_q_dim_squared", total}};
}

}  // namespace

std::string fnv1a_hex(const std::string &text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

ProblemSpec parse_spec(const std::string &text, const std::filesystem::path &base_dir) {
    const json doc = io::parse_json_text(text, "input");
    if (!doc.is_object()) {
        throw ValidationError("input must be a JSON object");
    }
    if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
        throw ValidationError("field \"n\" is required and must be an integer");
    }
    ProblemSpec spec;
    spec.n = doc.at("n").get<int>();
    if (spec.n < 1) {
        throw ValidationError("field \"n\" must be >= 1, got " + std::to_string(spec.n));
    }
    spec.digest = fnv1a_hex(text);
    spec.terms = doc.contains("terms") ? io::terms_from_json(doc.at("terms"), spec.n) : SymmetricOperator(spec.n);
    if (doc.contains("observable")) {
        spec.observable = io::terms_from_json(doc.at("observable"), spec.n, "observable");
    }
    if (doc.contains("unitary")) {
        spec.unitary = parse_unitary(doc.at("unitary"), spec.n, base_dir);
    }
    if (doc.contains("time")) {
        if (!doc.at("time").is_number()) {
            throw ValidationError("field \"time\" must be a number");
        }
        spec.time = doc.at("time").get<double>();
    }
    if (doc.contains("state") && doc.contains("state_file")) {
        throw ValidationError("give either \"state\" or \"state_file\", not both");
    }
    if (doc.contains("state") || doc.contains("state_file")) {
        const json state = doc.contains("state") ? doc.at("state")
                                                 : io::read_json_file(resolve(base_dir, file_field(doc, "state_file")));
        spec.state = io::block_state_from_json(state);
        if (spec.state->n() != spec.n) {
            throw ValidationError("state is for n=" + std::to_string(spec.state->n()) + ", input has n=" +
                                  std::to_string(spec.n));
        }
    }
    if (doc.contains("dataset")) {
        spec.dataset = io::dataset_from_json(doc.at("dataset"), base_dir);
    } else if (doc.contains("dataset_file")) {
        const auto path = resolve(base_dir, file_field(doc, "dataset_file"));
        spec.dataset = io::dataset_from_json(io::read_json_file(path), path.parent_path());
    }
    for (const auto &s : spec.dataset) {
        if (s.state.n() != spec.n) {
            throw ValidationError("dataset sample is for a different n than the input");
        }
    }
    if (doc.contains("structure_tensor_file")) {
        spec.structure_tensor =
            io::structure_tensor_from_json(io::read_json_file(resolve(base_dir, file_field(doc, "structure_tensor_file"))));
        if (spec.structure_tensor->n() != spec.n) {
            throw ValidationError("structure tensor file is for a different n than the input");
        }
    }
    if (doc.contains("f_tensor_file")) {
        spec.f_tensor = io::f_tensor_from_json(io::read_json_file(resolve(base_dir, file_field(doc, "f_tensor_file"))));
        if (spec.f_tensor->n() != spec.n) {
            throw ValidationError("F tensor file is for a different n than the input");
        }
    }
    return spec;
}

RunOutcome run(const std::string &command, const ProblemSpec &spec, const Options &options) {
    const auto start = std::chrono::steady_clock::now();
    json results;

    if (command == "dims") {
        results = dims_results(spec.n);
    } else if (command == "gse") {
        if (options.method == "regular") {
            const Eigen::VectorXd spectrum = regular_spectrum(spec.terms, structure_tensor(spec, options));
            const double energy = spectrum.minCoeff();
            const double window = 1e-9 * std::max(1.0, std::abs(energy));
            const auto ground_multiplicity = (spectrum.array() <= energy + window).count();
            results = {{"method", "regular"},
                       {"energy", energy},
                       {"dimension", monomial_count(spec.n)},
                       {"regular_rep_ground_multiplicity", ground_multiplicity}};
        } else if (options.method == "blocks") {
            const auto gs = ground_state(hamiltonian_blocks(spec.terms, spec, options), options.tolerance);
            json degenerate = json::array();
            for (const auto &l : gs.degenerate_irreps) {
                degenerate.push_back(l.lambda1);
            }
            results = {{"method", "blocks"},
                       {"energy", gs.energy},
                       {"lambda1", gs.lambda_min.lambda1},
                       {"degenerate_lambda1", std::move(degenerate)}};
        } else {
            throw ValidationError("--method must be regular or blocks, got " + options.method);
        }
    } else if (command == "ground-state") {
        results = io::ground_state_to_json(ground_state(hamiltonian_blocks(spec.terms, spec, options), options.tolerance));
    } else if (command == "evolve") {
        const BlockState rho = resolve_state(spec, options);
        const auto unitary = resolve_unitary(spec, options);
        const auto observable = hamiltonian_blocks(resolve_observable(spec, options), spec, options);
        const auto energy = hamiltonian_blocks(spec.terms, spec, options);
        const BlockState evolved = evolve_state(unitary.blocks, rho);
        std::size_t max_q = 0;
        for (const auto &lambda : enumerate_irreps(spec.n)) {
            max_q = std::max(max_q, static_cast<std::size_t>(lambda.q_dim()));
        }
        results = {{"unitary", unitary.description},
                   {"expectation", expectation(observable, unitary.blocks, rho)},
                   {"energy_before", expectation(energy, BlockOperator::identity(spec.n), rho)},
                   {"energy_after", expectation(energy, BlockOperator::identity(spec.n), evolved)},
                   {"evolved_state", io::block_state_to_json(evolved)},
                   {"shadow_estimation",
                    {{"calls", "O(|O|_inf^2 eps^-2 n_lambda^2 n_q^2 log(1/delta))"},
                     {"n_lambda", enumerate_irreps(spec.n).size()},
                     {"n_q", max_q},
                     {"executed", false}}}};
    } else if (command == "loss") {
        const auto samples = resolve_dataset(spec, options);
        const auto unitary = resolve_unitary(spec, options);
        const auto o = resolve_observable(spec, options);
        const auto observable = hamiltonian_blocks(o, spec, options);
        json values = json::array();
        for (const auto &s : samples) {
            values.push_back(expectation(observable, unitary.blocks, s.state));
        }
        results = {{"unitary", unitary.description},
                   {"loss", empirical_loss(samples, o, unitary.blocks)},
                   {"num_samples", samples.size()},
                   {"expectations", std::move(values)}};
    } else if (command == "tensors") {
        if (options.what == "structure") {
            return {io::structure_tensor_to_json(compute_structure_tensor(spec.n, support_or_all(spec.terms))), 0};
        }
        if (options.what == "f") {
            return {io::f_tensor_to_json(compute_f_tensor(spec.n, support_or_all(spec.terms))), 0};
        }
        throw ValidationError("--what must be structure or f, got " + options.what);
    } else {
        throw ValidationError("unknown command " + command);
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json doc = {{"command", command},
                {"input_digest", spec.digest},
                {"tolerance", {{"degeneracy_relative", options.tolerance}}},
                {"threads", num_threads()},
                {"isa", kernels::isa_name(kernels::active_isa())},
                {"results", std::move(results)},
                {"wall_time_seconds", seconds}};
    return {std::move(doc), 0};
}

int main(int argc, char **argv) {
    CLI::App app{"Simulator for qubit-permutation-invariant operators"};
    std::string command;
    std::string input;
    std::string output;
    Options options;
    int threads = 0;
    std::optional<std::string> observable;
    std::optional<std::string> state;
    std::optional<std::string> dataset;

    app.add_option("command", command, "dims | gse | ground-state | evolve | loss | tensors | verify")
        ->required()
        ->check(CLI::IsMember({"dims", "gse", "ground-state", "evolve", "loss", "tensors", "verify"}));
    app.add_option("--input", input, "problem specification (JSON)");
    app.add_option("--output", output, "write the result document here instead of stdout");
    app.add_option("--method", options.method, "gse method: regular | blocks")
        ->check(CLI::IsMember({"regular", "blocks"}));
    app.add_option("--time", options.time, "evolution time for exp(-iHt)");
    app.add_option("--observable", observable, "observable terms file");
    app.add_option("--state", state, "block state file");
    app.add_option("--dataset", dataset, "labelled dataset file");
    app.add_option("--what", options.what, "tensors to dump: structure | f")->check(CLI::IsMember({"structure", "f"}));
    app.add_option("--max-n", options.max_n, "largest n for verify")->check(CLI::Range(1, 12));
    app.add_option("--threads", threads, "worker threads (default: all cores)");
    app.add_option("--tolerance", options.tolerance, "relative degeneracy tolerance")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    set_num_threads(threads);
    if (observable) {
        options.observable = *observable;
    }
    if (state) {
        options.state = *state;
    }
    if (dataset) {
        options.dataset = *dataset;
    }
    if (const char *cache = std::getenv("SYMSIM_CACHE_DIR"); cache != nullptr && *cache != '\0') {
        options.cache_dir = cache;
    }

    try {
        RunOutcome outcome;
        if (command == "verify") {
            outcome = verify(options.max_n, std::cerr);
        } else {
            if (input.empty()) {
                throw ValidationError(command + " needs --input");
            }
            std::ifstream in(input);
            if (!in) {
                throw ValidationError("cannot open " + input);
            }
            std::stringstream text;
            text << in.rdbuf();
            const ProblemSpec spec = parse_spec(text.str(), std::filesystem::path(input).parent_path());
            outcome = run(command, spec, options);
        }
        if (output.empty()) {
            std::cout << io::dump(outcome.document);
        } else {
            io::write_json_file(output, outcome.document);
        }
        return outcome.exit_code;
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError &e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace symsim::cli

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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "symsim/cli.hpp"
#include "symsim/error.hpp"
#include "symsim/io.hpp"
#include "symsim/parallel.hpp"
#include "test_util.hpp"

using namespace symsim;
using cli::json;

namespace {

const std::filesystem::path kData = SYMSIM_DATA_DIR;

constexpr const char *kHeisenberg4 =
    R"({"n":4,"terms":[{"i":[2,2,0,0],"coeff":1.0},{"i":[2,0,2,0],"coeff":1.0},{"i":[2,0,0,2],"coeff":1.0}]})";

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

json run(const std::string &command, const std::string &text, cli::Options options = {}) {
    return cli::run(command, cli::parse_spec(text, kData), options).document;
}

int invoke(std::vector<std::string> args) {
    std::vector<char *> argv;
    static std::string program = "symsim";
    argv.push_back(program.data());
    for (auto &a : args) {
        argv.push_back(a.data());
    }
    return cli::main(static_cast<int>(argv.size()), argv.data());
}

std::filesystem::path scratch(const std::string &name) {
    const auto dir = std::filesystem::temp_directory_path() / "symsim_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(parse_spec, accepts_and_rejects) {
    const auto spec = cli::parse_spec(kHeisenberg4);
    ASSERT_EQ(spec.n, 4);
    ASSERT_EQ(spec.terms.terms().size(), 3u);
    ASSERT_THROW(cli::parse_spec(R"({"n":4,"terms":[{"i":[1,2,0,0],"coeff":1.0}]})"), ValidationError);
    ASSERT_THROW(cli::parse_spec(R"({"n":4,"terms":[{"i":[2,2,0,0],"coeff":{"re":1,"im":2}}]})"), ValidationError);
    ASSERT_THROW(cli::parse_spec(R"({"terms":[]})"), ValidationError);
    ASSERT_THROW(cli::parse_spec(R"({"n":4,"terms":[})"), ValidationError);
    ASSERT_THROW(cli::parse_spec(R"({"n":2,"unitary":{"coeffs":[],"hamiltonian":[],"time":1}})"), ValidationError);
    ASSERT_THROW(cli::parse_spec(R"({"n":2,"unitary":{"hamiltonian":[]}})"), ValidationError);
    ASSERT_THROW(cli::parse_spec(
                     R"({"n":2,"dataset":[{"label":2,"state":{"n":2,"blocks":[{"lambda1":1,"matrix_re":[[1]],"matrix_im":[[0]]}]}}]})"),
                 ValidationError);
}

TEST(parse_spec, empty_terms_is_zero_operator) {
    const std::string text = R"({"n":3,"terms":[]})";
    ASSERT_EQ(run("gse", text)["results"]["energy"].get<double>(), 0.0);
    cli::Options regular;
    regular.method = "regular";
    ASSERT_EQ(run("gse", text, regular)["results"]["energy"].get<double>(), 0.0);
}

TEST(run, dims_n4) {
    const json r = run("dims", kHeisenberg4)["results"];
    ASSERT_EQ(r["monomial_count"], 35);
    ASSERT_EQ(r["sum_q_dim_squared"], 35);
    ASSERT_EQ(r["irreps"].size(), 3u);
    const std::vector<std::pair<int, int>> expected = {{4, 5}, {3, 3}, {2, 1}};
    for (std::size_t l = 0; l < 3; l++) {
        ASSERT_EQ(r["irreps"][l]["lambda0"], expected[l].first);
        ASSERT_EQ(r["irreps"][l]["q_dim"], expected[l].second);
    }
}

TEST(run, gse_heisenberg_n4) {
    const json r = run("gse", kHeisenberg4)["results"];
    ASSERT_NEAR(r["energy"].get<double>(), -6.0, 1e-10);
    ASSERT_EQ(r["lambda1"], 2);
}

TEST(run, regular_and_blocks_agree) {
    std::mt19937_64 rng(77);
    cli::Options regular;
    regular.method = "regular";
    for (int n = 1; n <= 7; n++) {
        for (int s = 0; s < 4; s++) {
            const auto h = test_support::random_operator(n, 5, rng);
            const std::string text = io::dump({{"n", n}, {"terms", io::terms_to_json(h)}});
            ASSERT_NEAR(run("gse", text)["results"]["energy"].get<double>(),
                        run("gse", text, regular)["results"]["energy"].get<double>(), 1e-8);
        }
    }
}

TEST(run, deterministic_apart_from_wall_time) {
    const std::string text = slurp(kData / "ising4.json");
    for (const char *command : {"gse", "ground-state", "evolve", "loss", "dims"}) {
        json a = run(command, text);
        json b = run(command, text);
        a.erase("wall_time_seconds");
        b.erase("wall_time_seconds");
        ASSERT_EQ(io::dump(a), io::dump(b)) << command;
    }
}

TEST(run, thread_count_does_not_change_results) {
    const std::string text = slurp(kData / "ising4.json");
    cli::Options regular;
    regular.method = "regular";
    std::vector<std::string> dumps[2];
    for (int pass = 0; pass < 2; pass++) {
        set_num_threads(pass == 0 ? 1 : 4);
        for (const char *command : {"gse", "ground-state", "evolve", "loss"}) {
            dumps[pass].push_back(io::dump(run(command, text)["results"]));
        }
        dumps[pass].push_back(io::dump(run("gse", text, regular)["results"]));
    }
    set_num_threads(0);
    ASSERT_EQ(dumps[0], dumps[1]);
}

TEST(run, document_fields) {
    const json doc = run("gse", kHeisenberg4);
    for (const char *key : {"command", "input_digest", "tolerance", "wall_time_seconds", "results"}) {
        ASSERT_TRUE(doc.contains(key)) << key;
    }
    ASSERT_EQ(doc["input_digest"], cli::fnv1a_hex(kHeisenberg4));
}

TEST(run, tensors_reingested_reproduce_results) {
    cli::Options structure;
    structure.what = "structure";
    cli::Options f;
    f.what = "f";
    const auto st = scratch("st.json");
    const auto ft = scratch("f.json");
    io::write_json_file(st, run("tensors", kHeisenberg4, structure));
    io::write_json_file(ft, run("tensors", kHeisenberg4, f));

    json spec = json::parse(kHeisenberg4);
    spec["structure_tensor_file"] = st.string();
    spec["f_tensor_file"] = ft.string();
    cli::Options regular;
    regular.method = "regular";
    const std::string text = io::dump(spec);
    ASSERT_EQ(run("gse", text, regular)["results"], run("gse", kHeisenberg4, regular)["results"]);
    ASSERT_EQ(run("gse", text)["results"], run("gse", kHeisenberg4)["results"]);
}

TEST(run, cache_directory_reuse) {
    cli::Options options;
    options.cache_dir = scratch("cache");
    std::filesystem::remove_all(options.cache_dir);
    const json first = run("gse", kHeisenberg4, options)["results"];
    ASSERT_FALSE(std::filesystem::is_empty(options.cache_dir));
    ASSERT_EQ(run("gse", kHeisenberg4, options)["results"], first);
    options.method = "regular";
    ASSERT_NEAR(run("gse", kHeisenberg4, options)["results"]["energy"].get<double>(), -6.0, 1e-10);
    ASSERT_NEAR(run("gse", kHeisenberg4, options)["results"]["energy"].get<double>(), -6.0, 1e-10);
}

TEST(run, evolve_conserves_energy_and_loss_signs) {
    const std::string text = slurp(kData / "ising4.json");
    const json evolved = run("evolve", text)["results"];
    ASSERT_NEAR(evolved["energy_before"].get<double>(), evolved["energy_after"].get<double>(), 1e-9);
    ASSERT_LE(std::abs(evolved["expectation"].get<double>()), 4.0 + 1e-12);
    const json loss = run("loss", text)["results"];
    ASSERT_EQ(loss["num_samples"], 2);
    const double e0 = loss["expectations"][0].get<double>();
    const double e1 = loss["expectations"][1].get<double>();
    ASSERT_NEAR(loss["loss"].get<double>(), -(e0 - e1) / 2.0, 1e-14);
}

TEST(run, unitary_sources) {
    json spec = json::parse(slurp(kData / "ising4.json"));
    const double from_terms = run("evolve", io::dump(spec))["results"]["expectation"].get<double>();
    spec["unitary"] = {{"hamiltonian", spec["terms"]}, {"time", spec["time"]}};
    const std::string text = io::dump(spec);
    ASSERT_NEAR(run("evolve", text)["results"]["expectation"].get<double>(), from_terms, 1e-12);

    const auto parsed = cli::parse_spec(text, kData);
    const auto &ev = std::get<cli::HamiltonianEvolution>(parsed.unitary);
    spec["unitary"] = {{"blocks", io::block_operator_to_json(evolution_from_hamiltonian(ev.hamiltonian, ev.time))}};
    ASSERT_NEAR(run("evolve", io::dump(spec))["results"]["expectation"].get<double>(), from_terms, 1e-12);

    BlockOperator bad = BlockOperator::identity(4);
    bad[0] *= 2.0;
    spec["unitary"] = {{"blocks", io::block_operator_to_json(bad)}};
    ASSERT_THROW(run("evolve", io::dump(spec)), NumericalError);
}

TEST(main, exit_codes) {
    const auto good = scratch("good.json");
    const auto bad = scratch("bad.json");
    const auto out = scratch("out.json");
    std::ofstream(good) << kHeisenberg4;
    std::ofstream(bad) << R"({"n":4,"terms":[{"i":[1,2,0,0],"coeff":1.0}]})";

    ASSERT_EQ(invoke({"gse", "--input", good.string(), "--output", out.string()}), 0);
    ASSERT_NEAR(io::read_json_file(out)["results"]["energy"].get<double>(), -6.0, 1e-10);
    ASSERT_EQ(invoke({"gse", "--method", "regular", "--input", good.string(), "--output", out.string()}), 0);
    ASSERT_EQ(invoke({"gse", "--input", bad.string()}), 1);
    ASSERT_EQ(invoke({"gse", "--input", scratch("missing.json").string()}), 1);
    ASSERT_EQ(invoke({"frobnicate"}), 1);
    ASSERT_EQ(invoke({"gse", "--method", "dense", "--input", good.string()}), 1);

    json bad_unitary = json::parse(slurp(kData / "ising4.json"));
    BlockOperator scaled = BlockOperator::identity(4);
    scaled[1] *= 3.0;
    bad_unitary["unitary"] = {{"blocks", io::block_operator_to_json(scaled)}};
    const auto file = scratch("nonunitary.json");
    bad_unitary["state_file"] = (kData / "all_up4.json").string();
    bad_unitary["dataset"] = json::array();
    std::ofstream(file) << io::dump(bad_unitary);
    ASSERT_EQ(invoke({"evolve", "--input", file.string(), "--output", out.string()}), 2);
}

TEST(main, verify_max_n_5_passes) {
    std::ostringstream log;
    const auto outcome = cli::verify(5, log);
    ASSERT_EQ(outcome.exit_code, 0) << log.str();
    ASSERT_TRUE(outcome.document["all_passed"].get<bool>());
    ASSERT_EQ(log.str().find("FAIL"), std::string::npos);
    ASSERT_EQ(invoke({"verify", "--max-n", "5", "--output", scratch("verify.json").string()}), 0);
}

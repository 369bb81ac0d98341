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

#include "symsim/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "symsim/error.hpp"

namespace symsim::io {

namespace {

const json &require(const json &j, const std::string &key, const std::string &context) {
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(context + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

int require_int(const json &j, const std::string &key, const std::string &context) {
    const json &v = require(j, key, context);
    if (!v.is_number_integer()) {
        throw ValidationError(context + ": field \"" + key + "\" must be an integer");
    }
    return v.get<int>();
}

double require_number(const json &j, const std::string &key, const std::string &context) {
    const json &v = require(j, key, context);
    if (!v.is_number()) {
        throw ValidationError(context + ": field \"" + key + "\" must be a number");
    }
    return v.get<double>();
}

int require_n(const json &j, const std::string &context) {
    const int n = require_int(j, "n", context);
    if (n < 1) {
        throw ValidationError(context + ": field \"n\" must be >= 1, got " + std::to_string(n));
    }
    return n;
}

}  // namespace

json to_json(const MonomialIndex &i) { return json::array({i.i1, i.ix, i.iy, i.iz}); }

MonomialIndex monomial_from_json(const json &j, int n) {
    if (!j.is_array() || j.size() != 4) {
        throw ValidationError("monomial must be an array of 4 integers");
    }
    std::array<int, 4> c{};
    for (std::size_t k = 0; k < 4; k++) {
        if (!j[k].is_number_integer()) {
            throw ValidationError("monomial must be an array of 4 integers");
        }
        c[k] = j[k].get<int>();
    }
    const auto i = MonomialIndex::from_counts(c);
    validate_monomial(i, n);
    return i;
}

json terms_to_json(const SymmetricOperator &h) {
    json out = json::array();
    for (const auto &[i, c] : h.terms()) {
        out.push_back({{"i", to_json(i)}, {"coeff", c}});
    }
    return out;
}

SymmetricOperator terms_from_json(const json &j, int n, const std::string &field) {
    if (!j.is_array()) {
        throw ValidationError("field \"" + field + "\" must be an array of terms");
    }
    SymmetricOperator h(n);
    for (std::size_t t = 0; t < j.size(); t++) {
        const std::string context = field + "[" + std::to_string(t) + "]";
        const auto i = monomial_from_json(require(j[t], "i", context), n);
        const json &c = require(j[t], "coeff", context);
        double value = 0.0;
        if (c.is_number()) {
            value = c.get<double>();
        } else if (c.is_object()) {
            const double im = c.contains("im") ? require_number(c, "im", context + ".coeff") : 0.0;
            if (im != 0.0) {
                throw ValidationError(context + ": non-real Hamiltonian coefficient (im=" + std::to_string(im) + ")");
            }
            value = require_number(c, "re", context + ".coeff");
        } else {
            throw ValidationError(context + ": coefficient must be a number");
        }
        h.add(i, value);
    }
    return h;
}

json complex_terms_to_json(const ComplexExpansion &u) {
    json out = json::array();
    for (const auto &[i, c] : u.terms()) {
        out.push_back({{"i", to_json(i)}, {"re", c.real()}, {"im", c.imag()}});
    }
    return out;
}

ComplexExpansion complex_terms_from_json(const json &j, int n, const std::string &field) {
    if (!j.is_array()) {
        throw ValidationError("field \"" + field + "\" must be an array of terms");
    }
    ComplexExpansion u(n);
    for (std::size_t t = 0; t < j.size(); t++) {
        const std::string context = field + "[" + std::to_string(t) + "]";
        const auto i = monomial_from_json(require(j[t], "i", context), n);
        const double re = require_number(j[t], "re", context);
        const double im = j[t].contains("im") ? require_number(j[t], "im", context) : 0.0;
        u.add(i, {re, im});
    }
    return u;
}

json matrix_re(const Eigen::MatrixXcd &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(m(r, c).real());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_im(const Eigen::MatrixXcd &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(m(r, c).imag());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXcd matrix_from_json(const json &re, const json &im, int rows, int cols, const std::string &field) {
    auto check = [&](const json &part, const char *name) {
        if (!part.is_array() || part.size() != static_cast<std::size_t>(rows)) {
            throw ValidationError(field + "." + name + " must have " + std::to_string(rows) + " rows");
        }
        for (const auto &row : part) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
                throw ValidationError(field + "." + name + " rows must have " + std::to_string(cols) + " entries");
            }
            for (const auto &v : row) {
                if (!v.is_number()) {
                    throw ValidationError(field + "." + name + " entries must be numbers");
                }
            }
        }
    };
    check(re, "matrix_re");
    check(im, "matrix_im");
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) {
            m(r, c) = {re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>(),
                       im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>()};
        }
    }
    return m;
}

json structure_tensor_to_json(const StructureTensor &tensor) {
    json entries = json::array();
    for (const auto &[key, row] : tensor.rows()) {
        for (const auto &e : row) {
            if (e.value == std::complex<double>(0.0, 0.0)) {
                continue;
            }
            entries.push_back({{"i", to_json(key.first)},
                               {"j", to_json(key.second)},
                               {"k", to_json(e.k)},
                               {"re", e.value.real()},
                               {"im", e.value.imag()}});
        }
    }
    return {{"n", tensor.n()}, {"entries", std::move(entries)}};
}

StructureTensor structure_tensor_from_json(const json &j) {
    const int n = require_n(j, "structure tensor");
    const json &entries = require(j, "entries", "structure tensor");
    if (!entries.is_array()) {
        throw ValidationError("structure tensor: \"entries\" must be an array");
    }
    // Rows with only zero entries are omitted from dumps, so every pair
    // (i, j) with i among the dumped left factors is present in the result.
    std::set<MonomialIndex> left;
    std::map<StructureTensor::Key, std::vector<StructureEntry>> rows;
    for (std::size_t e = 0; e < entries.size(); e++) {
        const std::string context = "entries[" + std::to_string(e) + "]";
        const auto i = monomial_from_json(require(entries[e], "i", context), n);
        const auto jj = monomial_from_json(require(entries[e], "j", context), n);
        const auto k = monomial_from_json(require(entries[e], "k", context), n);
        const std::complex<double> v(require_number(entries[e], "re", context),
                                     require_number(entries[e], "im", context));
        left.insert(i);
        rows[{i, jj}].push_back({k, v});
    }
    StructureTensor tensor(n);
    const auto basis = enumerate_monomials(n);
    for (const auto &i : left) {
        for (const auto &jj : basis) {
            auto it = rows.find({i, jj});
            tensor.set_row(i, jj, it == rows.end() ? std::vector<StructureEntry>{} : std::move(it->second));
        }
    }
    return tensor;
}

json f_tensor_to_json(const FTensor &tensor) {
    json blocks = json::array();
    for (const auto &[key, block] : tensor.blocks()) {
        blocks.push_back({{"i", to_json(block.i)},
                          {"lambda1", block.lambda.lambda1},
                          {"matrix_re", matrix_re(block.matrix)},
                          {"matrix_im", matrix_im(block.matrix)}});
    }
    return {{"n", tensor.n()}, {"blocks", std::move(blocks)}};
}

FTensor f_tensor_from_json(const json &j) {
    const int n = require_n(j, "F tensor");
    const json &blocks = require(j, "blocks", "F tensor");
    if (!blocks.is_array()) {
        throw ValidationError("F tensor: \"blocks\" must be an array");
    }
    FTensor tensor(n);
    for (std::size_t b = 0; b < blocks.size(); b++) {
        const std::string context = "blocks[" + std::to_string(b) + "]";
        const auto i = monomial_from_json(require(blocks[b], "i", context), n);
        const int l1 = require_int(blocks[b], "lambda1", context);
        if (l1 < 0 || 2 * l1 > n) {
            throw ValidationError(context + ": lambda1 out of range");
        }
        const auto lambda = IrrepLabel::from_lambda1(n, l1);
        if (tensor.contains(i, l1)) {
            throw ValidationError(context + ": duplicate block");
        }
        tensor.insert({i, lambda,
                       matrix_from_json(require(blocks[b], "matrix_re", context),
                                        require(blocks[b], "matrix_im", context), lambda.q_dim(), lambda.q_dim(),
                                        context)});
    }
    return tensor;
}

json block_operator_to_json(const BlockOperator &op) {
    json blocks = json::array();
    for (std::size_t l = 0; l < op.num_blocks(); l++) {
        const auto &m = op[static_cast<int>(l)];
        blocks.push_back({{"lambda1", static_cast<int>(l)}, {"matrix_re", matrix_re(m)}, {"matrix_im", matrix_im(m)}});
    }
    return {{"n", op.n()}, {"blocks", std::move(blocks)}};
}

BlockOperator block_operator_from_json(const json &j) {
    const int n = require_n(j, "block operator");
    const json &blocks = require(j, "blocks", "block operator");
    if (!blocks.is_array()) {
        throw ValidationError("block operator: \"blocks\" must be an array");
    }
    BlockOperator op(n);
    std::set<int> seen;
    for (std::size_t b = 0; b < blocks.size(); b++) {
        const std::string context = "blocks[" + std::to_string(b) + "]";
        const int l1 = require_int(blocks[b], "lambda1", context);
        if (l1 < 0 || 2 * l1 > n) {
            throw ValidationError(context + ": lambda1 out of range");
        }
        if (!seen.insert(l1).second) {
            throw ValidationError(context + ": duplicate block for lambda1=" + std::to_string(l1));
        }
        const int d = n - 2 * l1 + 1;
        op[l1] = matrix_from_json(require(blocks[b], "matrix_re", context), require(blocks[b], "matrix_im", context),
                                  d, d, context);
    }
    return op;
}

json block_state_to_json(const BlockState &rho) { return block_operator_to_json(rho.blocks()); }

BlockState block_state_from_json(const json &j) { return BlockState(block_operator_from_json(j)); }

json ground_state_to_json(const GroundStateResult &gs) {
    json amplitudes = json::array();
    for (Eigen::Index q = 0; q < gs.amplitudes.size(); q++) {
        amplitudes.push_back({{"re", gs.amplitudes(q).real()}, {"im", gs.amplitudes(q).imag()}});
    }
    json degenerate = json::array();
    for (const auto &lambda : gs.degenerate_irreps) {
        degenerate.push_back(lambda.lambda1);
    }
    return {{"energy", gs.energy},
            {"lambda1", gs.lambda_min.lambda1},
            {"amplitudes", std::move(amplitudes)},
            {"degenerate_lambda1", std::move(degenerate)}};
}

GroundStateResult ground_state_from_json(const json &j, int n) {
    GroundStateResult gs;
    gs.energy = require_number(j, "energy", "ground state");
    gs.lambda_min = IrrepLabel::from_lambda1(n, require_int(j, "lambda1", "ground state"));
    const json &amps = require(j, "amplitudes", "ground state");
    if (!amps.is_array() || amps.size() != static_cast<std::size_t>(gs.lambda_min.q_dim())) {
        throw ValidationError("ground state: amplitudes length must equal q_dim");
    }
    gs.amplitudes.resize(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t q = 0; q < amps.size(); q++) {
        gs.amplitudes(static_cast<Eigen::Index>(q)) = {require_number(amps[q], "re", "amplitude"),
                                                       require_number(amps[q], "im", "amplitude")};
    }
    for (const auto &l : require(j, "degenerate_lambda1", "ground state")) {
        gs.degenerate_irreps.push_back(IrrepLabel::from_lambda1(n, l.get<int>()));
    }
    return gs;
}

std::vector<LabeledSample> dataset_from_json(const json &j, const std::filesystem::path &base_dir) {
    if (!j.is_array()) {
        throw ValidationError("dataset must be an array of samples");
    }
    std::vector<LabeledSample> samples;
    for (std::size_t s = 0; s < j.size(); s++) {
        const std::string context = "dataset[" + std::to_string(s) + "]";
        const int label = require_int(j[s], "label", context);
        if (label != 1 && label != -1) {
            throw ValidationError(context + ": label must be -1 or +1, got " + std::to_string(label));
        }
        json state;
        if (j[s].contains("state")) {
            state = j[s].at("state");
        } else if (j[s].contains("state_file")) {
            std::filesystem::path p = j[s].at("state_file").get<std::string>();
            state = read_json_file(p.is_absolute() ? p : base_dir / p);
        } else {
            throw ValidationError(context + ": needs \"state\" or \"state_file\"");
        }
        samples.emplace_back(block_state_from_json(state), label);
    }
    return samples;
}

json parse_json_text(const std::string &text, const std::string &origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError("malformed JSON in " + origin + ": " + e.what());
    }
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), path.string());
}

std::string dump(const json &doc) { return doc.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path &path, const json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write " + path.string());
    }
    out << dump(doc);
}

}  // namespace symsim::io

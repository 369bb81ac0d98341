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
#include <string>
#include <vector>

#include "json.hpp"
#include "symsim/dynamics.hpp"
#include "symsim/schur.hpp"
#include "symsim/structure.hpp"

// JSON encodings of every artifact the tools exchange. Matrices are stored as
// separate real and imaginary row-major nested arrays; monomials as
// [i1, ix, iy, iz]. Decoders validate shapes and throw ValidationError with
// the offending field in the message.

namespace symsim::io {

using json = nlohmann::json;

json to_json(const MonomialIndex &i);
MonomialIndex monomial_from_json(const json &j, int n);

/// [{"i":[...],"coeff":c}, ...]. Coefficients may be plain numbers or
/// {"re":..,"im":..} objects with zero imaginary part.
json terms_to_json(const SymmetricOperator &h);
SymmetricOperator terms_from_json(const json &j, int n, const std::string &field = "terms");

/// [{"i":[...],"re":..,"im":..}, ...].
json complex_terms_to_json(const ComplexExpansion &u);
ComplexExpansion complex_terms_from_json(const json &j, int n, const std::string &field = "coeffs");

json matrix_re(const Eigen::MatrixXcd &m);
json matrix_im(const Eigen::MatrixXcd &m);
Eigen::MatrixXcd matrix_from_json(const json &re, const json &im, int rows, int cols, const std::string &field);

/// {"n":int,"entries":[{"i":[..],"j":[..],"k":[..],"re":..,"im":..}]}, sorted
/// by (i, j, k), zeros omitted.
json structure_tensor_to_json(const StructureTensor &tensor);
StructureTensor structure_tensor_from_json(const json &j);

/// {"n":int,"blocks":[{"i":[..],"lambda1":int,"matrix_re":[[..]],"matrix_im":[[..]]}]}.
json f_tensor_to_json(const FTensor &tensor);
FTensor f_tensor_from_json(const json &j);

/// {"n":int,"blocks":[{"lambda1":int,"matrix_re":[[..]],"matrix_im":[[..]]}]}.
/// On input, irreps without a block are zero; duplicated lambda1 is an error.
json block_operator_to_json(const BlockOperator &op);
BlockOperator block_operator_from_json(const json &j);
json block_state_to_json(const BlockState &rho);
BlockState block_state_from_json(const json &j);

/// {"energy":..,"lambda1":..,"amplitudes":[{"re":..,"im":..}],"degenerate_lambda1":[..]}.
json ground_state_to_json(const GroundStateResult &gs);
GroundStateResult ground_state_from_json(const json &j, int n);

/// Array of {"state": inline | "state_file": path, "label": +-1}. Relative
/// state_file paths resolve against `base_dir`.
std::vector<LabeledSample> dataset_from_json(const json &j, const std::filesystem::path &base_dir);

json read_json_file(const std::filesystem::path &path);
json parse_json_text(const std::string &text, const std::string &origin);
void write_json_file(const std::filesystem::path &path, const json &doc);

/// Serialized form used for every file the tools write.
std::string dump(const json &doc);

}  // namespace symsim::io

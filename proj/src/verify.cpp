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

#include <cmath>
#include <functional>
#include <random>

#include "symsim/cli.hpp"
#include "symsim/oracle.hpp"
#include "symsim/sampling.hpp"

namespace symsim::cli {

namespace {

struct Check {
    std::string name;
    double error;
    double tolerance;
};

// Largest |(A_i A_j) - sum_k X A_k| over sampled pairs, dense.
double structure_error(int n, std::mt19937_64 &rng) {
    const dense::DenseBasis basis(n);
    const auto monomials = enumerate_monomials(n);
    std::vector<std::pair<MonomialIndex, MonomialIndex>> pairs;
    if (monomials.size() <= 20) {
        for (const auto &i : monomials) {
            for (const auto &j : monomials) {
                pairs.emplace_back(i, j);
            }
        }
    } else {
        for (int s = 0; s < 40; s++) {
            pairs.emplace_back(sampling::random_monomial(n, rng), sampling::random_monomial(n, rng));
        }
    }
    double worst = 0.0;
    for (const auto &[i, j] : pairs) {
        Eigen::MatrixXcd diff = basis.at(i).matrix * basis.at(j).matrix;
        for (const auto &e : structure_row(i, j)) {
            diff -= e.value * basis.at(e.k).matrix;
        }
        worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
    return worst;
}

double f_error(int n) {
    const dense::DenseBasis basis(n);
    double worst = 0.0;
    for (const auto &lambda : enumerate_irreps(n)) {
        std::vector<Eigen::VectorXcd> states;
        for (int q = 0; q < lambda.q_dim(); q++) {
            states.push_back(dense::dense_schur_state(lambda, q).vector);
        }
        for (const auto &i : enumerate_monomials(n)) {
            const Eigen::MatrixXcd block = f_block(i, lambda).matrix;
            for (int q = 0; q < lambda.q_dim(); q++) {
                for (int qp = 0; qp < lambda.q_dim(); qp++) {
                    worst = std::max(worst, std::abs(block(q, qp) - states[q].dot(basis.at(i).matrix * states[qp])));
                }
            }
        }
    }
    return worst;
}

double gse_error(int n, std::mt19937_64 &rng) {
    double worst = 0.0;
    for (int s = 0; s < 5; s++) {
        const auto h = sampling::random_operator(n, 5, rng);
        const double dense_e = dense::exact_gse(h);
        worst = std::max(worst, std::abs(gse_regular(h) - dense_e));
        worst = std::max(worst, std::abs(ground_state(h).energy - dense_e));
    }
    return worst;
}

double dynamics_error(int n, std::mt19937_64 &rng) {
    double worst = 0.0;
    for (int s = 0; s < 3; s++) {
        const auto h = sampling::random_operator(n, 5, rng);
        const auto o = sampling::random_operator(n, 3, rng);
        const auto rho = sampling::random_state(n, rng);
        const auto rho_dense = dense::embed_block_state(rho);
        for (double t : {0.0, 0.4, 1.3}) {
            worst = std::max(worst, std::abs(expectation(o, evolution_from_hamiltonian(h, t), rho) -
                                             dense::exact_expectation(o, h, t, rho_dense)));
        }
    }
    return worst;
}

double twirl_error(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    const Eigen::Index dim = Eigen::Index{1} << n;
    dense::DenseOperator m = dense::DenseOperator::zero(n);
    for (Eigen::Index r = 0; r < dim; r++) {
        for (Eigen::Index c = 0; c < dim; c++) {
            m.matrix(r, c) = std::complex<double>(g(rng), g(rng));
        }
    }
    const auto once = dense::reynolds_twirl(m);
    const auto twice = dense::reynolds_twirl(once);
    return std::max(dense::decompose_invariant(once).residual, (once.matrix - twice.matrix).cwiseAbs().maxCoeff());
}

// 1 - cosine between the symmetrized tableau seed and the Schur state.
double young_error(int n) {
    double worst = 0.0;
    for (const auto &lambda : enumerate_irreps(n)) {
        const Eigen::MatrixXcd pi = dense::young_symmetrizer(lambda).matrix;
        for (int q = 0; q < lambda.q_dim(); q++) {
            const Eigen::VectorXcd image = pi * dense::tableau_seed_state(lambda, q).vector;
            const Eigen::VectorXcd target = dense::dense_schur_state(lambda, q).vector;
            worst = std::max(worst, 1.0 - std::abs(image.dot(target)) / (image.norm() * target.norm()));
        }
    }
    return worst;
}

}  // namespace

RunOutcome verify(int max_n, std::ostream &log) {
    std::mt19937_64 rng(20260101);
    json checks = json::array();
    bool all = true;
    auto record = [&](const Check &c, int n) {
        const bool pass = std::isfinite(c.error) && c.error <= c.tolerance;
        all = all && pass;
        log << (pass ? "PASS" : "FAIL") << "  n=" << n << "  " << c.name << "  error=" << c.error
            << "  tolerance=" << c.tolerance << "\n";
        checks.push_back({{"n", n}, {"check", c.name}, {"error", c.error}, {"tolerance", c.tolerance}, {"pass", pass}});
    };
    for (int n = 1; n <= max_n; n++) {
        double dims = 0.0;
        double dim_sum = 0.0;
        for (const auto &lambda : enumerate_irreps(n)) {
            dims += static_cast<double>(lambda.q_dim()) * lambda.q_dim();
            dim_sum += irrep_multiplicity(lambda).get_d() * lambda.q_dim();
        }
        record({"dimension_identity", std::abs(dims - static_cast<double>(monomial_count(n))) +
                                          std::abs(dim_sum - std::ldexp(1.0, n)),
                0.0},
               n);
        record({"structure_constants", structure_error(n, rng), 1e-10}, n);
        record({"f_elements", f_error(n), 1e-10}, n);
        record({"ground_state_energy", gse_error(n, rng), 1e-8}, n);
        record({"dynamics", dynamics_error(n, rng), 1e-8}, n);
        if (n <= dense::limits().group_max_n) {
            record({"twirl_membership", twirl_error(n, rng), 1e-9}, n);
            record({"young_symmetrizer", young_error(n), 1e-10}, n);
        }
    }
    json doc = {{"command", "verify"}, {"max_n", max_n}, {"all_passed", all}, {"checks", std::move(checks)}};
    return {std::move(doc), all ? 0 : 2};
}

}  // namespace symsim::cli

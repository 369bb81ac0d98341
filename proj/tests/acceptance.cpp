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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Every reference value comes from the dense oracle or a closed form
// that does not go through the monomial/Schur code paths.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "symsim/cli.hpp"
#include "symsim/combinatorics.hpp"
#include "symsim/io.hpp"
#include "symsim/oracle.hpp"
#include "symsim/sampling.hpp"

using namespace symsim;
using cplx = std::complex<double>;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char *format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Verdict dimension_law() {
    for (int n = 1; n <= 30; n++) {
        const mpz_class expected = binomial(n + 3, 3);
        mpz_class squares = 0;
        mpz_class total = 0;
        for (const auto &lambda : enumerate_irreps(n)) {
            squares += mpz_class(lambda.q_dim()) * lambda.q_dim();
            total += irrep_multiplicity(lambda) * lambda.q_dim();
        }
        if (mpz_class(static_cast<unsigned long>(monomial_count(n))) != expected ||
            mpz_class(static_cast<unsigned long>(enumerate_monomials(n).size())) != expected || squares != expected ||
            total != mpz_class(1) << n) {
            return {false, "mismatch at n=" + std::to_string(n)};
        }
    }
    return {true, "n=1..30 exact; C(33,3)=5456"};
}

Verdict structure_constants() {
    double worst = 0.0;
    std::size_t checked = 0;
    for (int n = 1; n <= 4; n++) {
        const dense::DenseBasis basis(n);
        for (const auto &i : basis.monomials()) {
            for (const auto &j : basis.monomials()) {
                const dense::DenseOperator product{n, basis.at(i).matrix * basis.at(j).matrix};
                const auto d = dense::decompose_invariant(product, basis);
                ComplexExpansion row(n);
                for (const auto &e : structure_row(i, j)) {
                    row.add(e.k, e.value);
                }
                for (const auto &k : basis.monomials()) {
                    worst = std::max(worst, std::abs(d.coefficients.coefficient(k) - row.coefficient(k)));
                }
                worst = std::max(worst, d.residual);
                checked++;
            }
        }
    }
    std::mt19937_64 rng(101);
    for (int n = 5; n <= 6; n++) {
        const dense::DenseBasis basis(n);
        const double dim = std::ldexp(1.0, n);
        for (int s = 0; s < 200; s++) {
            const auto i = sampling::random_monomial(n, rng);
            const auto j = sampling::random_monomial(n, rng);
            // Half of the k are drawn from the true support so non-zero
            // constants are exercised, not only zeros.
            MonomialIndex k = sampling::random_monomial(n, rng);
            const auto row = structure_row(i, j);
            if (s % 2 == 0 && !row.empty()) {
                k = row[static_cast<std::size_t>(s / 2) % row.size()].k;
            }
            const Eigen::MatrixXcd product = basis.at(i).matrix * basis.at(j).matrix;
            const cplx expected = (basis.at(k).matrix.adjoint() * product).trace() / (class_size_double(k) * dim);
            worst = std::max(worst, std::abs(structure_constant(i, j, k) - expected));
            checked++;
        }
    }
    return {worst <= 1e-10, fmt("%.0f products/triples, max error %.2e (tol 1e-10)", double(checked), worst)};
}

Verdict f_elements() {
    double worst = 0.0;
    std::size_t checked = 0;
    for (int n = 1; n <= 6; n++) {
        const dense::DenseBasis basis(n);
        for (const auto &lambda : enumerate_irreps(n)) {
            std::vector<Eigen::VectorXcd> states;
            for (int q = 0; q < lambda.q_dim(); q++) {
                states.push_back(dense::dense_schur_state(lambda, q).vector);
            }
            for (const auto &i : basis.monomials()) {
                for (int q = 0; q < lambda.q_dim(); q++) {
                    for (int qp = 0; qp < lambda.q_dim(); qp++) {
                        const cplx expected = states[q].dot(basis.at(i).matrix * states[qp]);
                        worst = std::max(worst, std::abs(f_element(i, lambda, q, qp) - expected));
                        checked++;
                    }
                }
            }
        }
    }
    const double singlet = std::abs(f_element({0, 2, 0, 0}, {1, 1}, 0, 0) - cplx(-1.0));
    const double triplet = std::max(std::abs(f_element({1, 1, 0, 0}, {2, 0}, 0, 1) - cplx(std::sqrt(2.0))),
                                    std::abs(f_element({1, 1, 0, 0}, {2, 0}, 1, 2) - cplx(std::sqrt(2.0))));
    worst = std::max({worst, singlet, triplet});
    return {worst <= 1e-10,
            fmt("%.0f elements n<=6, max error %.2e; singlet XX=-1 err %.1e", double(checked), worst, singlet) +
                fmt(", triplet sqrt2 err %.1e", triplet)};
}

Verdict three_way_gse() {
    std::mt19937_64 rng(202);
    double worst = 0.0;
    for (int n = 2; n <= 8; n++) {
        for (int s = 0; s < 50; s++) {
            const auto h = sampling::random_operator(n, 5, rng);
            const double regular = gse_regular(h);
            const double blocks = ground_state(h).energy;
            const double exact = dense::exact_gse(h);
            worst = std::max({worst, std::abs(regular - blocks), std::abs(regular - exact), std::abs(blocks - exact)});
        }
    }
    return {worst <= 1e-8, fmt("350 Hamiltonians n=2..8, max pairwise gap %.2e (tol 1e-8)", worst)};
}

// (4 S(S+1) - 3n) / 2 minimized over S = n/2 - l, l = 0..n/2.
std::pair<double, int> casimir_minimum(int n) {
    double best = 0.0;
    int best_l = -1;
    for (int l = 0; 2 * l <= n; l++) {
        const double s = n / 2.0 - l;
        const double e = (4.0 * s * (s + 1.0) - 3.0 * n) / 2.0;
        if (best_l < 0 || e < best - 1e-12) {
            best = e;
            best_l = l;
        }
    }
    return {best, best_l};
}

Verdict heisenberg_ladder() {
    std::ostringstream detail;
    bool pass = true;
    for (int n : {3, 4}) {
        const auto [expected, l] = casimir_minimum(n);
        const auto gs = ground_state(heisenberg(n));
        pass = pass && std::abs(gs.energy - expected) <= 1e-10 && gs.lambda_min.lambda1 == l &&
               std::abs(dense::exact_gse(heisenberg(n)) - expected) <= 1e-10;
        detail << "n=" << n << ": " << gs.energy << " at " << gs.lambda_min.str() << "; ";
    }
    const auto start = Clock::now();
    const std::string text = io::dump({{"n", 50}, {"terms", io::terms_to_json(heisenberg(50))}});
    const auto doc = cli::run("gse", cli::parse_spec(text), cli::Options{}).document;
    const double elapsed = seconds_since(start);
    const double energy = doc["results"]["energy"].get<double>();
    const auto [expected50, l50] = casimir_minimum(50);
    pass = pass && expected50 == -75.0 && std::abs(energy - expected50) <= 1e-8 &&
           doc["results"]["lambda1"].get<int>() == l50 && elapsed <= 60.0;
    detail << "n=50: " << energy << " in " << elapsed << " s (limit 60 s)";
    return {pass, detail.str()};
}

Verdict ground_state_residual() {
    std::mt19937_64 rng(303);
    double worst = 0.0;
    std::size_t checked = 0;
    for (int n = 1; n <= 8; n++) {
        std::vector<SymmetricOperator> hs;
        if (n >= 2) {
            hs.push_back(heisenberg(n));
        }
        for (int s = 0; s < 10; s++) {
            hs.push_back(sampling::random_operator(n, 5, rng));
        }
        for (const auto &h : hs) {
            const auto gs = ground_state(h);
            const Eigen::VectorXcd psi = dense::embed_schur_vector(gs.lambda_min, gs.amplitudes).vector;
            const Eigen::MatrixXcd dense_h = dense::dense_operator(h).matrix;
            worst = std::max(worst, (dense_h * psi - gs.energy * psi).norm());
            checked++;
        }
    }
    return {worst <= 1e-8, fmt("%.0f Hamiltonians n=1..8, max ||H psi - E psi|| %.2e (tol 1e-8)", double(checked), worst)};
}

Verdict twirl_membership() {
    std::mt19937_64 rng(404);
    std::normal_distribution<double> g;
    double residual = 0.0;
    double idempotence = 0.0;
    for (int n = 1; n <= 6; n++) {
        const Eigen::Index dim = Eigen::Index{1} << n;
        for (int s = 0; s < 20; s++) {
            dense::DenseOperator m = dense::DenseOperator::zero(n);
            for (Eigen::Index r = 0; r < dim; r++) {
                for (Eigen::Index c = 0; c < dim; c++) {
                    m.matrix(r, c) = cplx(g(rng), g(rng));
                }
            }
            const auto once = dense::reynolds_twirl(m);
            const auto twice = dense::reynolds_twirl(once);
            residual = std::max(residual, dense::decompose_invariant(once).residual);
            idempotence = std::max(idempotence, (twice.matrix - once.matrix).norm());
        }
    }
    return {residual <= 1e-9 && idempotence <= 1e-10,
            fmt("120 operators n=1..6, residual %.2e (tol 1e-9), idempotence %.2e (tol 1e-10)", residual,
                idempotence)};
}

Verdict dynamics() {
    std::mt19937_64 rng(505);
    double worst = 0.0;
    double drift = 0.0;
    for (int n = 1; n <= 8; n++) {
        for (int s = 0; s < 3; s++) {
            const auto h = sampling::random_operator(n, 5, rng);
            const auto o = sampling::random_operator(n, 4, rng);
            const auto rho = sampling::random_state(n, rng);
            const auto rho_dense = dense::embed_block_state(rho);
            const auto identity = BlockOperator::identity(n);
            const double e0 = expectation(h, identity, rho);
            for (int k = 0; k < 10; k++) {
                const double t = 0.35 * k;
                const auto u = evolution_from_hamiltonian(h, t);
                worst = std::max(worst, std::abs(expectation(o, u, rho) - dense::exact_expectation(o, h, t, rho_dense)));
                drift = std::max(drift, std::abs(expectation(h, u, rho) - e0));
            }
        }
    }
    return {worst <= 1e-8 && drift <= 1e-9,
            fmt("n=1..8, 10-point grid t=0..3.15, max gap %.2e (tol 1e-8), energy drift %.2e (tol 1e-9)", worst,
                drift)};
}

Verdict young_symmetrizer() {
    double worst = 1.0;
    std::size_t checked = 0;
    for (int n = 1; n <= 6; n++) {
        for (const auto &lambda : enumerate_irreps(n)) {
            const Eigen::MatrixXcd pi = dense::young_symmetrizer(lambda).matrix;
            for (int q = 0; q < lambda.q_dim(); q++) {
                const Eigen::VectorXcd image = pi * dense::tableau_seed_state(lambda, q).vector;
                const Eigen::VectorXcd target = dense::dense_schur_state(lambda, q).vector;
                worst = std::min(worst, std::abs(image.dot(target)) / (image.norm() * target.norm()));
                checked++;
            }
        }
    }
    return {worst >= 1.0 - 1e-10, fmt("%.0f (lambda, q) pairs n=1..6, min cosine 1 - %.2e", double(checked), 1.0 - worst)};
}

Verdict scaling_smoke() {
    SymmetricOperator h(100);
    h.add({98, 2, 0, 0}, -1.0);
    h.add({98, 0, 0, 2}, 0.5);
    h.add({98, 1, 1, 0}, 0.25);
    const std::string text = io::dump({{"n", 100}, {"terms", io::terms_to_json(h)}});
    cli::Options options;
    options.method = "blocks";
    double elapsed[2];
    io::json results[2];
    for (int r = 0; r < 2; r++) {
        const auto start = Clock::now();
        results[r] = cli::run("gse", cli::parse_spec(text), options).document["results"];
        elapsed[r] = seconds_since(start);
    }
    const bool pass = results[0] == results[1] && std::max(elapsed[0], elapsed[1]) <= 120.0 &&
                      std::isfinite(results[0]["energy"].get<double>());
    return {pass, fmt("n=100 energy %.12g, runs %.3f s / %.3f s (limit 120 s), identical results",
                      results[0]["energy"].get<double>(), elapsed[0], elapsed[1])};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria = {
        {"dimension_law", dimension_law},
        {"structure_constants", structure_constants},
        {"f_elements", f_elements},
        {"three_way_gse", three_way_gse},
        {"heisenberg_ladder", heisenberg_ladder},
        {"ground_state_residual", ground_state_residual},
        {"twirl_membership", twirl_membership},
        {"dynamics_equivalence", dynamics},
        {"young_symmetrizer", young_symmetrizer},
        {"scaling_n100", scaling_smoke},
    };
    int failures = 0;
    for (std::size_t c = 0; c < criteria.size(); c++) {
        Verdict v;
        const auto start = Clock::now();
        try {
            v = criteria[c].second();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += v.pass ? 0 : 1;
        std::printf("[%s] %2zu %-22s %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", c + 1, criteria[c].first,
                    v.detail.c_str(), seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

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

#include "symsim/combinatorics.hpp"

#include <stdexcept>

namespace symsim {

Factorials::Factorials(int max) {
    if (max < 0) {
        throw std::invalid_argument("Factorials: negative bound");
    }
    table_.reserve(static_cast<size_t>(max) + 1);
    table_.emplace_back(1);
    for (int k = 1; k <= max; k++) {
        table_.push_back(table_.back() * k);
    }
}

const mpz_class &Factorials::operator()(int k) const {
    if (k < 0 || k > max()) {
        throw std::out_of_range("Factorials: index out of table range");
    }
    return table_[static_cast<size_t>(k)];
}

mpz_class Factorials::multinomial(int top, std::initializer_list<int> parts) const {
    mpz_class denominator = 1;
    for (int p : parts) {
        denominator *= (*this)(p);
    }
    mpz_class result;
    mpz_divexact(result.get_mpz_t(), (*this)(top).get_mpz_t(), denominator.get_mpz_t());
    return result;
}

mpz_class binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

std::uint64_t binomial_u64(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    std::uint64_t result = 1;
    for (int t = 1; t <= k; t++) {
        // Exact at every step: result * (n-k+t) is divisible by t.
        result = result * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
    }
    return result;
}

void GaussianSum::add(const mpz_class &value, int power) {
    switch (((power % 4) + 4) % 4) {
        case 0:
            re += value;
            break;
        case 1:
            im += value;
            break;
        case 2:
            re -= value;
            break;
        default:
            im -= value;
            break;
    }
}

}  // namespace symsim

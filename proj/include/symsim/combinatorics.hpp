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

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace symsim {

/// Exact factorial table 0!..max!, used for every multinomial in the
/// structure-constant and F-element sums. Immutable after construction, so a
/// single table may be shared by concurrent readers.
class Factorials {
  public:
    explicit Factorials(int max);

    int max() const { return static_cast<int>(table_.size()) - 1; }
    const mpz_class &operator()(int k) const;

    /// top! / (parts[0]! parts[1]! ...). Parts must be non-negative; they are
    /// not required to sum to top (the result is then exact only if divisible).
    mpz_class multinomial(int top, std::initializer_list<int> parts) const;

  private:
    std::vector<mpz_class> table_;
};

/// Exact binomial coefficient; zero outside 0 <= k <= n.
mpz_class binomial(int n, int k);

/// Binomial coefficient as uint64 (n up to ~60 without overflow); used for
/// table sizes where the exact value is known to fit.
std::uint64_t binomial_u64(int n, int k);

/// Gaussian integer accumulator: exact sum of multinomial * i^p terms.
struct GaussianSum {
    mpz_class re = 0;
    mpz_class im = 0;

    /// Adds value * i^power (power taken mod 4).
    void add(const mpz_class &value, int power);
    bool is_zero() const { return re == 0 && im == 0; }
};

}  // namespace symsim

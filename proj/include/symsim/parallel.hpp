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

#include <cstddef>
#include <functional>

namespace symsim {

/// Worker count used by parallel_for. Defaults to the hardware concurrency;
/// values < 1 reset to that default.
void set_num_threads(int threads);
int num_threads();

/// Runs body(k) for k in [0, count). Each index is visited exactly once; the
/// body must only write to state owned by index k so that results (and any
/// reduction the caller performs afterwards in index order) are independent
/// of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

}  // namespace symsim

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUPMATCH_ENGINE_KERNEL_HPP_
#define DUPMATCH_ENGINE_KERNEL_HPP_

#include <cstddef>
#include <vector>

#include "dupmatch/extension.hpp"

namespace dupmatch {

struct KernelRun {
  std::vector<int> matched;  // copy ids, ascending
  std::size_t rounds = 0;
  std::size_t oracle_calls = 0;
};

// Matroid-kernel deferred acceptance. Each round every U vertex proposes
// the greedy-optimal independent subset of its still-available copies, each
// W vertex keeps the greedy-optimal independent subset of what it was
// offered, and every offered-but-unkept copy is removed for good. Stops at
// the first round without removals; the kept copies are the result.
KernelRun run_kernel(const ExtendedInstance& ext);

std::vector<int> solve_kernel(const ExtendedInstance& ext);

}  // namespace dupmatch

#endif  // DUPMATCH_ENGINE_KERNEL_HPP_

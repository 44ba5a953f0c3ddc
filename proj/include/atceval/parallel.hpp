// include/atceval/parallel.hpp

// Copyright 2026  the atceval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ATCEVAL_PARALLEL_HPP_
#define ATCEVAL_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace atceval {

// Batch kernels come in two flavors: a plain serial loop (the reference
// implementation) and an OpenMP loop over independent items. Results are
// written to per-item slots and reduced serially in index order, so the
// parallel path is deterministic regardless of scheduling.
enum class ExecMode { kSerial, kParallel };

namespace detail {

// Runs fn(i) for i in [0, n). In parallel mode the first exception thrown by
// any item is captured and rethrown after the loop completes.
void for_each_index(std::size_t n, ExecMode mode,
                    const std::function<void(std::size_t)> &fn);

}  // namespace detail

}  // namespace atceval

#endif  // ATCEVAL_PARALLEL_HPP_

// Copyright 2026 The epseq Authors
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

#ifndef EPSEQ_PARALLEL_HPP_
#define EPSEQ_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef EPSEQ_HAVE_OPENMP
#include <omp.h>
#endif

namespace epseq {

// Execution policy for the data-parallel sweeps (per-information-set
// shortfalls, per-state rationality checks, per-instance corpus runs).
// Results are written to index-addressed slots and merged in index
// order afterwards, so both policies produce identical output.
enum class ExecPolicy { serial, parallel };

// Runs f(i) for i in [0, n). Exceptions thrown by f are captured and
// rethrown on the calling thread (the first one in arbitrary order;
// callers validate preconditions up front, so sweeps normally cannot
// throw).
template <typename F>
void parallel_for(std::size_t n, ExecPolicy exec, F&& f) {
#ifdef EPSEQ_HAVE_OPENMP
  if (exec == ExecPolicy::parallel && n > 1) {
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace epseq

#endif  // EPSEQ_PARALLEL_HPP_

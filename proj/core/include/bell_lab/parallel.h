// Copyright 2026 The bell_lab Authors
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

#ifndef BELL_LAB_PARALLEL_H
#define BELL_LAB_PARALLEL_H

#include <cstddef>
#include <functional>

namespace bell_lab {

/// Worker count: hardware concurrency, capped by the BELL_LAB_THREADS
/// environment variable when it holds a positive integer.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Callers write
/// results into per-index slots, so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

}  // namespace bell_lab

#endif

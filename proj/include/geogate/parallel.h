// Copyright 2026 The geogate Authors
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

#ifndef GEOGATE_PARALLEL_H_
#define GEOGATE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace geogate {

/// Worker count: GG_THREADS when set to a positive integer, else the configured
/// default, else hardware concurrency.
std::size_t worker_count();

/// Default used when GG_THREADS is unset; 0 restores hardware concurrency.
void set_default_worker_count(std::size_t n);

/// Runs body(i) for i in [0, n) across worker_count() threads. Callers write
/// results by index, so output order never depends on scheduling. The first
/// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace geogate

#endif  // GEOGATE_PARALLEL_H_

// Copyright 2026 The ncycle Authors
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

#ifndef NCYCLE_PARALLEL_HPP_
#define NCYCLE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace ncycle {

/// Upper bound on worker threads used by table builds and transforms.
/// 0 selects std::thread::hardware_concurrency().
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Splits [0, size) into contiguous chunks and runs `body(begin, end)` on
/// each, one chunk per worker. Exceptions from workers are rethrown on the
/// calling thread (the first one wins). Ranges shorter than `min_chunk` per
/// worker run inline.
void parallel_for(std::size_t size,
                  const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 4096);

}  // namespace ncycle

#endif  // NCYCLE_PARALLEL_HPP_

// Copyright 2026 The metroscale Authors
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

namespace metroscale {

/// Worker-pool size: METROSCALE_WORKERS when set to a positive integer,
/// otherwise one worker per hardware thread.
std::size_t default_worker_count();

/// Runs body(i) for i in [0, count) on up to `workers` threads. Bodies must
/// write only to slots owned by their index. If any body throws, the
/// exception with the lowest index is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace metroscale

// Copyright 2026 The vqcompile Authors.
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

#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace vqc {

/// Runs fn(i) for i in [0, count) across worker threads and returns results
/// indexed by i. Output order is independent of scheduling, so reductions
/// over the result stay deterministic.
template <typename T>
std::vector<T> parallel_map(int count, const std::function<T(int)>& fn) {
  std::vector<T> out(count);
  if (count <= 0) return out;
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = static_cast<int>(
      std::min<unsigned>(hw == 0 ? 1 : hw, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        out[i] = fn(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace vqc

// Copyright 2026 The codexgraph Authors.
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

#ifndef CODEXGRAPH_PARALLEL_H_
#define CODEXGRAPH_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace codexgraph {

// Number of worker threads to use for a request of `requested` threads;
// 0 means one per hardware thread.
int ResolveThreadCount(int requested);

// Runs body(block) for every block in [0, num_blocks) on up to `threads`
// workers. Blocks are claimed dynamically, so callers that need
// schedule-independent results must make each block write only its own
// output slot and reduce the slots in block order afterwards.
void ParallelForBlocks(size_t num_blocks, int threads,
                       const std::function<void(size_t)>& body);

}  // namespace codexgraph

#endif  // CODEXGRAPH_PARALLEL_H_

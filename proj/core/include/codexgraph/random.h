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

#ifndef CODEXGRAPH_RANDOM_H_
#define CODEXGRAPH_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace codexgraph {

// Seeded generator with platform-independent output. std::mt19937_64 is
// fully specified by the standard, but the std:: distributions are not, so
// the bounded draws are implemented here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t UniformBelow(uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformUnit();

  bool Bernoulli(double p) { return UniformUnit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Child seed for a named stage, e.g. DeriveSeed(seed, "baseline"). Adding a
// new label never changes the seeds of existing ones.
uint64_t DeriveSeed(uint64_t seed, std::string_view label);
uint64_t DeriveSeed(uint64_t seed, std::string_view label, uint64_t index);

// 64-bit FNV-1a; used for content fingerprints and config hashes.
uint64_t Fnv1a64(std::string_view bytes);

}  // namespace codexgraph

#endif  // CODEXGRAPH_RANDOM_H_

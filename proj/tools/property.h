// Copyright 2026 The signedva Authors
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

#ifndef SIGNEDVA_TOOLS_PROPERTY_H_
#define SIGNEDVA_TOOLS_PROPERTY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace signedva::tools {

enum class Suite { kSwitching, kAllPositive, kTriangulation, kK5, kWagner };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct InstanceOutcome {
  std::uint64_t seed = 0;
  bool passed = false;
  std::string summary;  // e.g. "n=7 m=12 va=2"
  std::string failure;  // empty on success
  std::string dump;     // replayable JSON, filled on failure only
};

// One generated instance of the suite, fully determined by the seed.
InstanceOutcome run_instance(Suite suite, std::uint64_t seed);

// Instance seeds are drawn from an mt19937_64 seeded with `seed`, so the
// outcome list does not depend on `threads`.
std::vector<std::uint64_t> instance_seeds(std::uint64_t seed, int count);

struct SuiteReport {
  Suite suite = Suite::kSwitching;
  std::uint64_t seed = 0;
  std::vector<InstanceOutcome> instances;
  double seconds = 0;

  int passed() const;
  int failed() const { return static_cast<int>(instances.size()) - passed(); }
};

SuiteReport run_suite(Suite suite, int count, std::uint64_t seed,
                      int threads = 1);

}  // namespace signedva::tools

#endif  // SIGNEDVA_TOOLS_PROPERTY_H_

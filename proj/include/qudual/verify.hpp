// Copyright 2026 The Qudual Authors.
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

// Self-check suite over one (d, n) system. Each check records the measured
// quantity, the threshold it is held to and whether it passed, so the
// report doubles as a machine-readable audit of the library's identities.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qudual/io.hpp"

namespace qudual::verify {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Oracle-backed checks (dense d^n x d^n matrices) run only up to this size.
inline constexpr std::size_t kDenseCheckCap = 1024;

enum class Comparison { Less, Greater, Equal };

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::Less;
  bool passed = false;
  bool skipped = false;
  std::string note;
};

struct Report {
  int d;
  int n;
  std::uint64_t seed;
  std::vector<Check> checks;

  /// True iff every non-skipped check passed.
  bool passed() const;
};

Report run(int d, int n, std::uint64_t seed = kDefaultSeed);

io::Json to_json(const Report& r);

}  // namespace qudual::verify

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

// Payload builders shared by the C API and the command-line tool.

#pragma once

#include "qudual/io.hpp"

namespace qudual::commands {

/// expect_q, expect_k, per-qudit k distributions, entropies and primality
/// of d. k-rep inputs are transformed first; "input_rep" records the tag the
/// state arrived with.
io::Json analyze(const StateVector& s);

/// Runs the functional-creation circuit on handlers (x) |sources> (x) |0>
/// and reports the full output state plus the holder's distribution.
/// Handler amplitudes are used as stored whatever their representation tag.
io::Json functional(const StateVector& handlers, const DigitLabel& sources);

}  // namespace qudual::commands

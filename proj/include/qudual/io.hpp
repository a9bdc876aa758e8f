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

// JSON wire formats for states, circuits, partitions and entropy reports.
//
// Output is deterministic: object keys keep insertion order and every double
// is printed with 17 significant digits, so identical inputs give
// byte-identical documents.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qudual/analysis.hpp"
#include "qudual/gates.hpp"
#include "qudual/statevector.hpp"

namespace qudual::io {

using Json = nlohmann::ordered_json;

/// Malformed or structurally invalid document. Derives from ValidationError
/// so callers can treat it like a failed state check.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Compact JSON with "%.17g" numbers and a trailing newline.
std::string dump(const Json& doc);

/// Parses text into a Json value; throws ParseError on syntax errors.
Json parse(std::string_view text);

// {"n": int, "d": int, "rep": "q"|"k", "amplitudes": [[re, im], ...]}
Json state_to_json(const StateVector& s);
StateVector state_from_json(const Json& doc);

// {"n": int, "d": int, "gates": [{"kind": ..., ...}, ...]}
Json circuit_to_json(const gates::Circuit& c);
gates::Circuit circuit_from_json(const Json& doc);

// {"k": [digits], "classes": [["00", "10", ...], ...]}
Json partition_to_json(const analysis::Partition& p);

// {"h_q": x, "h_k": y, "sum": z, "log_base": "e" | base}
Json entropy_to_json(const analysis::EntropyReport& r);

Json complex_to_json(Complex z);

}  // namespace qudual::io

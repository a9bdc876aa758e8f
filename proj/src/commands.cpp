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

#include "qudual/commands.hpp"

#include "qudual/duality.hpp"

namespace qudual::commands {

io::Json analyze(const StateVector& s) {
  const StateVector psi = duality::to_rep(s, Representation::Q);
  const auto& sys = psi.system();
  io::Json doc;
  doc["n"] = sys.qudits();
  doc["d"] = sys.levels();
  doc["is_prime"] = is_prime(sys.levels());
  doc["input_rep"] = std::string(to_string(s.rep()));
  doc["transformed"] = s.rep() != Representation::Q;
  doc["expect_q"] = analysis::expect_q(psi);
  doc["expect_k"] = analysis::expect_k(psi);
  doc["k_distributions"] = analysis::k_distributions(psi);
  doc["entropy"] = io::entropy_to_json(analysis::entropies(psi));
  return doc;
}

io::Json functional(const StateVector& handlers, const DigitLabel& sources) {
  const int m = handlers.system().qudits();
  const auto built = gates::build_functional_circuit(m, handlers.system().levels());
  // A k-tagged handler file carries the functional's coefficients b_k; they
  // are loaded unchanged as basis amplitudes of the handler qudits.
  const StateVector prepared =
      handlers.rep() == Representation::Q
          ? handlers
          : detail::adopt(handlers.system(), Representation::Q,
                          {handlers.amplitudes().begin(), handlers.amplitudes().end()});
  const auto out =
      gates::run_circuit(built.circuit, gates::functional_input(prepared, sources));
  io::Json layout;
  layout["handler_wires"] = built.layout.handler_wires;
  layout["source_wires"] = built.layout.source_wires;
  layout["holder_wire"] = built.layout.holder_wire;
  io::Json doc;
  doc["layout"] = std::move(layout);
  doc["state"] = io::state_to_json(out);
  doc["holder_probabilities"] = marginal(out, built.layout.holder_wire);
  return doc;
}

}  // namespace qudual::commands

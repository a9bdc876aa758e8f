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

// Structured qudit gates and circuits.
//
// Translations, controlled-adds and doubly-controlled-adds are permutations
// of the computational basis and are applied as index arithmetic in O(d^n);
// no gate matrix is ever built outside circuit_unitary_oracle.

#pragma once

#include <variant>
#include <vector>

#include "qudual/group.hpp"
#include "qudual/matrix.hpp"
#include "qudual/statevector.hpp"

namespace qudual::gates {

/// |c> -> |c + amount mod d> on `target`.
struct Translation {
  int target;
  int amount;
};

/// q_target += multiplier * q_control (mod d).
struct ControlledAdd {
  int control;
  int target;
  int multiplier;
};

/// q_target += q_k_control * q_j_control (mod d).
struct DoublyControlledAdd {
  int k_control;
  int j_control;
  int target;
};

/// Arbitrary d x d unitary on one qudit.
struct SingleQuditUnitary {
  int target;
  CMatrix matrix;
};

using GateDescriptor =
    std::variant<Translation, ControlledAdd, DoublyControlledAdd,
                 SingleQuditUnitary>;

/// Throws InvalidArgument on a wire out of range, duplicate wires, an amount
/// or multiplier outside [0, d), or a non-unitary / mis-sized matrix.
void validate_gate(const GateDescriptor& gate, const QuditSystem& system);

/// Ordered gate list over a fixed system. Every appended gate is validated.
class Circuit {
 public:
  explicit Circuit(QuditSystem system) : system_(system) {}
  Circuit(QuditSystem system, std::vector<GateDescriptor> gates);

  Circuit& append(GateDescriptor gate);

  const QuditSystem& system() const noexcept { return system_; }
  const std::vector<GateDescriptor>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

 private:
  QuditSystem system_;
  std::vector<GateDescriptor> gates_;
};

/// Entry (r, c) = 1 iff r = (c + a) mod d.
CMatrix translation_gate_matrix(int d, int a);

StateVector apply_translation(const StateVector& s, int target, int amount);
StateVector apply_controlled_add(const StateVector& s, int control, int target,
                                 int multiplier);
StateVector apply_doubly_controlled_add(const StateVector& s, int k_control,
                                        int j_control, int target);
StateVector apply_gate(const StateVector& s, const GateDescriptor& gate);

/// Applies the gates in order. The state must be q-rep over circuit.system().
StateVector run_circuit(const Circuit& c, const StateVector& s);

/// Gate-reversed adjoint circuit, so run_circuit(inverse(c), run_circuit(c, s))
/// reproduces s. A doubly-controlled add has no multiplier field and is
/// inverted by d-1 repetitions.
Circuit inverse(const Circuit& c);

/// Dense unitary of the whole circuit, column i = run_circuit(c, e_i).
/// Limited to d^n <= 4096.
CMatrix circuit_unitary_oracle(const Circuit& c);

/// Wire roles of the functional-creation circuit over 2m+1 qudits.
struct FunctionalCircuitLayout {
  std::vector<int> source_wires;
  std::vector<int> handler_wires;
  int holder_wire;
};

struct FunctionalCircuit {
  Circuit circuit;
  FunctionalCircuitLayout layout;
};

/// Handlers on wires [0, m), sources on [m, 2m), holder on wire 2m; gate l
/// adds handler_l * source_l to the holder. With handlers prepared in
/// sum_k b_k |k>, sources in |q> and the holder in |0>, the result is
/// sum_k b_k |k>|q>|k.q mod d>.
FunctionalCircuit build_functional_circuit(int m, int d);

/// handlers (x) |sources> (x) |0>, the input the layout above expects.
StateVector functional_input(const StateVector& handlers,
                             const DigitLabel& sources);

}  // namespace qudual::gates

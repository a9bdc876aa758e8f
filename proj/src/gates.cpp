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

#include "qudual/gates.hpp"

#include <algorithm>
#include <string>

namespace qudual::gates {

namespace {

void check_wire(int wire, const QuditSystem& system) {
  if (wire < 0 || wire >= system.qudits()) {
    throw InvalidArgument("wire " + std::to_string(wire) + " out of range [0, " +
                          std::to_string(system.qudits()) + ")");
  }
}

void check_digit(int v, int d, const char* what) {
  if (v < 0 || v >= d) {
    throw InvalidArgument(std::string(what) + " " + std::to_string(v) +
                          " outside [0, " + std::to_string(d) + ")");
  }
}

void check_distinct(std::initializer_list<int> wires) {
  std::vector<int> w(wires);
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end()) {
    throw InvalidArgument("gate wires must be distinct");
  }
}

void require_q_rep(const StateVector& s) {
  if (s.rep() != Representation::Q) {
    throw Mismatch("gates act on q-representation states");
  }
}

// out[f(i)] = in[i] where f rewrites only the target digit.
template <typename NewDigit>
StateVector permute_target(const StateVector& s, int target, NewDigit&& next) {
  const auto& sys = s.system();
  const int d = sys.levels();
  const std::size_t t_stride = sys.stride(target);
  const auto in = s.amplitudes();
  std::vector<Complex> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const int old_digit = digit_at(i, t_stride, d);
    const int new_digit = next(i);
    out[i - old_digit * t_stride + new_digit * t_stride] = in[i];
  }
  return detail::adopt(sys, s.rep(), std::move(out));
}

}  // namespace

void validate_gate(const GateDescriptor& gate, const QuditSystem& system) {
  const int d = system.levels();
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Translation>) {
          check_wire(g.target, system);
          check_digit(g.amount, d, "translation amount");
        } else if constexpr (std::is_same_v<T, ControlledAdd>) {
          check_wire(g.control, system);
          check_wire(g.target, system);
          check_distinct({g.control, g.target});
          check_digit(g.multiplier, d, "multiplier");
        } else if constexpr (std::is_same_v<T, DoublyControlledAdd>) {
          check_wire(g.k_control, system);
          check_wire(g.j_control, system);
          check_wire(g.target, system);
          check_distinct({g.k_control, g.j_control, g.target});
        } else {
          check_wire(g.target, system);
          const auto ud = static_cast<std::size_t>(d);
          if (g.matrix.rows() != ud || g.matrix.cols() != ud) {
            throw InvalidArgument("unitary gate must be " + std::to_string(d) +
                                  "x" + std::to_string(d));
          }
          if (unitarity_error(g.matrix) > 1e-10) {
            throw InvalidArgument("unitary gate matrix is not unitary");
          }
        }
      },
      gate);
}

Circuit::Circuit(QuditSystem system, std::vector<GateDescriptor> gates)
    : system_(system) {
  gates_.reserve(gates.size());
  for (auto& g : gates) append(std::move(g));
}

Circuit& Circuit::append(GateDescriptor gate) {
  validate_gate(gate, system_);
  gates_.push_back(std::move(gate));
  return *this;
}

CMatrix translation_gate_matrix(int d, int a) {
  if (d < 2) throw InvalidArgument("translation needs d >= 2");
  check_digit(a, d, "translation amount");
  const auto ud = static_cast<std::size_t>(d);
  CMatrix m(ud, ud);
  for (std::size_t c = 0; c < ud; ++c) m((c + a) % ud, c) = 1.0;
  return m;
}

StateVector apply_translation(const StateVector& s, int target, int amount) {
  require_q_rep(s);
  validate_gate(Translation{target, amount}, s.system());
  const int d = s.system().levels();
  const std::size_t stride = s.system().stride(target);
  return permute_target(s, target, [&](std::size_t i) {
    return (digit_at(i, stride, d) + amount) % d;
  });
}

StateVector apply_controlled_add(const StateVector& s, int control, int target,
                                 int multiplier) {
  require_q_rep(s);
  validate_gate(ControlledAdd{control, target, multiplier}, s.system());
  const int d = s.system().levels();
  const std::size_t c_stride = s.system().stride(control);
  const std::size_t t_stride = s.system().stride(target);
  return permute_target(s, target, [&](std::size_t i) {
    const long long add =
        static_cast<long long>(multiplier) * digit_at(i, c_stride, d);
    return static_cast<int>((digit_at(i, t_stride, d) + add) % d);
  });
}

StateVector apply_doubly_controlled_add(const StateVector& s, int k_control,
                                        int j_control, int target) {
  require_q_rep(s);
  validate_gate(DoublyControlledAdd{k_control, j_control, target}, s.system());
  const int d = s.system().levels();
  const std::size_t k_stride = s.system().stride(k_control);
  const std::size_t j_stride = s.system().stride(j_control);
  const std::size_t t_stride = s.system().stride(target);
  return permute_target(s, target, [&](std::size_t i) {
    const long long add = static_cast<long long>(digit_at(i, k_stride, d)) *
                          digit_at(i, j_stride, d);
    return static_cast<int>((digit_at(i, t_stride, d) + add) % d);
  });
}

StateVector apply_gate(const StateVector& s, const GateDescriptor& gate) {
  return std::visit(
      [&](const auto& g) -> StateVector {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Translation>) {
          return apply_translation(s, g.target, g.amount);
        } else if constexpr (std::is_same_v<T, ControlledAdd>) {
          return apply_controlled_add(s, g.control, g.target, g.multiplier);
        } else if constexpr (std::is_same_v<T, DoublyControlledAdd>) {
          return apply_doubly_controlled_add(s, g.k_control, g.j_control,
                                             g.target);
        } else {
          require_q_rep(s);
          return apply_single_qudit_unitary(s, g.target, g.matrix);
        }
      },
      gate);
}

StateVector run_circuit(const Circuit& c, const StateVector& s) {
  if (c.system() != s.system()) {
    throw Mismatch("state and circuit are over different qudit systems");
  }
  require_q_rep(s);
  StateVector out = s;
  for (const auto& g : c.gates()) out = apply_gate(out, g);
  return out;
}

Circuit inverse(const Circuit& c) {
  const int d = c.system().levels();
  Circuit inv(c.system());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, Translation>) {
            inv.append(Translation{g.target, (d - g.amount) % d});
          } else if constexpr (std::is_same_v<T, ControlledAdd>) {
            inv.append(ControlledAdd{g.control, g.target, (d - g.multiplier) % d});
          } else if constexpr (std::is_same_v<T, DoublyControlledAdd>) {
            for (int r = 0; r < d - 1; ++r) inv.append(g);
          } else {
            inv.append(SingleQuditUnitary{g.target, g.matrix.adjoint()});
          }
        },
        *it);
  }
  return inv;
}

CMatrix circuit_unitary_oracle(const Circuit& c) {
  const auto& sys = c.system();
  if (sys.dim() > 4096) {
    throw InvalidArgument("circuit oracle limited to d^n <= 4096, got " +
                          std::to_string(sys.dim()));
  }
  CMatrix u(sys.dim(), sys.dim());
  for (std::size_t col = 0; col < sys.dim(); ++col) {
    const auto out = run_circuit(
        c, StateVector::basis_state(index_to_label(col, sys), Representation::Q));
    for (std::size_t row = 0; row < sys.dim(); ++row) {
      u(row, col) = out.amplitudes()[row];
    }
  }
  return u;
}

FunctionalCircuit build_functional_circuit(int m, int d) {
  if (m < 1) throw InvalidArgument("functional circuit needs m >= 1");
  FunctionalCircuitLayout layout{{}, {}, 2 * m};
  for (int l = 0; l < m; ++l) {
    layout.handler_wires.push_back(l);
    layout.source_wires.push_back(m + l);
  }
  Circuit circuit(QuditSystem(2 * m + 1, d));
  for (int l = 0; l < m; ++l) {
    circuit.append(DoublyControlledAdd{layout.handler_wires[l],
                                       layout.source_wires[l],
                                       layout.holder_wire});
  }
  return {std::move(circuit), std::move(layout)};
}

StateVector functional_input(const StateVector& handlers,
                             const DigitLabel& sources) {
  require_q_rep(handlers);
  const auto& hs = handlers.system();
  if (sources.system().levels() != hs.levels() ||
      sources.system().qudits() != hs.qudits()) {
    throw Mismatch("handler state has " + std::to_string(hs.qudits()) +
                   " qudits of dimension " + std::to_string(hs.levels()) +
                   " but sources have " +
                   std::to_string(sources.system().qudits()) +
                   " digits of dimension " +
                   std::to_string(sources.system().levels()));
  }
  const auto src = StateVector::basis_state(sources, Representation::Q);
  const auto holder = StateVector::basis_state(
      DigitLabel::zero(QuditSystem(1, hs.levels())), Representation::Q);
  return tensor_product(tensor_product(handlers, src), holder);
}

}  // namespace qudual::gates

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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qudual/duality.hpp"
#include "qudual/gates.hpp"

using qudual::CMatrix;
using qudual::Complex;
using qudual::DigitLabel;
using qudual::QuditSystem;
using qudual::Representation;
using qudual::StateVector;
namespace gates = qudual::gates;

namespace {

StateVector ket(int d, std::vector<int> digits) {
  const int n = static_cast<int>(digits.size());
  return StateVector::basis_state(DigitLabel(QuditSystem(n, d), std::move(digits)),
                                  Representation::Q);
}

std::vector<Complex> vec(const StateVector& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

CMatrix from_ints(const std::vector<std::vector<int>>& rows) {
  CMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

CMatrix random_unitary(int d, std::mt19937_64& rng) {
  // Columns of the d-point Fourier matrix, scrambled by random phases.
  std::uniform_real_distribution<double> turn(0.0, 1.0);
  auto f = qudual::duality::single_qudit_fourier(d).entries;
  for (int r = 0; r < d; ++r) {
    const Complex p = oracle::phase(turn(rng));
    for (int c = 0; c < d; ++c) f(r, c) *= p;
  }
  return f;
}

}  // namespace

TEST_CASE("translation matrices match the printed qutrit shifts") {
  CHECK(qudual::max_abs_diff(gates::translation_gate_matrix(3, 1),
                             from_ints({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})) == 0.0);
  CHECK(qudual::max_abs_diff(gates::translation_gate_matrix(3, 2),
                             from_ints({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})) == 0.0);
  for (int d = 2; d <= 7; ++d) {
    CHECK(qudual::max_abs_diff(gates::translation_gate_matrix(d, 0), CMatrix::identity(d)) ==
          0.0);
  }
  CHECK_THROWS_AS(gates::translation_gate_matrix(3, 3), qudual::InvalidArgument);
  CHECK_THROWS_AS(gates::translation_gate_matrix(3, -1), qudual::InvalidArgument);
}

TEST_CASE("apply_translation") {
  CHECK(vec(gates::apply_translation(ket(3, {1, 0}), 1, 2)) == vec(ket(3, {1, 2})));
  std::mt19937_64 rng(1);
  const auto psi = random_state(QuditSystem(3, 4), Representation::Q, rng);
  CHECK(vec(gates::apply_translation(psi, 1, 0)) == vec(psi));
  for (int a = 0; a < 4; ++a) {
    const auto back =
        gates::apply_translation(gates::apply_translation(psi, 2, a), 2, (4 - a) % 4);
    CHECK(oracle::max_diff(vec(back), vec(psi)) == 0.0);
  }
  CHECK_THROWS_AS(gates::apply_translation(psi, 3, 1), qudual::InvalidArgument);
  CHECK_THROWS_AS(gates::apply_translation(psi, 0, 4), qudual::InvalidArgument);
  const auto k_state = StateVector::basis_state(DigitLabel(QuditSystem(1, 3), {0}),
                                                Representation::K);
  CHECK_THROWS_AS(gates::apply_translation(k_state, 0, 1), qudual::Mismatch);
}

TEST_CASE("apply_controlled_add") {
  CHECK(vec(gates::apply_controlled_add(ket(3, {1, 0}), 0, 1, 2)) == vec(ket(3, {1, 2})));
  CHECK(vec(gates::apply_controlled_add(ket(3, {2, 1}), 0, 1, 2)) == vec(ket(3, {2, 2})));
  for (std::size_t i = 0; i < 27; ++i) {
    const auto b = StateVector::basis_state(index_to_label(i, QuditSystem(3, 3)),
                                            Representation::Q);
    CHECK(vec(gates::apply_controlled_add(b, 2, 0, 0)) == vec(b));
  }
  CHECK_THROWS_AS(gates::apply_controlled_add(ket(3, {1, 0}), 1, 1, 2),
                  qudual::InvalidArgument);
  CHECK_THROWS_AS(gates::apply_controlled_add(ket(3, {1, 0}), 0, 1, 3),
                  qudual::InvalidArgument);
}

TEST_CASE("apply_doubly_controlled_add") {
  CHECK(vec(gates::apply_doubly_controlled_add(ket(3, {2, 1, 0}), 0, 1, 2)) ==
        vec(ket(3, {2, 1, 2})));
  CHECK(vec(gates::apply_doubly_controlled_add(ket(3, {2, 2, 1}), 0, 1, 2)) ==
        vec(ket(3, {2, 2, 2})));
  for (int j = 0; j < 3; ++j) {
    for (int f = 0; f < 3; ++f) {
      CHECK(vec(gates::apply_doubly_controlled_add(ket(3, {0, j, f}), 0, 1, 2)) ==
            vec(ket(3, {0, j, f})));
    }
  }
  CHECK_THROWS_AS(gates::apply_doubly_controlled_add(ket(3, {2, 1, 0}), 0, 1, 0),
                  qudual::InvalidArgument);
}

TEST_CASE("structured gates equal exhaustive label-arithmetic permutations") {
  std::mt19937_64 rng(9);
  for (auto [n, d] : {std::pair{3, 3}, {3, 4}, {4, 2}, {3, 6}, {6, 3}}) {
    const QuditSystem sys(n, d);
    CAPTURE(n);
    CAPTURE(d);
    const auto psi = random_state(sys, Representation::Q, rng);
    for (int c = 0; c < n; ++c) {
      for (int t = 0; t < n; ++t) {
        if (c == t) continue;
        for (int mult = 0; mult < d; ++mult) {
          const auto expected = oracle::permute(vec(psi), n, d, [&](std::vector<int> q) {
            q[t] = (q[t] + mult * q[c]) % d;
            return q;
          });
          CHECK(vec(gates::apply_controlled_add(psi, c, t, mult)) == expected);
        }
        int other = 0;
        while (other == c || other == t) ++other;
        if (other < n) {
          const auto expected = oracle::permute(vec(psi), n, d, [&](std::vector<int> q) {
            q[t] = (q[t] + q[c] * q[other]) % d;
            return q;
          });
          CHECK(vec(gates::apply_doubly_controlled_add(psi, c, other, t)) == expected);
        }
      }
      const auto expected = oracle::permute(vec(psi), n, d, [&](std::vector<int> q) {
        q[c] = (q[c] + 1) % d;
        return q;
      });
      CHECK(vec(gates::apply_translation(psi, c, 1)) == expected);
    }
  }
}

TEST_CASE("structured gates map basis states to basis states") {
  for (auto [n, d] : {std::pair{3, 3}, {6, 3}, {3, 9}}) {
    const QuditSystem sys(n, d);
    const std::vector<gates::GateDescriptor> list = {
        gates::Translation{0, 1}, gates::ControlledAdd{1, 2, d - 1},
        gates::DoublyControlledAdd{2, 0, 1}};
    std::size_t non_basis = 0;
    for (const auto& g : list) {
      for (std::size_t i = 0; i < sys.dim(); ++i) {
        const auto out = gates::apply_gate(
            StateVector::basis_state(index_to_label(i, sys), Representation::Q), g);
        std::size_t ones = 0;
        for (const auto& a : out.amplitudes()) {
          if (a == Complex(1.0)) {
            ++ones;
          } else if (a != Complex(0.0)) {
            ++non_basis;
          }
        }
        if (ones != 1) ++non_basis;
      }
    }
    CHECK(non_basis == 0);
  }
}

TEST_CASE("circuit validation") {
  const QuditSystem sys(3, 3);
  gates::Circuit c(sys);
  CHECK_THROWS_AS(c.append(gates::Translation{3, 0}), qudual::InvalidArgument);
  CHECK_THROWS_AS(c.append(gates::ControlledAdd{0, 0, 1}), qudual::InvalidArgument);
  CHECK_THROWS_AS(c.append(gates::DoublyControlledAdd{0, 1, 1}), qudual::InvalidArgument);
  CHECK_THROWS_AS(c.append(gates::SingleQuditUnitary{0, CMatrix::identity(2)}),
                  qudual::InvalidArgument);
  CMatrix scaled = CMatrix::identity(3);
  scaled(0, 0) = 1.1;
  CHECK_THROWS_AS(c.append(gates::SingleQuditUnitary{0, scaled}), qudual::InvalidArgument);
  CHECK(c.size() == 0);
  CHECK_THROWS_AS(gates::run_circuit(c, ket(3, {0, 0})), qudual::Mismatch);
}

TEST_CASE("circuit oracle reproduces the qutrit controlled-add block matrix") {
  const auto u = gates::circuit_unitary_oracle(
      gates::Circuit(QuditSystem(2, 3), {gates::ControlledAdd{0, 1, 2}}));
  const CMatrix expected = from_ints({
      {1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 1, 0},
  });
  CHECK(qudual::max_abs_diff(u, expected) == 0.0);
}

TEST_CASE("controlled-add blocks are shifts by multiplier * control value") {
  for (int d = 2; d <= 7; ++d) {
    for (int mult = 0; mult < d; ++mult) {
      const auto u = gates::circuit_unitary_oracle(
          gates::Circuit(QuditSystem(2, d), {gates::ControlledAdd{0, 1, mult}}));
      for (int j = 0; j < d; ++j) {
        const auto block = gates::translation_gate_matrix(d, (mult * j) % d);
        for (int r = 0; r < d * d; ++r) {
          for (int c = 0; c < d * d; ++c) {
            if (r / d != j && c / d != j) continue;
            const bool in_block = r / d == j && c / d == j;
            const Complex want = in_block ? block(r % d, c % d) : Complex(0.0);
            CHECK(u(r, c) == want);
          }
        }
      }
    }
  }
}

TEST_CASE("circuit oracle is unitary and agrees with run_circuit") {
  std::mt19937_64 rng(17);
  const QuditSystem sys(3, 3);
  gates::Circuit c(sys);
  c.append(gates::Translation{0, 2})
      .append(gates::SingleQuditUnitary{1, random_unitary(3, rng)})
      .append(gates::ControlledAdd{1, 2, 2})
      .append(gates::DoublyControlledAdd{0, 1, 2})
      .append(gates::SingleQuditUnitary{2, random_unitary(3, rng)});
  const auto u = gates::circuit_unitary_oracle(c);
  CHECK(qudual::unitarity_error(u) < 1e-11);
  for (int t = 0; t < 20; ++t) {
    const auto psi = random_state(sys, Representation::Q, rng);
    CHECK(oracle::max_diff(vec(gates::run_circuit(c, psi)), u.apply(psi.amplitudes())) <
          1e-12);
  }
  CHECK_THROWS_AS(gates::circuit_unitary_oracle(gates::Circuit(QuditSystem(13, 2))),
                  qudual::InvalidArgument);
}

TEST_CASE("run_circuit: empty circuit, inverse and norm drift over 100 random gates") {
  std::mt19937_64 rng(23);
  for (auto [n, d] : {std::pair{3, 3}, {4, 2}, {3, 6}, {2, 5}}) {
    const QuditSystem sys(n, d);
    const auto psi = random_state(sys, Representation::Q, rng);
    CHECK(vec(gates::run_circuit(gates::Circuit(sys), psi)) == vec(psi));

    std::uniform_int_distribution<int> wire(0, n - 1);
    std::uniform_int_distribution<int> digit(0, d - 1);
    std::uniform_int_distribution<int> kind(0, 3);
    gates::Circuit c(sys);
    while (c.size() < 100) {
      const int a = wire(rng), b = wire(rng), t = wire(rng);
      switch (kind(rng)) {
        case 0: c.append(gates::Translation{a, digit(rng)}); break;
        case 1: c.append(gates::SingleQuditUnitary{a, random_unitary(d, rng)}); break;
        case 2: if (a != b) c.append(gates::ControlledAdd{a, b, digit(rng)}); break;
        default:
          if (a != b && b != t && a != t) c.append(gates::DoublyControlledAdd{a, b, t});
      }
    }
    const auto out = gates::run_circuit(c, psi);
    CHECK(std::abs(out.norm_squared() - 1.0) < 1e-10);
    CHECK(oracle::max_diff(vec(gates::run_circuit(gates::inverse(c), out)), vec(psi)) < 1e-12);
  }
}

TEST_CASE("build_functional_circuit layout") {
  const auto two = gates::build_functional_circuit(2, 3);
  CHECK(two.circuit.size() == 2);
  CHECK(two.circuit.system() == QuditSystem(5, 3));
  CHECK(two.layout.handler_wires == std::vector<int>{0, 1});
  CHECK(two.layout.source_wires == std::vector<int>{2, 3});
  CHECK(two.layout.holder_wire == 4);
  CHECK_THROWS_AS(gates::build_functional_circuit(0, 3), qudual::InvalidArgument);
}

TEST_CASE("functional circuit writes k.q mod d onto the holder") {
  for (int d = 2; d <= 5; ++d) {
    const auto one = gates::build_functional_circuit(1, d);
    for (int k = 0; k < d; ++k) {
      for (int q = 0; q < d; ++q) {
        const auto out = gates::run_circuit(one.circuit, ket(d, {k, q, 0}));
        CHECK(vec(out) == vec(ket(d, {k, q, (k * q) % d})));
      }
    }
  }
  const auto two = gates::build_functional_circuit(2, 3);
  const auto out = gates::run_circuit(two.circuit, ket(3, {2, 1, 1, 2, 0}));
  CHECK(vec(out) == vec(ket(3, {2, 1, 1, 2, 1})));
}

TEST_CASE("functional circuit on superposed handlers is the linear extension") {
  std::mt19937_64 rng(31);
  for (auto [m, d] : {std::pair{2, 3}, {1, 6}, {3, 2}, {2, 4}}) {
    const auto built = gates::build_functional_circuit(m, d);
    const QuditSystem handler_sys(m, d);
    for (int t = 0; t < 10; ++t) {
      const auto handlers = random_state(handler_sys, Representation::Q, rng);
      std::vector<int> q(m);
      std::uniform_int_distribution<int> digit(0, d - 1);
      for (auto& v : q) v = digit(rng);
      const DigitLabel sources(handler_sys, q);
      const auto out =
          gates::run_circuit(built.circuit, gates::functional_input(handlers, sources));

      // Reference: sum_k b_k |k>|q>|k.q>, built amplitude by amplitude.
      std::vector<Complex> ref(out.dim());
      for (std::size_t ki = 0; ki < handler_sys.dim(); ++ki) {
        auto digits = oracle::digits_of(ki, m, d);
        const int value = oracle::dot(digits, q, d);
        digits.insert(digits.end(), q.begin(), q.end());
        digits.push_back(value);
        ref[oracle::index_of(digits, d)] = handlers.amplitudes()[ki];
      }
      const StateVector reference(out.system(), Representation::Q, ref);
      CHECK(fidelity(out, reference) >= 1.0 - 1e-12);
    }
  }
}

TEST_CASE("functional_input checks dimensions") {
  const auto handlers = ket(3, {1, 2});
  CHECK_THROWS_AS(gates::functional_input(handlers, DigitLabel(QuditSystem(1, 3), {1})),
                  qudual::Mismatch);
  CHECK_THROWS_AS(gates::functional_input(handlers, DigitLabel(QuditSystem(2, 4), {1, 1})),
                  qudual::Mismatch);
  CHECK(gates::functional_input(handlers, DigitLabel(QuditSystem(2, 3), {0, 1})).dim() == 243);
}

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

using qudual::Complex;
using qudual::DigitLabel;
using qudual::QuditSystem;
using qudual::Representation;
using qudual::StateVector;
namespace duality = qudual::duality;

namespace {

std::vector<Complex> vec(const StateVector& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("single_qudit_fourier entries") {
  const auto h = duality::single_qudit_fourier(2).entries;
  CHECK(std::abs(h(0, 0) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(h(0, 1) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(h(1, 0) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(h(1, 1) + kInvSqrt2) < 1e-15);

  // Row 2 for d = 3 is (1, w^2, w^4 = w) / sqrt(3), w = exp(2 pi i / 3).
  const auto f3 = duality::single_qudit_fourier(3).entries;
  const double s = 1.0 / std::sqrt(3.0);
  const Complex w(-0.5, std::sqrt(3.0) / 2.0);
  const Complex w2(-0.5, -std::sqrt(3.0) / 2.0);
  CHECK(std::abs(f3(2, 0) - s) < 1e-15);
  CHECK(std::abs(f3(2, 1) - s * w2) < 1e-15);
  CHECK(std::abs(f3(2, 2) - s * w) < 1e-15);

  for (int d = 2; d <= 16; ++d) {
    CAPTURE(d);
    CHECK(qudual::unitarity_error(duality::single_qudit_fourier(d).entries) < 1e-12);
  }
  CHECK_THROWS_AS(duality::single_qudit_fourier(1), qudual::InvalidArgument);
}

TEST_CASE("to_q_rep examples") {
  for (auto [n, d] : {std::pair{1, 2}, {2, 3}, {3, 4}}) {
    const QuditSystem sys(n, d);
    const auto uniform = duality::to_q_rep(
        StateVector::basis_state(DigitLabel::zero(sys), Representation::K));
    CHECK(uniform.rep() == Representation::Q);
    for (const auto& a : uniform.amplitudes()) {
      CHECK(std::abs(a - 1.0 / std::sqrt(static_cast<double>(sys.dim()))) < 1e-12);
    }
  }
  const auto wave = duality::to_q_rep(
      StateVector::basis_state(DigitLabel(QuditSystem(1, 2), {1}), Representation::K));
  CHECK(std::abs(wave.amplitudes()[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(wave.amplitudes()[1] + kInvSqrt2) < 1e-15);
}

TEST_CASE("to_k_rep examples against the direct transform sum") {
  const QuditSystem sys(2, 3);
  const auto uniform =
      duality::to_k_rep(StateVector::basis_state(DigitLabel::zero(sys), Representation::Q));
  CHECK(uniform.rep() == Representation::K);
  for (const auto& a : uniform.amplitudes()) CHECK(std::abs(a - 1.0 / 3.0) < 1e-12);

  // Basis |10>: phi(k) = w^(-k1) / 3.
  const auto basis = StateVector::basis_state(DigitLabel(sys, {1, 0}), Representation::Q);
  const auto phi = duality::to_k_rep(basis);
  const auto direct = oracle::to_k(vec(basis), 2, 3);
  for (std::size_t k = 0; k < 9; ++k) {
    const int k1 = static_cast<int>(k / 3);
    const Complex expected = oracle::phase(-k1 / 3.0) / 3.0;
    CHECK(std::abs(phi.amplitudes()[k] - expected) < 1e-12);
    CHECK(std::abs(direct[k] - expected) < 1e-12);
  }
}

TEST_CASE("transforms reject the wrong input representation") {
  const auto q = StateVector::basis_state(DigitLabel(QuditSystem(1, 3), {1}),
                                          Representation::Q);
  const auto k = StateVector::basis_state(DigitLabel(QuditSystem(1, 3), {1}),
                                          Representation::K);
  CHECK_THROWS_AS(duality::to_q_rep(q), qudual::Mismatch);
  CHECK_THROWS_AS(duality::to_k_rep(k), qudual::Mismatch);
  CHECK(duality::to_rep(q, Representation::Q).amplitudes()[1] == Complex(1.0));
}

TEST_CASE("planewave examples") {
  const auto flat = duality::planewave(DigitLabel::zero(QuditSystem(2, 5)));
  for (const auto& a : flat.amplitudes()) CHECK(std::abs(a - 0.2) < 1e-15);

  const auto pw = duality::planewave(DigitLabel(QuditSystem(1, 2), {1}));
  CHECK(std::abs(pw.amplitudes()[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(pw.amplitudes()[1] + kInvSqrt2) < 1e-15);

  const QuditSystem sys(2, 3);
  const auto pw21 = duality::planewave(DigitLabel(sys, {2, 1}));
  CHECK(std::abs(pw21.amplitude(DigitLabel(sys, {1, 2})) - oracle::phase(1.0 / 3.0) / 3.0) <
        1e-15);
}

TEST_CASE("round trip, Parseval and direct-sum agreement on random states") {
  std::mt19937_64 rng(2024);
  for (int d = 2; d <= 6; ++d) {
    for (int n = 1; n <= 6; ++n) {
      const QuditSystem sys(n, d);
      if (sys.dim() > 20000) continue;
      CAPTURE(d);
      CAPTURE(n);
      const auto psi = random_state(sys, Representation::Q, rng);
      const auto phi = duality::to_k_rep(psi);
      CHECK(oracle::max_diff(vec(duality::to_q_rep(phi)), vec(psi)) < 1e-12);
      CHECK(std::abs(std::sqrt(phi.norm_squared()) - 1.0) < 1e-12);
      const auto phi2 = random_state(sys, Representation::K, rng);
      CHECK(oracle::max_diff(vec(duality::to_k_rep(duality::to_q_rep(phi2))), vec(phi2)) <
            1e-12);
      if (sys.dim() <= 256) {
        CHECK(oracle::max_diff(vec(phi), oracle::to_k(vec(psi), n, d)) < 1e-12);
        CHECK(oracle::max_diff(vec(duality::to_q_rep(phi2)), oracle::to_q(vec(phi2), n, d)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("planewaves are orthonormal and invert to deltas") {
  for (auto [n, d] : {std::pair{1, 2}, {2, 3}, {4, 3}, {2, 4}, {2, 6}, {3, 4}, {2, 9}}) {
    const QuditSystem sys(n, d);
    CAPTURE(d);
    CAPTURE(n);
    const auto labels = enumerate_labels(sys);
    std::vector<StateVector> waves;
    for (const auto& k : labels) waves.push_back(duality::planewave(k));
    double worst = 0.0;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      const auto via_transform =
          duality::to_q_rep(StateVector::basis_state(labels[a], Representation::K));
      CHECK(oracle::max_diff(vec(waves[a]), vec(via_transform)) < 1e-12);
      const auto delta = duality::to_k_rep(waves[a]);
      for (std::size_t i = 0; i < delta.dim(); ++i) {
        CHECK(std::abs(delta.amplitudes()[i] - (i == a ? 1.0 : 0.0)) < 1e-12);
      }
      for (std::size_t b = 0; b < labels.size(); ++b) {
        worst = std::max(worst, std::abs(inner_product(waves[a], waves[b]) -
                                         (a == b ? 1.0 : 0.0)));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("dense oracle: H (x) H, unitarity and agreement with the factorized path") {
  const auto h = duality::single_qudit_fourier(2).entries;
  CHECK(qudual::max_abs_diff(duality::dense_fourier_oracle(QuditSystem(2, 2)),
                             qudual::kron(h, h)) < 1e-15);

  std::mt19937_64 rng(5);
  for (auto [n, d] : {std::pair{2, 3}, {3, 4}, {2, 6}, {4, 4}, {8, 2}, {3, 6}}) {
    const QuditSystem sys(n, d);
    CAPTURE(d);
    CAPTURE(n);
    const auto m = duality::dense_fourier_oracle(sys);
    CHECK(qudual::unitarity_error(m) < 1e-11);
    for (std::size_t col = 0; col < sys.dim(); ++col) {
      const auto out = duality::to_q_rep(
          StateVector::basis_state(index_to_label(col, sys), Representation::K));
      double worst = 0.0;
      for (std::size_t row = 0; row < sys.dim(); ++row) {
        worst = std::max(worst, std::abs(out.amplitudes()[row] - m(row, col)));
      }
      CHECK(worst < 1e-12);
    }
  }
  const QuditSystem sys(2, 5);
  const auto m = duality::dense_fourier_oracle(sys);
  for (int t = 0; t < 100; ++t) {
    const auto phi = random_state(sys, Representation::K, rng);
    CHECK(oracle::max_diff(vec(duality::to_q_rep(phi)), m.apply(phi.amplitudes())) < 1e-12);
  }
  CHECK_THROWS_AS(duality::dense_fourier_oracle(QuditSystem(13, 2)), qudual::InvalidArgument);
}

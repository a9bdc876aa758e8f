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

#include "qudual/analysis.hpp"

#include <cmath>
#include <numeric>
#include <numbers>

#include "qudual/duality.hpp"
#include "qudual/gates.hpp"

namespace qudual::analysis {

namespace {

std::vector<Complex> ramp(int d) {
  std::vector<Complex> v(d);
  for (int m = 0; m < d; ++m) v[m] = static_cast<double>(m);
  return v;
}

void require_q_rep(const StateVector& s) {
  if (s.rep() != Representation::Q) {
    throw Mismatch("analysis expects a q-representation state");
  }
}

void check_level(int d) {
  if (d < 2) throw InvalidArgument("observable needs d >= 2");
}

// K_q on one wire as F . diag(0..d-1) . F^dagger, applied fiber-wise so the
// cost stays O(d^n * d) instead of forming the dense d x d product.
std::vector<Complex> apply_k_q(std::span<const Complex> amps,
                               const QuditSystem& sys, int wire,
                               const CMatrix& f, const CMatrix& f_dag) {
  auto out = kernel::apply_single_qudit(amps, sys, wire, f_dag);
  const std::size_t stride = sys.stride(wire);
  const int d = sys.levels();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= static_cast<double>(digit_at(i, stride, d));
  }
  return kernel::apply_single_qudit(out, sys, wire, f);
}

}  // namespace

SingleQuditObservable k_observable_in_k_rep(int d) {
  check_level(d);
  return {d, CMatrix::diagonal(ramp(d)), Representation::K};
}

SingleQuditObservable k_observable_in_q_rep(int d) {
  check_level(d);
  const auto f = duality::single_qudit_fourier(d).entries;
  return {d, f * CMatrix::diagonal(ramp(d)) * f.adjoint(), Representation::Q};
}

SingleQuditObservable q_observable(int d) {
  check_level(d);
  return {d, CMatrix::diagonal(ramp(d)), Representation::Q};
}

std::vector<Complex> apply_k_observable(const StateVector& psi, int wire) {
  require_q_rep(psi);
  const auto f = duality::single_qudit_fourier(psi.system().levels()).entries;
  return apply_k_q(psi.amplitudes(), psi.system(), wire, f, f.adjoint());
}

std::vector<double> expect_k(const StateVector& psi) {
  require_q_rep(psi);
  const auto f = duality::single_qudit_fourier(psi.system().levels()).entries;
  const auto f_dag = f.adjoint();
  const auto amps = psi.amplitudes();
  std::vector<double> out;
  for (int j = 0; j < psi.system().qudits(); ++j) {
    const auto applied =
        apply_k_q(amps, psi.system(), j, f, f_dag);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      acc += std::conj(amps[i]) * applied[i];
    }
    out.push_back(acc.real());
  }
  return out;
}

std::vector<double> expect_q(const StateVector& psi) {
  require_q_rep(psi);
  const auto& sys = psi.system();
  std::vector<double> out;
  for (int j = 0; j < sys.qudits(); ++j) {
    const auto p = marginal(psi, j);
    double acc = 0.0;
    for (std::size_t v = 0; v < p.size(); ++v) acc += p[v] * static_cast<double>(v);
    out.push_back(acc);
  }
  return out;
}

std::vector<std::vector<double>> k_distributions(const StateVector& psi) {
  require_q_rep(psi);
  const auto phi = duality::to_k_rep(psi);
  std::vector<std::vector<double>> out;
  for (int j = 0; j < psi.system().qudits(); ++j) out.push_back(marginal(phi, j));
  return out;
}

Commutator commutator_qk(int d) {
  const auto q = q_observable(d).matrix;
  const auto k = k_observable_in_q_rep(d).matrix;
  CMatrix c = q * k - k * q;
  const double norm = frobenius_norm(c);
  return {std::move(c), norm};
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

EntropyReport entropies(const StateVector& psi, std::optional<double> log_base) {
  require_q_rep(psi);
  if (log_base && (!(*log_base > 0.0) || *log_base == 1.0)) {
    throw InvalidArgument("entropy log base must be positive and != 1");
  }
  double h_q = shannon_entropy(probabilities(psi));
  double h_k = shannon_entropy(probabilities(duality::to_k_rep(psi)));
  if (log_base) {
    const double scale = 1.0 / std::log(*log_base);
    h_q *= scale;
    h_k *= scale;
  }
  return {h_q, h_k, h_q + h_k, log_base};
}

CMatrix translation_operator_k_rep(int d, int q) {
  check_level(d);
  if (q < 0 || q >= d) {
    throw InvalidArgument("translation amount " + std::to_string(q) +
                          " outside [0, " + std::to_string(d) + ")");
  }
  std::vector<Complex> diag(d);
  for (int m = 0; m < d; ++m) {
    diag[m] = duality::root_of_unity(d, -static_cast<long long>(m) * q);
  }
  return CMatrix::diagonal(diag);
}

CMatrix wavenumber_exponential(int d, int q) {
  // K_k is diagonal, so exp(-2 pi i K_k q / d) is exactly the diagonal
  // operator above; conjugating by F gives the q-rep form.
  const auto f = duality::single_qudit_fourier(d).entries;
  return f * translation_operator_k_rep(d, q) * f.adjoint();
}

double verify_translation_identity(int d, int q) {
  return max_abs_diff(wavenumber_exponential(d, q),
                      gates::translation_gate_matrix(d, q));
}

Partition partition(const DigitLabel& k) {
  const auto& sys = k.system();
  Partition out{k, std::vector<std::vector<DigitLabel>>(sys.levels())};
  for (auto& q : enumerate_labels(sys)) {
    out.classes[dot_mod(k, q)].push_back(std::move(q));
  }
  return out;
}

std::vector<std::size_t> expected_class_sizes(const DigitLabel& k) {
  const auto& sys = k.system();
  const int d = sys.levels();
  int g = d;
  for (int v : k.digits()) g = std::gcd(g, v);
  std::vector<std::size_t> sizes(d, 0);
  const std::size_t per_class = sys.dim() / static_cast<std::size_t>(d / g);
  for (int v = 0; v < d; v += g) sizes[v] = per_class;
  return sizes;
}

}  // namespace qudual::analysis

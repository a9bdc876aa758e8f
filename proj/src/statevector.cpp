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

#include "qudual/statevector.hpp"

#include <cmath>
#include <sstream>

namespace qudual {

std::string_view to_string(Representation rep) noexcept {
  return rep == Representation::Q ? "q" : "k";
}

namespace detail {

StateVector adopt(QuditSystem system, Representation rep,
                  std::vector<Complex> amplitudes) {
  return StateVector(StateVector::Unchecked{}, system, rep,
                     std::move(amplitudes));
}

}  // namespace detail

namespace {

double sum_norm(std::span<const Complex> amps) {
  double acc = 0.0;
  for (const auto& a : amps) acc += std::norm(a);
  return acc;
}

void require_compatible(const StateVector& f, const StateVector& g) {
  if (f.system() != g.system()) {
    throw Mismatch("states belong to different qudit systems");
  }
  if (f.rep() != g.rep()) {
    throw Mismatch(
        "states are in different representations; transform one first");
  }
}

}  // namespace

StateVector::StateVector(QuditSystem system, Representation rep,
                         std::vector<Complex> amplitudes)
    : system_(system), rep_(rep), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != system_.dim()) {
    throw ValidationError("expected " + std::to_string(system_.dim()) +
                          " amplitudes, got " +
                          std::to_string(amplitudes_.size()));
  }
  for (const auto& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ValidationError("amplitude is not finite");
    }
  }
  const double n2 = sum_norm(amplitudes_);
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state is not normalized: norm^2 = " << n2
        << " (deviation " << std::abs(n2 - 1.0) << ")";
    throw ValidationError(msg.str());
  }
}

StateVector StateVector::basis_state(const DigitLabel& label,
                                     Representation rep) {
  std::vector<Complex> amps(label.system().dim());
  amps[label_to_index(label)] = 1.0;
  return StateVector(Unchecked{}, label.system(), rep, std::move(amps));
}

Complex StateVector::amplitude(const DigitLabel& label) const {
  if (label.system() != system_) {
    throw Mismatch("label belongs to a different qudit system");
  }
  return amplitudes_[label_to_index(label)];
}

double StateVector::norm_squared() const noexcept {
  return sum_norm(amplitudes_);
}

Complex inner_product(const StateVector& f, const StateVector& g) {
  require_compatible(f, g);
  Complex acc = 0.0;
  const auto fa = f.amplitudes();
  const auto ga = g.amplitudes();
  for (std::size_t i = 0; i < fa.size(); ++i) acc += std::conj(fa[i]) * ga[i];
  return acc;
}

double fidelity(const StateVector& f, const StateVector& g) {
  return std::norm(inner_product(f, g));
}

StateVector tensor_product(const StateVector& f, const StateVector& g) {
  if (f.system().levels() != g.system().levels()) {
    throw Mismatch("tensor product needs equal level counts");
  }
  if (f.rep() != g.rep()) {
    throw Mismatch("tensor product needs equal representations");
  }
  const QuditSystem joint(f.system().qudits() + g.system().qudits(),
                          f.system().levels());
  std::vector<Complex> amps;
  amps.reserve(joint.dim());
  for (const auto& a : f.amplitudes()) {
    for (const auto& b : g.amplitudes()) amps.push_back(a * b);
  }
  return detail::adopt(joint, f.rep(), std::move(amps));
}

std::vector<double> probabilities(const StateVector& s) {
  std::vector<double> out;
  out.reserve(s.dim());
  for (const auto& a : s.amplitudes()) out.push_back(std::norm(a));
  return out;
}

std::vector<double> marginal(const StateVector& s, int wire) {
  const auto stride = s.system().stride(wire);
  const int d = s.system().levels();
  std::vector<double> out(d, 0.0);
  const auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    out[digit_at(i, stride, d)] += std::norm(amps[i]);
  }
  return out;
}

StateVector random_state(const QuditSystem& system, Representation rep,
                         std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(system.dim());
  double n2 = 0.0;
  for (auto& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = Complex(re, im);
    n2 += re * re + im * im;
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : amps) a *= scale;
  return StateVector(system, rep, std::move(amps));
}

namespace kernel {

std::vector<Complex> apply_single_qudit(std::span<const Complex> in,
                                        const QuditSystem& system, int wire,
                                        const CMatrix& m) {
  const auto d = static_cast<std::size_t>(system.levels());
  if (m.rows() != d || m.cols() != d) {
    throw Mismatch("single-qudit matrix must be " + std::to_string(d) + "x" +
                   std::to_string(d));
  }
  if (in.size() != system.dim()) throw Mismatch("amplitude count mismatch");
  const std::size_t stride = system.stride(wire);
  const std::size_t block = stride * d;
  std::vector<Complex> out(in.size());
  std::vector<Complex> fiber(d);
  // Each (outer, inner) pair addresses one length-d fiber along `wire`.
  for (std::size_t outer = 0; outer < in.size(); outer += block) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      const std::size_t base = outer + inner;
      for (std::size_t c = 0; c < d; ++c) fiber[c] = in[base + c * stride];
      for (std::size_t r = 0; r < d; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < d; ++c) acc += m(r, c) * fiber[c];
        out[base + r * stride] = acc;
      }
    }
  }
  return out;
}

}  // namespace kernel

StateVector apply_single_qudit_unitary(const StateVector& s, int wire,
                                       const CMatrix& m) {
  if (unitarity_error(m) > 1e-10) {
    throw ValidationError("single-qudit matrix is not unitary");
  }
  return detail::adopt(s.system(), s.rep(),
                       kernel::apply_single_qudit(s.amplitudes(), s.system(),
                                                  wire, m));
}

}  // namespace qudual

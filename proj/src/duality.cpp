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

#include "qudual/duality.hpp"

#include <cmath>
#include <numbers>

namespace qudual::duality {

Complex root_of_unity(int d, long long m) {
  long long r = m % d;
  if (r < 0) r += d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

FourierMatrix single_qudit_fourier(int d) {
  if (d < 2) throw InvalidArgument("Fourier matrix needs d >= 2");
  const auto ud = static_cast<std::size_t>(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  CMatrix f(ud, ud);
  for (std::size_t q = 0; q < ud; ++q) {
    for (std::size_t k = 0; k < ud; ++k) {
      f(q, k) = scale * root_of_unity(d, static_cast<long long>(q * k));
    }
  }
  return {d, std::move(f)};
}

namespace {

StateVector transform_all(const StateVector& s, const CMatrix& m,
                          Representation out_rep) {
  std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  for (int wire = 0; wire < s.system().qudits(); ++wire) {
    amps = kernel::apply_single_qudit(amps, s.system(), wire, m);
  }
  return detail::adopt(s.system(), out_rep, std::move(amps));
}

}  // namespace

StateVector to_q_rep(const StateVector& phi) {
  if (phi.rep() != Representation::K) {
    throw Mismatch("to_q_rep expects a k-representation state");
  }
  return transform_all(phi, single_qudit_fourier(phi.system().levels()).entries,
                       Representation::Q);
}

StateVector to_k_rep(const StateVector& psi) {
  if (psi.rep() != Representation::Q) {
    throw Mismatch("to_k_rep expects a q-representation state");
  }
  return transform_all(
      psi, single_qudit_fourier(psi.system().levels()).entries.adjoint(),
      Representation::K);
}

StateVector to_rep(const StateVector& s, Representation target) {
  if (s.rep() == target) return s;
  return target == Representation::Q ? to_q_rep(s) : to_k_rep(s);
}

StateVector planewave(const DigitLabel& k) {
  const QuditSystem& sys = k.system();
  const double scale = 1.0 / std::sqrt(static_cast<double>(sys.dim()));
  std::vector<Complex> amps(sys.dim());
  for (std::size_t i = 0; i < sys.dim(); ++i) {
    amps[i] = scale * root_of_unity(sys.levels(), dot_mod(k, index_to_label(i, sys)));
  }
  return detail::adopt(sys, Representation::Q, std::move(amps));
}

CMatrix dense_fourier_oracle(const QuditSystem& system) {
  if (system.dim() > kOracleCap) {
    throw InvalidArgument("dense Fourier oracle limited to d^n <= " +
                          std::to_string(kOracleCap) + ", got " +
                          std::to_string(system.dim()));
  }
  const auto labels = enumerate_labels(system);
  const double scale = 1.0 / std::sqrt(static_cast<double>(system.dim()));
  CMatrix m(system.dim(), system.dim());
  for (std::size_t q = 0; q < labels.size(); ++q) {
    for (std::size_t k = 0; k < labels.size(); ++k) {
      m(q, k) = scale * root_of_unity(system.levels(), dot_mod(labels[k], labels[q]));
    }
  }
  return m;
}

}  // namespace qudual::duality

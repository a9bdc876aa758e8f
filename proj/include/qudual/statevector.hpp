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

// Dense statevectors over the d^n basis, tagged with the representation
// (state / q-rep, or functional / k-rep) the amplitudes are expressed in.

#pragma once

#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "qudual/group.hpp"
#include "qudual/matrix.hpp"

namespace qudual {

enum class Representation { Q, K };

std::string_view to_string(Representation rep) noexcept;

class StateVector;

namespace detail {
// Wraps amplitudes produced by a norm-preserving kernel without re-checking.
StateVector adopt(QuditSystem system, Representation rep,
                  std::vector<Complex> amplitudes);
}  // namespace detail

class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-10;

  /// Validates length (d^n) and normalization (|sum|a|^2 - 1| <= 1e-10).
  /// Amplitudes are stored as given, never renormalized.
  StateVector(QuditSystem system, Representation rep,
              std::vector<Complex> amplitudes);

  static StateVector from_amplitudes(QuditSystem system, Representation rep,
                                     std::vector<Complex> amplitudes) {
    return StateVector(system, rep, std::move(amplitudes));
  }

  /// Amplitude 1 at label_to_index(label).
  static StateVector basis_state(const DigitLabel& label, Representation rep);

  const QuditSystem& system() const noexcept { return system_; }
  Representation rep() const noexcept { return rep_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(const DigitLabel& label) const;

  double norm_squared() const noexcept;

 private:
  struct Unchecked {};
  StateVector(Unchecked, QuditSystem system, Representation rep,
              std::vector<Complex> amplitudes)
      : system_(system), rep_(rep), amplitudes_(std::move(amplitudes)) {}

  friend StateVector detail::adopt(QuditSystem, Representation,
                                   std::vector<Complex>);

  QuditSystem system_;
  Representation rep_;
  std::vector<Complex> amplitudes_;
};

/// sum_i conj(f_i) g_i. Both states must share system and representation.
Complex inner_product(const StateVector& f, const StateVector& g);

/// |<f|g>|^2
double fidelity(const StateVector& f, const StateVector& g);

/// f (x) g over n_f + n_g qudits, f's qudits most significant.
StateVector tensor_product(const StateVector& f, const StateVector& g);

/// Elementwise |amplitude|^2.
std::vector<double> probabilities(const StateVector& s);

/// Marginal distribution of one qudit's digit: length-d vector.
std::vector<double> marginal(const StateVector& s, int wire);

/// Haar-like random state from i.i.d. complex Gaussians.
StateVector random_state(const QuditSystem& system, Representation rep,
                         std::mt19937_64& rng);

namespace kernel {

/// out = (I (x) .. (x) m at `wire` (x) .. (x) I) in, without building the
/// d^n-dimensional operator. m must be d x d. No normalization assumptions.
std::vector<Complex> apply_single_qudit(std::span<const Complex> in,
                                        const QuditSystem& system, int wire,
                                        const CMatrix& m);

}  // namespace kernel

/// Applies a d x d unitary on one qudit. Throws ValidationError when m is
/// not unitary within 1e-10.
StateVector apply_single_qudit_unitary(const StateVector& s, int wire,
                                       const CMatrix& m);

}  // namespace qudual

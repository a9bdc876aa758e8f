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

// Fourier duality between the state (q) and functional (k) representations.
//
// The n-qudit transform factorizes into one d x d transform per qudit because
// exp(2*pi*i*(sum_j k_j q_j)/d) does not depend on reducing the exponent sum
// modulo d. Both directions are therefore applied as n sequential
// single-qudit passes, O(n d^(n+1)), and the d^n x d^n matrix only exists in
// dense_fourier_oracle.

#pragma once

#include "qudual/group.hpp"
#include "qudual/matrix.hpp"
#include "qudual/statevector.hpp"

namespace qudual::duality {

/// Largest d^n for which the dense oracle will be materialized.
inline constexpr std::size_t kOracleCap = 4096;

/// exp(2*pi*i*m/d), with the exponent reduced mod d before evaluation.
Complex root_of_unity(int d, long long m);

/// Single-qudit transform from k to q: entry(q, k) = w^(q k) / sqrt(d),
/// w = exp(2*pi*i/d).
struct FourierMatrix {
  int d;
  CMatrix entries;
};

FourierMatrix single_qudit_fourier(int d);

/// k-rep -> q-rep: F on every qudit. Throws Mismatch on a q-rep input.
StateVector to_q_rep(const StateVector& phi);

/// q-rep -> k-rep: F^dagger on every qudit. Throws Mismatch on a k-rep input.
StateVector to_k_rep(const StateVector& psi);

/// Returns the state in `target`, transforming only when needed.
StateVector to_rep(const StateVector& s, Representation target);

/// q-rep image of the basis functional k: amplitude exp(2*pi*i k.q/d)/sqrt(d^n).
StateVector planewave(const DigitLabel& k);

/// entry(q, k) = exp(2*pi*i dot_mod(k,q)/d) / sqrt(d^n). Throws
/// InvalidArgument above kOracleCap. Test/verification use only.
CMatrix dense_fourier_oracle(const QuditSystem& system);

}  // namespace qudual::duality

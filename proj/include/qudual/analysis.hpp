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

// Observables and diagnostics on top of the duality: wavenumber and digit
// observables, their expectations and commutator, entropic uncertainty,
// the translation/wavenumber identity, and the partition a functional
// induces on the basis.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qudual/group.hpp"
#include "qudual/matrix.hpp"
#include "qudual/statevector.hpp"

namespace qudual::analysis {

/// A d x d Hermitian matrix and the representation its entries are written in.
struct SingleQuditObservable {
  int d;
  CMatrix matrix;
  Representation basis;
};

/// diag(0, 1, ..., d-1), the wavenumber in its own representation.
SingleQuditObservable k_observable_in_k_rep(int d);

/// F diag(0..d-1) F^dagger. Planewave columns of F are its eigenvectors.
SingleQuditObservable k_observable_in_q_rep(int d);

/// diag(0, 1, ..., d-1) in the q-representation.
SingleQuditObservable q_observable(int d);

/// (I (x) .. (x) K_q at `wire` (x) .. (x) I) psi, contracted digit-wise.
std::vector<Complex> apply_k_observable(const StateVector& psi, int wire);

/// <k_j> for every qudit j, the plain (non-circular) mean of a cyclic
/// variable. Requires a q-rep state.
std::vector<double> expect_k(const StateVector& psi);

/// <q_j> = sum_q |psi(q)|^2 q_j. Requires a q-rep state.
std::vector<double> expect_q(const StateVector& psi);

/// Per-qudit marginal distributions of the wavenumber digit k_j.
std::vector<std::vector<double>> k_distributions(const StateVector& psi);

struct Commutator {
  CMatrix matrix;
  double frobenius_norm;
};

/// [Q_q, K_q] = Q_q K_q - K_q Q_q.
Commutator commutator_qk(int d);

struct EntropyReport {
  double h_q;
  double h_k;
  double sum;
  /// std::nullopt means natural log.
  std::optional<double> log_base;
};

/// -sum p log p with 0 log 0 = 0, natural log.
double shannon_entropy(std::span<const double> probabilities);

/// h_q from the q-rep amplitudes, h_k from to_k_rep(psi). Reported in nats
/// unless `log_base` is given.
EntropyReport entropies(const StateVector& psi,
                        std::optional<double> log_base = std::nullopt);

/// diag(exp(-2*pi*i*m*q/d)), m = 0..d-1: the shift-by-q in the k-rep.
CMatrix translation_operator_k_rep(int d, int q);

/// exp(-2*pi*i*K_q*q/d), evaluated as F diag(exp(-2*pi*i*m*q/d)) F^dagger.
CMatrix wavenumber_exponential(int d, int q);

/// Max entry deviation between wavenumber_exponential(d, q) and the
/// shift-by-q permutation.
double verify_translation_identity(int d, int q);

/// classes[v] holds every q with dot_mod(k, q) = v, in index order. With
/// g = gcd(k_1, ..., k_n, d), q -> k.q maps onto the multiples of g, so the
/// classes v = 0, g, 2g, ... each hold g * d^(n-1) labels and the rest are
/// empty. For prime d and k != 0 that is d equal classes.
struct Partition {
  DigitLabel functional;
  std::vector<std::vector<DigitLabel>> classes;
};

Partition partition(const DigitLabel& k);

/// Class sizes implied by the gcd structure above, computed without
/// enumerating labels. The zero functional gives {d^n, 0, ..., 0}.
std::vector<std::size_t> expected_class_sizes(const DigitLabel& k);

}  // namespace qudual::analysis

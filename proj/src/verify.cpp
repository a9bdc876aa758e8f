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

#include "qudual/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qudual/analysis.hpp"
#include "qudual/duality.hpp"
#include "qudual/gates.hpp"

namespace qudual::verify {

namespace {

constexpr int kRandomStates = 20;
constexpr int kEntropySamples = 200;
constexpr std::size_t kExhaustiveLabels = 81;
constexpr std::size_t kSampledLabels = 32;
constexpr double kTableWorkCap = 2e7;
constexpr int kSampledTableCases = 64;

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

std::vector<DigitLabel> sample_labels(const QuditSystem& sys,
                                      std::mt19937_64& rng) {
  if (sys.dim() <= kExhaustiveLabels) return enumerate_labels(sys);
  std::uniform_int_distribution<std::size_t> pick(0, sys.dim() - 1);
  std::vector<DigitLabel> out;
  for (std::size_t i = 0; i < kSampledLabels; ++i) {
    out.push_back(index_to_label(pick(rng), sys));
  }
  return out;
}

CMatrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  const auto ud = static_cast<std::size_t>(d);
  CMatrix m(ud, ud);
  // Gram-Schmidt over the columns of a complex Gaussian matrix.
  for (std::size_t c = 0; c < ud; ++c) {
    std::vector<Complex> v(ud);
    for (auto& x : v) x = Complex(gauss(rng), gauss(rng));
    for (std::size_t p = 0; p < c; ++p) {
      Complex proj = 0.0;
      for (std::size_t r = 0; r < ud; ++r) proj += std::conj(m(r, p)) * v[r];
      for (std::size_t r = 0; r < ud; ++r) v[r] -= proj * m(r, p);
    }
    double norm = 0.0;
    for (const auto& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < ud; ++r) m(r, c) = v[r] / norm;
  }
  return m;
}

class Collector {
 public:
  void less(std::string name, double measured, double tol, std::string note = {}) {
    add(std::move(name), measured, tol, Comparison::Less, measured < tol,
        std::move(note));
  }
  void greater(std::string name, double measured, double tol,
               std::string note = {}) {
    add(std::move(name), measured, tol, Comparison::Greater, measured > tol,
        std::move(note));
  }
  void equal(std::string name, double measured, double expected,
             std::string note = {}) {
    add(std::move(name), measured, expected, Comparison::Equal,
        measured == expected, std::move(note));
  }
  void skip(std::string name, double tol, Comparison cmp, std::string note) {
    Check c{std::move(name), 0.0, tol, cmp, true, true, std::move(note)};
    checks.push_back(std::move(c));
  }

  std::vector<Check> checks;

 private:
  void add(std::string name, double measured, double tol, Comparison cmp,
           bool ok, std::string note) {
    checks.push_back(
        Check{std::move(name), measured, tol, cmp, ok, false, std::move(note)});
  }
};

void fourier_checks(const QuditSystem& sys, std::mt19937_64& rng, Collector& out) {
  const int d = sys.levels();
  out.less("fourier_unitarity", unitarity_error(duality::single_qudit_fourier(d).entries),
           1e-12);

  double round_trip = 0.0;
  double parseval = 0.0;
  for (int t = 0; t < kRandomStates; ++t) {
    const auto psi = random_state(sys, Representation::Q, rng);
    const auto phi = duality::to_k_rep(psi);
    round_trip = std::max(
        round_trip, max_diff(duality::to_q_rep(phi).amplitudes(), psi.amplitudes()));
    parseval = std::max(parseval, std::abs(std::sqrt(phi.norm_squared()) -
                                           std::sqrt(psi.norm_squared())));
  }
  out.less("fourier_round_trip", round_trip, 1e-12);
  out.less("fourier_parseval", parseval, 1e-12);

  const auto labels = sample_labels(sys, rng);
  double pw_vs_transform = 0.0;
  double orthonormality = 0.0;
  std::vector<StateVector> waves;
  for (const auto& k : labels) {
    waves.push_back(duality::planewave(k));
    const auto via_transform =
        duality::to_q_rep(StateVector::basis_state(k, Representation::K));
    pw_vs_transform = std::max(
        pw_vs_transform, max_diff(waves.back().amplitudes(), via_transform.amplitudes()));
  }
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = 0; b < labels.size(); ++b) {
      const double expected = labels[a] == labels[b] ? 1.0 : 0.0;
      orthonormality = std::max(
          orthonormality, std::abs(inner_product(waves[a], waves[b]) - expected));
    }
  }
  out.less("planewave_matches_transform", pw_vs_transform, 1e-12);
  out.less("planewave_orthonormality", orthonormality, 1e-12);

  if (sys.dim() > kDenseCheckCap) {
    const std::string note = "d^n above dense check cap " + std::to_string(kDenseCheckCap);
    out.skip("dense_oracle_agreement", 1e-12, Comparison::Less, note);
    out.skip("dense_oracle_unitarity", 1e-11, Comparison::Less, note);
    return;
  }
  const auto oracle = duality::dense_fourier_oracle(sys);
  double agreement = 0.0;
  for (std::size_t col = 0; col < sys.dim(); ++col) {
    const auto out_state = duality::to_q_rep(
        StateVector::basis_state(index_to_label(col, sys), Representation::K));
    for (std::size_t row = 0; row < sys.dim(); ++row) {
      agreement = std::max(agreement,
                           std::abs(out_state.amplitudes()[row] - oracle(row, col)));
    }
  }
  out.less("dense_oracle_agreement", agreement, 1e-12);
  out.less("dense_oracle_unitarity", unitarity_error(oracle), 1e-11);
}

void gate_checks(const QuditSystem& sys, std::mt19937_64& rng, Collector& out) {
  const int d = sys.levels();
  const auto ud = static_cast<std::size_t>(d);
  const QuditSystem pair(2, d);

  // Controlled-add block structure: block j is the shift by (k * j) mod d.
  double block_error = 0.0;
  for (int k = 0; k < d; ++k) {
    const auto oracle = gates::circuit_unitary_oracle(
        gates::Circuit(pair, {gates::ControlledAdd{0, 1, k}}));
    CMatrix expected(ud * ud, ud * ud);
    for (std::size_t j = 0; j < ud; ++j) {
      const auto block = gates::translation_gate_matrix(d, static_cast<int>((k * j) % ud));
      for (std::size_t r = 0; r < ud; ++r) {
        for (std::size_t c = 0; c < ud; ++c) expected(j * ud + r, j * ud + c) = block(r, c);
      }
    }
    block_error = std::max(block_error, max_abs_diff(oracle, expected));
  }
  out.equal("cadd_block_structure", block_error, 0.0);

  if (d == 3) {
    // The printed qutrit example: diag(I, U1, U2) with U1 a shift by 2 and
    // U2 a shift by 1.
    const int u1[3][3] = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    const int u2[3][3] = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    CMatrix expected(9, 9);
    for (std::size_t r = 0; r < 3; ++r) {
      expected(r, r) = 1.0;
      for (std::size_t c = 0; c < 3; ++c) {
        expected(3 + r, 3 + c) = u1[r][c];
        expected(6 + r, 6 + c) = u2[r][c];
      }
    }
    const auto oracle = gates::circuit_unitary_oracle(
        gates::Circuit(pair, {gates::ControlledAdd{0, 1, 2}}));
    out.equal("qutrit_cadd_matrix", max_abs_diff(oracle, expected), 0.0);
  }

  // Functional creation over the n qudits of the system.
  const int m = sys.qudits();
  const auto built = gates::build_functional_circuit(m, d);
  const auto& total = built.circuit.system();
  const double cases = static_cast<double>(sys.dim()) * static_cast<double>(sys.dim());
  const bool exhaustive = cases * static_cast<double>(total.dim()) <= kTableWorkCap;
  std::vector<std::pair<std::size_t, std::size_t>> table;
  if (exhaustive) {
    for (std::size_t k = 0; k < sys.dim(); ++k) {
      for (std::size_t q = 0; q < sys.dim(); ++q) table.emplace_back(k, q);
    }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, sys.dim() - 1);
    for (int t = 0; t < kSampledTableCases; ++t) table.emplace_back(pick(rng), pick(rng));
  }
  double amplitude_error = 0.0;
  double partition_mismatches = 0.0;
  for (const auto& [ki, qi] : table) {
    const auto k = index_to_label(ki, sys);
    const auto q = index_to_label(qi, sys);
    const auto output = gates::run_circuit(
        built.circuit,
        gates::functional_input(StateVector::basis_state(k, Representation::Q), q));
    std::vector<int> digits(k.digits().begin(), k.digits().end());
    digits.insert(digits.end(), q.digits().begin(), q.digits().end());
    digits.push_back(dot_mod(k, q));
    const auto expected_index = label_to_index(DigitLabel(total, digits));
    amplitude_error = std::max(
        amplitude_error, std::abs(1.0 - std::abs(output.amplitudes()[expected_index])));

    const auto holder = marginal(output, built.layout.holder_wire);
    const auto value = static_cast<std::size_t>(
        std::max_element(holder.begin(), holder.end()) - holder.begin());
    const auto parts = analysis::partition(k);
    if (std::find(parts.classes[value].begin(), parts.classes[value].end(), q) ==
        parts.classes[value].end()) {
      partition_mismatches += 1.0;
    }
  }
  const std::string note = std::to_string(table.size()) +
                           (exhaustive ? " cases, exhaustive" : " cases, sampled");
  out.less("functional_creation_table", amplitude_error, 1e-12, note);
  out.equal("functional_matches_partition", partition_mismatches, 0.0, note);

  // Norm drift and inversion through a random structured circuit.
  gates::Circuit circuit(sys);
  std::uniform_int_distribution<int> wire(0, sys.qudits() - 1);
  std::uniform_int_distribution<int> digit(0, d - 1);
  const int kinds = sys.qudits() >= 3 ? 4 : (sys.qudits() == 2 ? 3 : 2);
  std::uniform_int_distribution<int> kind(0, kinds - 1);
  while (circuit.size() < 100) {
    const int a = wire(rng);
    const int b = wire(rng);
    const int c = wire(rng);
    switch (kind(rng)) {
      case 0:
        circuit.append(gates::Translation{a, digit(rng)});
        break;
      case 1:
        circuit.append(gates::SingleQuditUnitary{a, random_unitary(d, rng)});
        break;
      case 2:
        if (a != b) circuit.append(gates::ControlledAdd{a, b, digit(rng)});
        break;
      default:
        if (a != b && b != c && a != c) {
          circuit.append(gates::DoublyControlledAdd{a, b, c});
        }
    }
  }
  const auto psi = random_state(sys, Representation::Q, rng);
  const auto evolved = gates::run_circuit(circuit, psi);
  out.less("random_circuit_norm_drift", std::abs(evolved.norm_squared() - 1.0), 1e-10,
           "100 gates");
  const auto restored = gates::run_circuit(gates::inverse(circuit), evolved);
  out.less("circuit_inverse_round_trip", max_diff(restored.amplitudes(), psi.amplitudes()),
           1e-12);
}

void partition_checks(const QuditSystem& sys, std::mt19937_64& rng, Collector& out) {
  double bad = 0.0;
  for (const auto& k : sample_labels(sys, rng)) {
    const auto sizes = analysis::expected_class_sizes(k);
    const auto p = analysis::partition(k);
    for (std::size_t v = 0; v < sizes.size(); ++v) {
      if (p.classes[v].size() != sizes[v]) bad += 1.0;
    }
  }
  out.equal("partition_class_sizes", bad, 0.0,
            "classes on multiples of gcd(k, d) hold gcd * d^(n-1) labels, others empty");

  if (sys.levels() == 3 && sys.qudits() == 2) {
    const std::vector<std::vector<std::string>> by_q2 = {
        {"00", "10", "20"}, {"01", "11", "21"}, {"02", "12", "22"}};
    // Within each class labels come in index order.
    const std::vector<std::vector<std::string>> by_2q1_plus_q2 = {
        {"00", "11", "22"}, {"01", "12", "20"}, {"02", "10", "21"}};
    double mismatches = 0.0;
    auto compare = [&](std::vector<int> k, const std::vector<std::vector<std::string>>& want) {
      const auto p = analysis::partition(DigitLabel(sys, std::move(k)));
      for (std::size_t v = 0; v < want.size(); ++v) {
        std::vector<std::string> got;
        for (const auto& q : p.classes[v]) got.push_back(q.to_string());
        if (got != want[v]) mismatches += 1.0;
      }
    };
    compare({0, 1}, by_q2);
    compare({2, 1}, by_2q1_plus_q2);
    out.equal("qutrit_pair_partitions", mismatches, 0.0);
  }
}

void observable_checks(const QuditSystem& sys, std::mt19937_64& rng, Collector& out) {
  const int d = sys.levels();
  const auto k_q = analysis::k_observable_in_q_rep(d);
  out.less("k_observable_hermitian", hermiticity_error(k_q.matrix), 1e-12);

  double eigen_error = 0.0;
  for (const auto& k : sample_labels(sys, rng)) {
    const auto wave = duality::planewave(k);
    for (int j = 0; j < sys.qudits(); ++j) {
      const auto applied = analysis::apply_k_observable(wave, j);
      for (std::size_t i = 0; i < applied.size(); ++i) {
        eigen_error = std::max(
            eigen_error, std::abs(applied[i] - static_cast<double>(k[j]) * wave.amplitudes()[i]));
      }
    }
  }
  out.less("planewave_eigenstates", eigen_error, 1e-10);
  out.greater("commutator_norm", analysis::commutator_qk(d).frobenius_norm, 0.1);

  double deviation = 0.0;
  for (int q = 0; q < d; ++q) {
    deviation = std::max(deviation, analysis::verify_translation_identity(d, q));
  }
  out.less("translation_identity", deviation, 1e-10);
}

void entropy_checks(const QuditSystem& sys, std::mt19937_64& rng, Collector& out) {
  double min_sum = INFINITY;
  for (int t = 0; t < kEntropySamples; ++t) {
    min_sum = std::min(min_sum,
                       analysis::entropies(random_state(sys, Representation::Q, rng)).sum);
  }
  const double full = sys.qudits() * std::log(static_cast<double>(sys.levels()));
  double extreme = 0.0;
  for (const auto& label : sample_labels(sys, rng)) {
    const auto basis = analysis::entropies(StateVector::basis_state(label, Representation::Q));
    const auto wave = analysis::entropies(duality::planewave(label));
    min_sum = std::min({min_sum, basis.sum, wave.sum});
    extreme = std::max({extreme, std::abs(basis.h_q), std::abs(basis.h_k - full),
                        std::abs(wave.h_q - full), std::abs(wave.h_k)});
  }
  out.greater("entropy_sum_positive", min_sum, 0.0,
              std::to_string(kEntropySamples) + " random states plus basis states and planewaves");
  out.less("entropy_extremes", extreme, 1e-12);
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.skipped || c.passed; });
}

Report run(int d, int n, std::uint64_t seed) {
  const QuditSystem sys(n, d);
  std::mt19937_64 rng(seed);
  Collector out;
  fourier_checks(sys, rng, out);
  gate_checks(sys, rng, out);
  partition_checks(sys, rng, out);
  observable_checks(sys, rng, out);
  entropy_checks(sys, rng, out);
  return {d, n, seed, std::move(out.checks)};
}

io::Json to_json(const Report& r) {
  io::Json checks = io::Json::array();
  for (const auto& c : r.checks) {
    io::Json j;
    j["name"] = c.name;
    j["measured"] = c.measured;
    j["tolerance"] = c.tolerance;
    j["comparison"] = c.comparison == Comparison::Less      ? "<"
                      : c.comparison == Comparison::Greater ? ">"
                                                            : "==";
    j["passed"] = c.passed;
    if (c.skipped) j["skipped"] = true;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  io::Json doc;
  doc["d"] = r.d;
  doc["n"] = r.n;
  doc["seed"] = r.seed;
  doc["is_prime"] = is_prime(r.d);
  doc["passed"] = r.passed();
  doc["checks"] = std::move(checks);
  return doc;
}

}  // namespace qudual::verify

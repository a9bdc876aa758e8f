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

// Arithmetic over Z_d and Z_d^n: qudit systems, digit labels, modular dot
// products and the big-endian index convention shared by every module.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qudual {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad digit, bad wire, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands do not live in the same space (system, representation).
class Mismatch : public Error {
 public:
  using Error::Error;
};

/// A state or matrix failed a numerical validity check.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An n-qudit system with d levels per qudit; fixes the group Z_d^n.
class QuditSystem {
 public:
  /// Throws InvalidArgument unless n >= 1, d >= 2 and d^n fits in size_t.
  QuditSystem(int n, int d);

  int qudits() const noexcept { return n_; }
  int levels() const noexcept { return d_; }
  /// d^n
  std::size_t dim() const noexcept { return dim_; }
  /// Index distance between consecutive values of qudit `wire`.
  std::size_t stride(int wire) const;

  friend bool operator==(const QuditSystem&, const QuditSystem&) = default;

 private:
  int n_;
  int d_;
  std::size_t dim_;
};

/// Length-n digit string. Serves as both a basis-state label q and a
/// functional label k; the role is set by context.
class DigitLabel {
 public:
  DigitLabel(QuditSystem system, std::vector<int> digits);

  /// The all-zero label (identity element / zero functional).
  static DigitLabel zero(QuditSystem system);

  const QuditSystem& system() const noexcept { return system_; }
  std::span<const int> digits() const noexcept { return digits_; }
  int operator[](std::size_t j) const { return digits_.at(j); }
  std::size_t size() const noexcept { return digits_.size(); }

  /// Ket-style text: "12" for d <= 10, "1,11" otherwise.
  std::string to_string() const;

  friend bool operator==(const DigitLabel&, const DigitLabel&) = default;

 private:
  QuditSystem system_;
  std::vector<int> digits_;
};

/// Digit-wise addition modulo d.
DigitLabel add_mod(const DigitLabel& a, const DigitLabel& b);

/// Digit-wise additive inverse, so that add_mod(a, negate(a)) is zero.
DigitLabel negate(const DigitLabel& a);

/// (sum_j k_j q_j) mod d.
int dot_mod(const DigitLabel& k, const DigitLabel& q);

/// First qudit most significant: sum_j q_j d^(n-1-j).
std::size_t label_to_index(const DigitLabel& q);

DigitLabel index_to_label(std::size_t index, const QuditSystem& system);

/// All d^n labels in index order.
std::vector<DigitLabel> enumerate_labels(const QuditSystem& system);

/// Reporting only; nothing in the library depends on primality of d.
bool is_prime(int d);

/// Digit of qudit `wire` inside a flat basis index.
inline int digit_at(std::size_t index, std::size_t stride, int d) {
  return static_cast<int>((index / stride) % static_cast<std::size_t>(d));
}

}  // namespace qudual

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

// Small dense complex matrices. Used for single-qudit operators and for the
// brute-force oracles; full-system operators are never built on the hot path.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qudual {

using Complex = std::complex<double>;

/// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const Complex> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> data() const noexcept { return data_; }

  /// Conjugate transpose.
  CMatrix adjoint() const;

  std::vector<Complex> apply(std::span<const Complex> v) const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(Complex s, const CMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

double frobenius_norm(const CMatrix& m);

/// max_{r,c} |a(r,c) - b(r,c)|; shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// ||m m^dagger - I||_F
double unitarity_error(const CMatrix& m);

/// max entry of |m - m^dagger|
double hermiticity_error(const CMatrix& m);

Complex trace(const CMatrix& m);

/// Kronecker product a (x) b, a's index most significant.
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace qudual

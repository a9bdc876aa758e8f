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

#include "qudual/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qudual/group.hpp"

namespace qudual {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> entries) {
  CMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

std::vector<Complex> CMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != cols_) throw Mismatch("matrix-vector shape mismatch");
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw Mismatch("matrix product shape mismatch");
  CMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Mismatch("matrix difference shape mismatch");
  }
  CMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    out.data_[i] = a.data_[i] - b.data_[i];
  }
  return out;
}

CMatrix operator*(Complex s, const CMatrix& a) {
  CMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

double frobenius_norm(const CMatrix& m) {
  double acc = 0.0;
  for (const auto& x : m.data()) acc += std::norm(x);
  return std::sqrt(acc);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Mismatch("matrix comparison shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

double unitarity_error(const CMatrix& m) {
  if (!m.square()) return INFINITY;
  return frobenius_norm(m * m.adjoint() - CMatrix::identity(m.rows()));
}

double hermiticity_error(const CMatrix& m) {
  if (!m.square()) return INFINITY;
  return max_abs_diff(m, m.adjoint());
}

Complex trace(const CMatrix& m) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) acc += m(i, i);
  return acc;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
        }
      }
    }
  }
  return out;
}

}  // namespace qudual

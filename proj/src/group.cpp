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

#include "qudual/group.hpp"

#include <limits>

namespace qudual {

QuditSystem::QuditSystem(int n, int d) : n_(n), d_(d), dim_(1) {
  if (n < 1) {
    throw InvalidArgument("qudit count must be >= 1, got " + std::to_string(n));
  }
  if (d < 2) {
    throw InvalidArgument("level count must be >= 2, got " + std::to_string(d));
  }
  const auto ud = static_cast<std::size_t>(d);
  for (int j = 0; j < n; ++j) {
    if (dim_ > std::numeric_limits<std::size_t>::max() / ud) {
      throw InvalidArgument("dimension " + std::to_string(d) + "^" +
                            std::to_string(n) + " overflows the index range");
    }
    dim_ *= ud;
  }
}

std::size_t QuditSystem::stride(int wire) const {
  if (wire < 0 || wire >= n_) {
    throw InvalidArgument("wire " + std::to_string(wire) + " out of range [0, " +
                          std::to_string(n_) + ")");
  }
  std::size_t s = 1;
  for (int j = wire + 1; j < n_; ++j) s *= static_cast<std::size_t>(d_);
  return s;
}

DigitLabel::DigitLabel(QuditSystem system, std::vector<int> digits)
    : system_(system), digits_(std::move(digits)) {
  if (digits_.size() != static_cast<std::size_t>(system_.qudits())) {
    throw InvalidArgument("label has " + std::to_string(digits_.size()) +
                          " digits, system has " +
                          std::to_string(system_.qudits()) + " qudits");
  }
  for (int v : digits_) {
    if (v < 0 || v >= system_.levels()) {
      throw InvalidArgument("digit " + std::to_string(v) + " outside [0, " +
                            std::to_string(system_.levels()) + ")");
    }
  }
}

DigitLabel DigitLabel::zero(QuditSystem system) {
  return DigitLabel(system, std::vector<int>(system.qudits(), 0));
}

std::string DigitLabel::to_string() const {
  std::string out;
  const bool wide = system_.levels() > 10;
  for (std::size_t j = 0; j < digits_.size(); ++j) {
    if (wide && j > 0) out += ',';
    out += std::to_string(digits_[j]);
  }
  return out;
}

namespace {

void require_same_system(const DigitLabel& a, const DigitLabel& b) {
  if (a.system() != b.system()) {
    throw Mismatch("labels belong to different qudit systems");
  }
}

}  // namespace

DigitLabel add_mod(const DigitLabel& a, const DigitLabel& b) {
  require_same_system(a, b);
  const int d = a.system().levels();
  std::vector<int> out(a.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = static_cast<int>((std::int64_t{a[j]} + b[j]) % d);
  }
  return DigitLabel(a.system(), std::move(out));
}

DigitLabel negate(const DigitLabel& a) {
  const int d = a.system().levels();
  std::vector<int> out(a.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = (d - a[j]) % d;
  return DigitLabel(a.system(), std::move(out));
}

int dot_mod(const DigitLabel& k, const DigitLabel& q) {
  require_same_system(k, q);
  const int d = k.system().levels();
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    acc = (acc + std::int64_t{k[j]} * q[j]) % d;
  }
  return static_cast<int>(acc);
}

std::size_t label_to_index(const DigitLabel& q) {
  const auto d = static_cast<std::size_t>(q.system().levels());
  std::size_t index = 0;
  for (int v : q.digits()) index = index * d + static_cast<std::size_t>(v);
  return index;
}

DigitLabel index_to_label(std::size_t index, const QuditSystem& system) {
  if (index >= system.dim()) {
    throw InvalidArgument("index " + std::to_string(index) +
                          " out of range [0, " + std::to_string(system.dim()) +
                          ")");
  }
  const auto d = static_cast<std::size_t>(system.levels());
  std::vector<int> digits(system.qudits());
  for (int j = system.qudits() - 1; j >= 0; --j) {
    digits[j] = static_cast<int>(index % d);
    index /= d;
  }
  return DigitLabel(system, std::move(digits));
}

std::vector<DigitLabel> enumerate_labels(const QuditSystem& system) {
  std::vector<DigitLabel> out;
  out.reserve(system.dim());
  for (std::size_t i = 0; i < system.dim(); ++i) {
    out.push_back(index_to_label(i, system));
  }
  return out;
}

bool is_prime(int d) {
  if (d < 2) return false;
  for (int f = 2; f * f <= d; ++f) {
    if (d % f == 0) return false;
  }
  return true;
}

}  // namespace qudual

// Copyright 2026 The Rainbow Threshold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;
// Colors are 1..q; 0 is reserved for "uncolored" in dense arrays.
using Color = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // strictly ascending

inline constexpr Color kNoColor = 0;

// Thrown when an exact enumeration or materialization would exceed its cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (q)_k = q (q-1) ... (q-k+1). Exact in double while the product stays
// below 2^53; beyond that the usual rounding applies.
inline double falling_factorial(double q, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= (q - i);
  return out;
}

inline double log_falling_factorial(double q, int k) {
  if (k > q) return -INFINITY;
  return std::lgamma(q + 1.0) - std::lgamma(q - k + 1.0);
}

// Exact (q)_k when it fits in 64 bits.
inline std::optional<std::uint64_t> falling_factorial_u64(std::uint64_t q, int k) {
  if (k < 0) return std::nullopt;
  if (static_cast<std::uint64_t>(k) > q) return 0;
  unsigned __int128 out = 1;
  for (int i = 0; i < k; ++i) {
    out *= (q - static_cast<std::uint64_t>(i));
    if (out > static_cast<unsigned __int128>(UINT64_MAX)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(out);
}

inline double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return std::round(out);
}

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace rainbow

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

#include <iosfwd>
#include <optional>
#include <string>

#include "rainbow/kernels.hpp"

namespace rainbow {

// All estimates use the coupled model of kernels::hitting_time_for_trial:
// trial t reveals one ordering of X and one coloring, and X_m is the length-m
// prefix. Trial t always uses stream (seed, t), so any two estimates with the
// same seed share their trials.

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// 95% Wilson score interval by default.
Interval wilson_interval(std::size_t hits, std::size_t trials, double z = 1.96);

struct CurvePoint {
  std::size_t m = 0;
  std::size_t hits = 0;
  std::size_t trials = 0;
  std::size_t uncolored_hits = 0;

  double p_hat() const { return trials == 0 ? 0.0 : static_cast<double>(hits) / trials; }
  Interval ci() const { return wilson_interval(hits, trials); }
};

class UnreachableTarget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lazily extended table of coupled hitting times for trials 0, 1, ...
class HittingTimes {
 public:
  HittingTimes(const Hypergraph& h, int q, std::uint64_t seed);

  void ensure(std::size_t trials);
  std::size_t size() const { return times_.size(); }
  // Hits among the first `trials` trials at sample size m.
  CurvePoint point(std::size_t m, std::size_t trials) const;

 private:
  const Hypergraph* h_;
  int q_;
  std::uint64_t seed_;
  std::vector<kernels::TrialHit> times_;
};

CurvePoint hit_probability(const Hypergraph& h, int q, std::size_t m, std::size_t trials,
                           std::uint64_t seed);

// m_list must be sorted; every row uses the same `trials` trials.
std::vector<CurvePoint> sweep(const Hypergraph& h, int q, const std::vector<std::size_t>& m_list,
                              std::size_t trials, std::uint64_t seed);

struct ThresholdOptions {
  double target = 0.5;
  std::size_t trials = 10'000;  // budget per point
  std::size_t batch = 1'000;    // early-stopping granularity
  std::optional<double> kappa;  // default: max_spread(H)
};

struct ThresholdEstimate {
  std::size_t m_star = 0;
  double target = 0.5;
  std::size_t trials_per_point = 0;
  std::vector<CurvePoint> curve;  // evaluated points, sorted by m
  double ci_halfwidth = 0.0;      // of the hit rate at m_star
  // Smallest m whose interval reaches the target, and smallest m whose
  // interval lies entirely at or above it, both over the trials drawn.
  std::size_t m_ci_lo = 0;
  std::size_t m_ci_hi = 0;
  int levels = 0;  // bisection midpoints evaluated
  double kappa = 0.0;
  double implied_C = 0.0;  // m_star kappa / (N ln r)
};

// Smallest m in [r, N] with hit rate >= target. Each evaluated point draws
// trials in batches and stops once its interval excludes the target.
ThresholdEstimate estimate_threshold(const Hypergraph& h, int q, const ThresholdOptions& options,
                                     std::uint64_t seed);

// Rows "m,hits,trials,p_hat,ci_lo,ci_hi,uncolored_hits" after a header line.
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve);
std::string to_json(const ThresholdEstimate& estimate);

}  // namespace rainbow

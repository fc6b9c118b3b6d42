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

#include "rainbow/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "json.hpp"
#include "rainbow/spread.hpp"

namespace rainbow {

Interval wilson_interval(std::size_t hits, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {hits == 0 ? 0.0 : std::max(0.0, center - half), hits == trials ? 1.0 : std::min(1.0, center + half)};
}

HittingTimes::HittingTimes(const Hypergraph& h, int q, std::uint64_t seed) : h_(&h), q_(q), seed_(seed) {
  if (q < 1) throw std::invalid_argument("need at least one color");
}

void HittingTimes::ensure(std::size_t trials) {
  if (trials <= times_.size()) return;
  auto more = kernels::hitting_times(*h_, q_, seed_, times_.size(), trials - times_.size());
  times_.insert(times_.end(), more.begin(), more.end());
}

CurvePoint HittingTimes::point(std::size_t m, std::size_t trials) const {
  if (trials > times_.size()) throw std::logic_error("trials not yet drawn");
  CurvePoint out;
  out.m = m;
  out.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    if (times_[t].colored <= m) ++out.hits;
    if (times_[t].uncolored <= m) ++out.uncolored_hits;
  }
  return out;
}

CurvePoint hit_probability(const Hypergraph& h, int q, std::size_t m, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (m > h.num_vertices()) throw std::invalid_argument("m exceeds the ground set");
  HittingTimes times(h, q, seed);
  times.ensure(trials);
  return times.point(m, trials);
}

std::vector<CurvePoint> sweep(const Hypergraph& h, int q, const std::vector<std::size_t>& m_list,
                              std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (!std::is_sorted(m_list.begin(), m_list.end())) throw std::invalid_argument("m list must be sorted");
  if (!m_list.empty() && m_list.back() > h.num_vertices()) {
    throw std::invalid_argument("m exceeds the ground set");
  }
  HittingTimes times(h, q, seed);
  times.ensure(trials);
  std::vector<CurvePoint> out;
  for (std::size_t m : m_list) out.push_back(times.point(m, trials));
  return out;
}

ThresholdEstimate estimate_threshold(const Hypergraph& h, int q, const ThresholdOptions& options,
                                     std::uint64_t seed) {
  if (options.trials == 0 || options.batch == 0) throw std::invalid_argument("trials must be positive");
  if (!(options.target > 0.0 && options.target <= 1.0)) throw std::invalid_argument("target must lie in (0, 1]");
  if (h.num_edges() == 0) throw UnreachableTarget("unreachable: hypergraph has no edges");
  const std::size_t n = h.num_vertices();
  const std::size_t r = h.min_edge_size();
  if (static_cast<std::size_t>(q) < r) throw UnreachableTarget("unreachable: q < r, no edge can be rainbow");

  HittingTimes times(h, q, seed);
  std::map<std::size_t, CurvePoint> evaluated;
  auto evaluate = [&](std::size_t m) -> const CurvePoint& {
    std::size_t drawn = std::min(options.batch, options.trials);
    while (true) {
      times.ensure(drawn);
      const CurvePoint pt = times.point(m, drawn);
      const Interval ci = pt.ci();
      if (ci.lo > options.target || ci.hi < options.target || drawn >= options.trials) {
        return evaluated[m] = pt;
      }
      drawn = std::min(options.trials, drawn + options.batch);
    }
  };
  auto reaches = [&](const CurvePoint& pt) { return pt.p_hat() >= options.target; };

  ThresholdEstimate est;
  est.target = options.target;
  est.trials_per_point = options.trials;
  if (!reaches(evaluate(n))) {
    throw UnreachableTarget("unreachable: hit rate at m = N is below the target");
  }
  if (reaches(evaluate(r))) {
    est.m_star = r;
  } else {
    std::size_t lo = r, hi = n;
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      ++est.levels;
      (reaches(evaluate(mid)) ? hi : lo) = mid;
    }
    est.m_star = hi;
  }
  for (const auto& [m, pt] : evaluated) est.curve.push_back(pt);
  const Interval at_star = evaluated.at(est.m_star).ci();
  est.ci_halfwidth = (at_star.hi - at_star.lo) / 2.0;

  est.m_ci_lo = est.m_ci_hi = n;
  bool lo_set = false;
  for (std::size_t m = r; m <= n; ++m) {
    const Interval ci = times.point(m, times.size()).ci();
    if (!lo_set && ci.hi >= options.target) {
      est.m_ci_lo = m;
      lo_set = true;
    }
    if (ci.lo >= options.target) {
      est.m_ci_hi = m;
      break;
    }
  }

  est.kappa = options.kappa ? *options.kappa : max_spread(h).kappa;
  const double log_r = std::log(static_cast<double>(h.r_bound()));
  est.implied_C = log_r > 0.0 ? est.m_star * est.kappa / (static_cast<double>(n) * log_r)
                              : std::numeric_limits<double>::quiet_NaN();
  return est;
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve) {
  out << "m,hits,trials,p_hat,ci_lo,ci_hi,uncolored_hits\n";
  for (const auto& pt : curve) {
    const Interval ci = pt.ci();
    nlohmann::json num = {pt.p_hat(), ci.lo, ci.hi};
    out << pt.m << ',' << pt.hits << ',' << pt.trials << ',' << num[0].dump() << ',' << num[1].dump() << ','
        << num[2].dump() << ',' << pt.uncolored_hits << '\n';
  }
}

std::string to_json(const ThresholdEstimate& e) {
  nlohmann::ordered_json doc;
  doc["m_star"] = e.m_star;
  doc["target"] = e.target;
  doc["trials_per_point"] = e.trials_per_point;
  doc["ci_halfwidth"] = e.ci_halfwidth;
  doc["m_ci"] = {e.m_ci_lo, e.m_ci_hi};
  doc["levels"] = e.levels;
  doc["kappa"] = e.kappa;
  doc["implied_C"] = e.implied_C;
  auto& curve = doc["curve"] = nlohmann::ordered_json::array();
  for (const auto& pt : e.curve) {
    curve.push_back({{"m", pt.m}, {"hits", pt.hits}, {"trials", pt.trials}, {"uncolored_hits", pt.uncolored_hits}});
  }
  return doc.dump();
}

}  // namespace rainbow

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

#include "rainbow/moments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "json.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/spread.hpp"

namespace rainbow {
namespace {

constexpr double kRelTol = 1e-12;
const double kE = std::exp(1.0);

bool leq(double a, double b) { return a <= b + kRelTol * std::max(std::fabs(a), std::fabs(b)); }

void require_uniform(const Hypergraph& h, int q) {
  if (!h.is_uniform()) throw std::invalid_argument("moment computations need an r-uniform hypergraph");
  if (q < h.r_bound()) throw std::invalid_argument("moment computations need q >= r");
}

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

bool MomentReport::all_asserted_hold() const {
  return std::all_of(chain_bounds.begin(), chain_bounds.end(),
                     [](const ChainBound& b) { return !b.asserted || b.holds; });
}

std::vector<std::uint64_t> pair_intersection_histogram(const Hypergraph& h) {
  const int r = h.r_bound();
  const auto count = static_cast<std::int64_t>(h.num_edges());
  std::vector<std::uint64_t> hist(r + 1, 0);
  // Integer partial histograms: the result is independent of scheduling.
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(r + 1, 0);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t a = 0; a < count; ++a) {
      const auto& ea = h.edge(a);
      for (const auto& eb : h.edges()) {
        int shared = 0;
        std::size_t i = 0, j = 0;
        while (i < ea.size() && j < eb.size()) {
          if (ea[i] < eb[j]) {
            ++i;
          } else if (eb[j] < ea[i]) {
            ++j;
          } else {
            ++shared;
            ++i;
            ++j;
          }
        }
        ++local[shared];
      }
    }
#pragma omp critical
    for (int t = 0; t <= r; ++t) hist[t] += local[t];
  }
  return hist;
}

double janson_mu(const Hypergraph& h, int q, double p) {
  require_uniform(h, q);
  require_probability(p, "p");
  const int r = h.r_bound();
  return static_cast<double>(h.num_edges()) * falling_factorial(q, r) * std::pow(1.0 - p, r);
}

kernels::PairSums delta_by_pairs(const Hypergraph& h, int q, double p, std::size_t cap) {
  require_uniform(h, q);
  const auto lifts = lift_rainbow(h, q, cap);
  return kernels::delta_pair_sums(h, lifts, p);
}

double agreement_count(int q, int r, int t, int j) {
  if (j < 0 || j > t || t > r) return 0.0;
  // Inclusion-exclusion over which of the other t-j shared vertices also agree.
  long double exact = 0.0L;
  for (int i = 0; i <= t - j; ++i) {
    const long double term = static_cast<long double>(binomial_coefficient(t - j, i)) *
                             falling_factorial(q - j - i, r - j - i);
    exact += (i % 2 == 0) ? term : -term;
  }
  return static_cast<double>(static_cast<long double>(binomial_coefficient(t, j)) * exact);
}

kernels::PairSums delta_by_aggregation(const Hypergraph& h, int q, double p) {
  require_uniform(h, q);
  require_probability(p, "p");
  const int r = h.r_bound();
  const auto hist = pair_intersection_histogram(h);
  const double lifts_per_edge = falling_factorial(q, r);
  CompensatedSum colored, vertex;
  for (int t = 1; t <= r; ++t) {
    if (hist[t] == 0) continue;
    const double pairs = static_cast<double>(hist[t]);
    vertex.add(pairs * lifts_per_edge * lifts_per_edge * std::pow(1.0 - p, 2 * r - t));
    for (int j = 1; j <= t; ++j) {
      colored.add(pairs * lifts_per_edge * agreement_count(q, r, t, j) * std::pow(1.0 - p, 2 * r - j));
    }
  }
  return {colored.value(), vertex.value()};
}

double janson_delta_exact(const Hypergraph& h, int q, double p) {
  return delta_by_aggregation(h, q, p).colored;
}

MomentReport janson_chain_check(const Hypergraph& h, int q, double p, double kappa) {
  require_uniform(h, q);
  require_probability(p, "p");
  const auto spread = is_kappa_spread(h, kappa);
  if (!spread.pass) throw std::invalid_argument("hypergraph is not kappa-spread for the given kappa");
  const int r = h.r_bound();

  MomentReport out;
  out.mu = janson_mu(h, q, p);
  const auto sums = delta_by_aggregation(h, q, p);
  out.delta = sums.colored;
  out.delta_vertex = sums.vertex;
  const double mu2 = out.mu * out.mu;
  if (out.delta > 0.0) out.janson_bound = std::exp(-mu2 / (8.0 * out.delta));
  if (out.delta_vertex > 0.0) out.janson_bound_vertex = std::exp(-mu2 / (8.0 * out.delta_vertex));

  const double intermediate =
      p < 1.0 ? mu2 * (std::pow(1.0 + kE / (q * kappa * (1.0 - p)), r) - 1.0) : 0.0;
  const double exp_form = mu2 * (std::exp(3.0 * r / (q * kappa)) - 1.0);
  const double final_form = 4.0 * mu2 / kappa;
  out.gated = q >= r && p <= 0.09 && kappa >= 11.0;

  out.chain_bounds.push_back({"delta_exact", out.delta, true, false});
  out.chain_bounds.push_back({"intermediate", intermediate, leq(out.delta, intermediate), true});
  out.chain_bounds.push_back({"exp_form", exp_form, leq(intermediate, exp_form), false});
  out.chain_bounds.push_back({"final_4mu2_over_kappa", final_form, leq(exp_form, final_form), false});
  out.chain_bounds.push_back({"delta_le_final", final_form, leq(out.delta, final_form), out.gated});
  return out;
}

ChebyshevReport chebyshev_report(const Hypergraph& g, int q, double alpha, std::optional<double> kappa) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (g.num_edges() == 0) throw std::invalid_argument("empty hypergraph");
  if (q < g.r_bound()) throw std::invalid_argument("chebyshev_report needs q >= r");
  ChebyshevReport out;
  out.kappa = kappa ? *kappa : max_spread(g).kappa;
  const Hypergraph padded = pad_to_uniform(g);
  const int r = padded.r_bound();
  out.r = r;
  const double single = std::pow(alpha, r) * falling_factorial(q, r) / std::pow(q, r);
  out.mu = static_cast<double>(padded.num_edges()) * single;
  const auto hist = pair_intersection_histogram(padded);
  CompensatedSum delta, variance;
  for (int t = 1; t <= r; ++t) {
    if (hist[t] == 0) continue;
    const double joint = std::pow(alpha, 2 * r - t) * falling_factorial(q, r) *
                         falling_factorial(q - t, r - t) / std::pow(q, 2 * r - t);
    delta.add(static_cast<double>(hist[t]) * joint);
    variance.add(static_cast<double>(hist[t]) * (joint - single * single));
  }
  out.delta = delta.value();
  out.variance = std::max(0.0, variance.value());
  const double mu2 = out.mu * out.mu;
  out.chebyshev_bound = mu2 > 0.0 ? std::min(1.0, out.variance / mu2) : 1.0;
  out.delta_bound = mu2 > 0.0 ? std::min(1.0, out.delta / mu2) : 1.0;
  out.spread_bound = 2.0 * kE * r / (alpha * out.kappa);
  out.spread_variance_bound = out.spread_bound * mu2;
  return out;
}

double exact_uncovered_probability(const Hypergraph& g, int q, double alpha, std::size_t max_states) {
  const std::size_t n = g.num_vertices();
  double states = std::pow(q + 1.0, static_cast<double>(n));
  if (states > static_cast<double>(max_states)) {
    throw CapExceeded("exact enumeration needs " + std::to_string(states) + " states");
  }
  // state[v] = 0 for absent, c in 1..q for present with color c.
  std::vector<Color> state(n, 0);
  const double absent = 1.0 - alpha;
  const double present = alpha / q;
  CompensatedSum uncovered;
  while (true) {
    bool covered = false;
    for (const auto& e : g.edges()) {
      bool ok = true;
      for (std::size_t i = 0; i < e.size() && ok; ++i) {
        if (state[e[i]] == 0) ok = false;
        for (std::size_t j = 0; j < i && ok; ++j) {
          if (state[e[i]] == state[e[j]]) ok = false;
        }
      }
      if (ok) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      double weight = 1.0;
      for (Color c : state) weight *= (c == 0 ? absent : present);
      uncovered.add(weight);
    }
    std::size_t v = 0;
    while (v < n && state[v] == static_cast<Color>(q)) state[v++] = 0;
    if (v == n) break;
    ++state[v];
  }
  return uncovered.value();
}

BinomialMedian binomial_median_check(int n, double p) {
  require_probability(p, "p");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const double mean = n * p;
  const double rounded = std::round(mean);
  if (std::fabs(mean - rounded) > 1e-9) throw std::invalid_argument("np must be an integer");
  const int k = static_cast<int>(rounded);
  long double cdf = 0.0L;
  for (int i = 0; i <= k; ++i) {
    cdf += static_cast<long double>(binomial_coefficient(n, i)) * std::pow(static_cast<long double>(p), i) *
           std::pow(1.0L - p, n - i);
  }
  BinomialMedian out;
  out.cdf_at_mean = static_cast<double>(std::min(cdf, 1.0L));
  out.holds = out.cdf_at_mean >= 0.5;
  return out;
}

EmpiricalMoments empirical_untouched(const Hypergraph& h, int q, double p, std::uint64_t seed,
                                     std::size_t trials) {
  require_uniform(h, q);
  if (trials < 2) throw std::invalid_argument("need at least two trials");
  const double scale = falling_factorial(q, h.r_bound());
  const double mu = janson_mu(h, q, p);
  const auto counts = kernels::untouched_edge_counts(h, q, p, seed, trials);
  CompensatedSum sum;
  std::size_t low = 0;
  for (auto c : counts) {
    const double z = scale * c;
    sum.add(z);
    if (z <= mu / 2.0) ++low;
  }
  EmpiricalMoments out;
  out.mean = sum.value() / static_cast<double>(trials);
  CompensatedSum squares;
  for (auto c : counts) squares.add(std::pow(scale * c - out.mean, 2));
  out.stddev = std::sqrt(squares.value() / static_cast<double>(trials - 1));
  out.standard_error = out.stddev / std::sqrt(static_cast<double>(trials));
  out.lower_tail_frequency = static_cast<double>(low) / static_cast<double>(trials);
  return out;
}

std::string to_json(const MomentReport& report) {
  nlohmann::ordered_json doc;
  doc["kind"] = "janson";
  doc["mu"] = report.mu;
  doc["delta"] = report.delta;
  doc["delta_vertex"] = report.delta_vertex;
  doc["janson_bound"] = report.janson_bound;
  doc["janson_bound_vertex"] = report.janson_bound_vertex;
  doc["gated"] = report.gated;
  auto& chain = doc["chain_bounds"] = nlohmann::ordered_json::array();
  for (const auto& b : report.chain_bounds) {
    chain.push_back({{"label", b.label}, {"value", b.value}, {"holds", b.holds}, {"asserted", b.asserted}});
  }
  return doc.dump();
}

std::string to_json(const ChebyshevReport& report) {
  nlohmann::ordered_json doc;
  doc["kind"] = "chebyshev";
  doc["r"] = report.r;
  doc["kappa"] = report.kappa;
  doc["mu"] = report.mu;
  doc["delta"] = report.delta;
  doc["variance"] = report.variance;
  doc["chebyshev_bound"] = report.chebyshev_bound;
  doc["delta_bound"] = report.delta_bound;
  doc["spread_variance_bound"] = report.spread_variance_bound;
  doc["spread_bound"] = report.spread_bound;
  return doc.dump();
}

void write_human(std::ostream& out, const MomentReport& report) {
  out << std::setprecision(10);
  out << "mu                  " << report.mu << '\n';
  out << "delta (colored)     " << report.delta << '\n';
  out << "delta (vertex)      " << report.delta_vertex << '\n';
  out << "janson bound        " << report.janson_bound << '\n';
  out << "janson bound (vtx)  " << report.janson_bound_vertex << '\n';
  out << "final link gated    " << (report.gated ? "yes" : "no") << '\n';
  for (const auto& b : report.chain_bounds) {
    out << "  " << std::left << std::setw(24) << b.label << std::setw(18) << b.value
        << (b.holds ? "holds" : (b.asserted ? "FAILS" : "fails")) << (b.asserted ? " (asserted)" : " (reported)")
        << '\n';
  }
}

void write_human(std::ostream& out, const ChebyshevReport& report) {
  out << std::setprecision(10);
  out << "r (padded)          " << report.r << '\n';
  out << "kappa               " << report.kappa << '\n';
  out << "mu                  " << report.mu << '\n';
  out << "delta               " << report.delta << '\n';
  out << "variance            " << report.variance << '\n';
  out << "Pr(Z=0) <= (Cheb.)  " << report.chebyshev_bound << '\n';
  out << "Pr(Z=0) <= (delta)  " << report.delta_bound << '\n';
  out << "2er/(alpha kappa)   " << report.spread_bound << '\n';
}

}  // namespace rainbow

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

// Second-moment quantities for the untouched-lift count
// Z = |{H* : ξ(H*) ∩ ξ(W*_p) = ∅}| and for the small-edge endgame.
//
// Delta is computed two ways. "colored" sums over ordered pairs of lifted
// edges that share a (vertex, color) element, weighted (1-p)^{2r-|H*∩J*|}.
// "vertex" sums over pairs whose base edges meet, weighted by the true
// joint probability; the two differ because Z's indicators depend only on
// vertices. Self-pairs are included in both.

struct ChainBound {
  std::string label;
  double value = 0.0;
  bool holds = true;     // value compared against the previous link / exact term
  bool asserted = false; // a failure here is an error, not just a report
};

struct MomentReport {
  double mu = 0.0;
  double delta = 0.0;          // colored-intersection sum
  double delta_vertex = 0.0;   // vertex-intersection sum
  double janson_bound = 1.0;   // exp(-mu^2 / (8 delta))
  double janson_bound_vertex = 1.0;
  std::vector<ChainBound> chain_bounds;
  bool gated = false;          // final-link assertion applies
  bool all_asserted_hold() const;
};

// Ordered base-edge pairs (self-pairs included) by intersection size.
std::vector<std::uint64_t> pair_intersection_histogram(const Hypergraph& h);

// |H| (q)_r (1-p)^r.
double janson_mu(const Hypergraph& h, int q, double p);

// Pair enumeration over the materialized lift.
kernels::PairSums delta_by_pairs(const Hypergraph& h, int q, double p,
                                 std::size_t cap = kDefaultLiftCap);
// Grouping by (base pair, shared vertices, shared colors) and counting
// compatible colorings in closed form.
kernels::PairSums delta_by_aggregation(const Hypergraph& h, int q, double p);

// Number of injective colorings of an r-set F (from [q]) that agree with a
// fixed injective coloring of E on exactly j of the t shared vertices.
double agreement_count(int q, int r, int t, int j);

double janson_delta_exact(const Hypergraph& h, int q, double p);

// Evaluates the Delta bound chain. Requires an r-uniform h that is
// kappa-spread (checked) and q >= r.
MomentReport janson_chain_check(const Hypergraph& h, int q, double p, double kappa);

struct ChebyshevReport {
  int r = 0;
  double kappa = 0.0;
  double mu = 0.0;
  double delta = 0.0;              // sum over intersecting pairs of E(ζζ)
  double variance = 0.0;           // exact Var(Z)
  double chebyshev_bound = 1.0;    // min(1, Var/mu^2)
  double delta_bound = 1.0;        // min(1, delta/mu^2)
  double spread_variance_bound = 0.0;  // 2 e r mu^2 / (alpha kappa)
  double spread_bound = 0.0;        // 2 e r / (alpha kappa)
};

// Moments of Z = number of edges of G covered by Y*_alpha and rainbow.
// G is padded to r-uniform first; kappa defaults to max_spread(G).
ChebyshevReport chebyshev_report(const Hypergraph& g, int q, double alpha,
                                 std::optional<double> kappa = std::nullopt);

// Pr(Y*_alpha contains no rainbow edge of G) by enumerating all (q+1)^N
// vertex states. Throws CapExceeded above `max_states`.
double exact_uncovered_probability(const Hypergraph& g, int q, double alpha,
                                   std::size_t max_states = 20'000'000);

struct BinomialMedian {
  double cdf_at_mean = 0.0;
  bool holds = false;  // cdf_at_mean >= 1/2
};

// Pr(Bin(n, p) <= np) for integral np.
BinomialMedian binomial_median_check(int n, double p);

struct EmpiricalMoments {
  double mean = 0.0;
  double stddev = 0.0;
  double standard_error = 0.0;
  double lower_tail_frequency = 0.0;  // fraction of trials with Z <= mu/2
};

// Monte Carlo over W*_p of the untouched-lift count.
EmpiricalMoments empirical_untouched(const Hypergraph& h, int q, double p, std::uint64_t seed,
                                     std::size_t trials);

std::string to_json(const MomentReport& report);
std::string to_json(const ChebyshevReport& report);
void write_human(std::ostream& out, const MomentReport& report);
void write_human(std::ostream& out, const ChebyshevReport& report);

}  // namespace rainbow

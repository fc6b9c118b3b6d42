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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "rainbow/fragmentation.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/moments.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/spread.hpp"
#include "rainbow/threshold.hpp"
#include "support.hpp"

using namespace rainbow;
using testing::brute_lift;
using testing::brute_max_spread;
using testing::colored_subset;
using testing::complete_graph;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double factorial(int n) {
  double out = 1.0;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt formula(const std::string& spec) { return count_formula(parse_structure_spec(spec)); }

// Loose 3-uniform Hamilton cycles on 6 vertices: triples of triples that
// pairwise share exactly one vertex and cover all six vertices.
std::set<std::set<VertexSet>> loose_6_3_oracle() {
  std::vector<VertexSet> triples;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      for (Vertex c = b + 1; c < 6; ++c) triples.push_back({a, b, c});
  auto meet = [](const VertexSet& x, const VertexSet& y) {
    VertexSet both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
    return both.size();
  };
  std::set<std::set<VertexSet>> out;
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j)
      for (std::size_t k = j + 1; k < triples.size(); ++k) {
        const auto &x = triples[i], &y = triples[j], &z = triples[k];
        std::set<Vertex> cover(x.begin(), x.end());
        cover.insert(y.begin(), y.end());
        cover.insert(z.begin(), z.end());
        if (meet(x, y) == 1 && meet(y, z) == 1 && meet(x, z) == 1 && cover.size() == 6) out.insert({x, y, z});
      }
  return out;
}

void criterion_1(Outcome& o) {
  const std::size_t hamilton[] = {3, 12, 60, 360};
  for (int n = 4; n <= 7; ++n) {
    const std::size_t closed = static_cast<std::size_t>(factorial(n - 1) / 2);
    const std::size_t got = gen_hamilton(n).num_edges();
    o.require(got == closed && got == hamilton[n - 4], "hamilton n=" + std::to_string(n));
    o.require(formula("hamilton:n=" + std::to_string(n)) == closed, "hamilton formula");
  }
  for (auto [n, k, expected] : {std::tuple{4, 2, 3}, {6, 2, 15}, {6, 3, 10}}) {
    const double closed = factorial(n) / (factorial(n / k) * std::pow(factorial(k), n / k));
    const std::size_t got = gen_perfect_matching(n, k).num_edges();
    o.require(got == static_cast<std::size_t>(expected) && closed == expected, "pm generation");
    o.require(formula("pm:n=" + std::to_string(n) + ",k=" + std::to_string(k)) == expected, "pm formula");
  }
  o.require(formula("pm:n=12,k=2") == 10395, "pm(12,2) formula");

  const Hypergraph loose = gen_loose_hamilton(6, 3);
  std::set<std::set<VertexSet>> generated;
  for (const auto& e : loose.edges()) {
    std::set<VertexSet> cycle;
    for (Vertex v : e) cycle.insert(subset_unrank(v, 6, 3));
    generated.insert(cycle);
  }
  const auto oracle = loose_6_3_oracle();
  o.require(loose.num_edges() == 120 && oracle.size() == 120 && generated == oracle, "loose(6,3)");
  o.require(formula("loose:n=6,k=3") == 120, "loose formula");
  o.detail << "hamilton 3/12/60/360, pm 3/15/10/10395, loose(6,3) 120 = independent enumeration";
}

void criterion_2(Outcome& o) {
  const auto check = [&](const Hypergraph& h, double expected, const char* name) {
    const double library = max_spread(h).kappa;
    const double brute = brute_max_spread(h).kappa;
    o.require(std::fabs(library - expected) <= 1e-12 && std::fabs(brute - expected) <= 1e-12, name);
    o.detail << name << " kappa " << std::setprecision(15) << library << "; ";
  };
  check(gen_hamilton(4), std::sqrt(1.5), "HC(K4)");
  check(gen_perfect_matching(4, 2), std::sqrt(3.0), "PM(4,2)");
  for (int n = 4; n <= 7; ++n) {
    const Hypergraph h = gen_hamilton(n);
    for (Vertex x = 0; x < h.num_vertices(); ++x) {
      o.require(containment_count(h, {x}) * (n - 1) == 2 * h.num_edges(), "HC ratio n=" + std::to_string(n));
    }
  }
  o.detail << "single-element ratio 2/(n-1) exact for n=4..7";
}

// Every rainbow colored subset of X x [q], by walking all (q+1)^N states.
std::vector<ColoredSet> rainbow_subsets(std::size_t n, int q) {
  std::vector<ColoredSet> out;
  std::vector<Color> state(n, 0);
  while (true) {
    std::set<Color> used;
    std::vector<Assignment> items;
    bool rainbow = true;
    for (Vertex v = 0; v < n; ++v) {
      if (state[v] == 0) continue;
      rainbow = rainbow && used.insert(state[v]).second;
      items.push_back({v, state[v]});
    }
    if (rainbow && !items.empty()) out.emplace_back(items);
    std::size_t v = 0;
    while (v < n && state[v] == static_cast<Color>(q)) state[v++] = 0;
    if (v == n) break;
    ++state[v];
  }
  return out;
}

void criterion_3(Outcome& o) {
  struct Instance {
    std::string name;
    Hypergraph h;
    int q_lo, q_hi;
  };
  const std::vector<Instance> instances = {{"single edge", Hypergraph(2, {{0, 1}}), 2, 4},
                                           {"HC(K4)", gen_hamilton(4), 4, 6},
                                           {"PM(4,2)", gen_perfect_matching(4, 2), 2, 4}};
  std::size_t checked = 0;
  double worst = 0.0;
  for (const auto& inst : instances) {
    const double kappa = brute_max_spread(inst.h).kappa;
    for (int q = inst.q_lo; q <= inst.q_hi; ++q) {
      const auto lift = brute_lift(inst.h, q);
      const double total = static_cast<double>(lift.size());
      for (const auto& s : rainbow_subsets(inst.h.num_vertices(), q)) {
        std::size_t count = 0;
        for (const auto& e : lift) count += colored_subset(s, e);
        const double sz = static_cast<double>(s.size());
        const double bound = std::exp(sz) * total / std::pow(q * kappa, sz);
        o.require(count <= bound, inst.name + " q=" + std::to_string(q));
        o.require(static_cast<double>(count) == lifted_containment_count(inst.h, q, s), "closed form");
        worst = std::max(worst, count / bound);
        ++checked;
      }
    }
  }
  o.detail << checked << " rainbow sets checked, max count/bound " << std::setprecision(4) << worst;
}

void criterion_4(Outcome& o) {
  struct Instance {
    std::string name;
    Hypergraph h;
    int q;
    double p;
  };
  const std::vector<Instance> instances = {
      {"HC(K4) q4", gen_hamilton(4), 4, 0.1},           {"HC(K4) q6", gen_hamilton(4), 6, 0.3},
      {"PM(4,2) q3", gen_perfect_matching(4, 2), 3, 0.2}, {"PM(6,2) q4", gen_perfect_matching(6, 2), 4, 0.05},
      {"loose(6,3) q3", gen_loose_hamilton(6, 3), 3, 0.5}, {"K7 q3", complete_graph(7), 3, 0.15},
      {"HC(K5) q5", gen_hamilton(5), 5, 0.08}};
  double worst_rel = 0.0;
  for (const auto& inst : instances) {
    const auto pairs = delta_by_pairs(inst.h, inst.q, inst.p);
    const auto agg = delta_by_aggregation(inst.h, inst.q, inst.p);
    const double rel = std::fabs(pairs.colored - agg.colored) / agg.colored;
    worst_rel = std::max(worst_rel, rel);
    o.require(rel <= 1e-10, inst.name + " dual path");

    const double kappa = max_spread(inst.h).kappa;
    const double mu = janson_mu(inst.h, inst.q, inst.p);
    const int r = inst.h.r_bound();
    const double intermediate = mu * mu * (std::pow(1 + std::exp(1.0) / (inst.q * kappa * (1 - inst.p)), r) - 1);
    o.require(agg.colored <= intermediate, inst.name + " intermediate bound");
    const MomentReport report = janson_chain_check(inst.h, inst.q, inst.p, kappa);
    o.require(report.all_asserted_hold(), inst.name + " asserted chain");
  }
  o.detail << instances.size() << " instances, max relative gap " << std::scientific << std::setprecision(2)
           << worst_rel << std::defaultfloat << "; ";

  const Hypergraph k60 = complete_graph(60);
  for (double kappa : {15.0, 30.0}) {
    const MomentReport report = janson_chain_check(k60, 60, 0.05, kappa);
    const double final_form = 4 * report.mu * report.mu / kappa;
    o.require(report.gated, "K60 gate");
    o.require(report.delta <= final_form, "K60 delta <= 4 mu^2/kappa");
    o.require(report.all_asserted_hold(), "K60 asserted chain");
    o.detail << "K60 kappa=" << kappa << ": delta/(4mu^2/kappa) = " << std::setprecision(4)
             << report.delta / final_form << "; ";
  }
}

void criterion_5(Outcome& o) {
  const Hypergraph pm = gen_perfect_matching(8, 2);
  const double mu = janson_mu(pm, 4, 0.1);
  const EmpiricalMoments em = empirical_untouched(pm, 4, 0.1, 5, 10'000);
  const double z = (em.mean - mu) / em.standard_error;
  o.require(std::fabs(z) <= 3.0, "within 3 sigma");
  o.detail << "mu " << mu << ", empirical " << em.mean << " (z = " << std::setprecision(3) << z << ")";
}

void criterion_6(Outcome& o) {
  const Hypergraph k40 = complete_graph(40);
  const ChebyshevReport report = chebyshev_report(k40, 4, 0.8);
  const double bound = 2 * std::exp(1.0) * 2 / (0.8 * 20);
  o.require(std::fabs(report.kappa - 20.0) <= 1e-12, "kappa(K40) = 20");
  o.require(std::fabs(report.spread_bound - bound) <= 1e-12, "bound value");
  const auto miss = kernels::uncovered_indicators(k40, 4, 0.8, 6, 10'000);
  double rate = 0;
  for (auto m : miss) rate += m;
  rate /= miss.size();
  o.require(rate <= bound, "empirical <= 2er/(alpha kappa)");
  o.detail << "K40 uncovered " << rate << " <= " << std::setprecision(4) << bound << "; ";

  const Hypergraph k6 = complete_graph(6);
  const double exact = exact_uncovered_probability(k6, 4, 0.8);
  const auto small = kernels::uncovered_indicators(k6, 4, 0.8, 7, 10'000);
  double small_rate = 0;
  for (auto m : small) small_rate += m;
  small_rate /= small.size();
  const double sigma = std::sqrt(exact * (1 - exact) / small.size());
  o.require(std::fabs(small_rate - exact) <= 3 * sigma, "K6 exact vs empirical");
  o.detail << "K6 q4 exact " << std::setprecision(6) << exact << ", empirical " << small_rate;
}

void criterion_7(Outcome& o) {
  struct Instance {
    std::string name;
    Hypergraph h;
    int q;
  };
  const std::vector<Instance> instances = {{"PM(8,2)", gen_perfect_matching(8, 2), 4}, {"HC(K6)", gen_hamilton(6), 6}};
  for (const auto& inst : instances) {
    FragmentationOptions opt;
    opt.C = 1.0;
    opt.allow_infeasible = true;
    opt.keep_history = true;
    std::size_t hits = 0, all_ok = 0, prefix_rounds = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const FragmentationTrace t = run_fragmentation(inst.h, inst.q, opt, seed);
      if (t.endgame_hit) {
        ++hits;
        o.require(contains_rainbow_edge(inst.h, t.accumulated).has_value(), inst.name + " (a)");
      }
      bool small = true;
      for (std::size_t i = 1; i < t.survivor_history.size(); ++i) {
        for (const auto& f : t.survivor_history[i]) {
          small = small && static_cast<double>(f.remaining.size()) <= t.schedule.r_i[i];
        }
      }
      o.require(small, inst.name + " (b)");
      std::ostringstream first, second;
      write_trace_jsonl(first, t);
      write_trace_jsonl(second, run_fragmentation(inst.h, inst.q, opt, seed));
      o.require(first.str() == second.str(), inst.name + " (c)");
      if (t.all_successful) {
        ++all_ok;
        o.require(2 * t.final_survivors > t.initial_survivors, inst.name + " (d)");
      }
      // The same count holds after every prefix of successful rounds.
      for (const auto& rec : t.rounds) {
        if (!rec.successful) break;
        ++prefix_rounds;
        o.require(2 * rec.survivors_after > t.initial_survivors, inst.name + " (d) prefix");
      }
    }
    o.detail << inst.name << ": endgame hits " << hits << "/200, all-successful " << all_ok
             << "/200, successful-prefix rounds " << prefix_rounds << "; ";
  }
}

void criterion_8(Outcome& o) {
  const Hypergraph hc = gen_hamilton(7);
  const std::size_t n = hc.num_vertices();

  // Per-trial monotonicity, rebuilt from the trial's own stream.
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const auto hit = kernels::hitting_time_for_trial(hc, 7, 11, trial);
    RngStream rng(11, trial);
    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
    for (std::size_t i = 0; i + 1 < n; ++i) std::swap(order[i], order[i + rng.uniform_below(n - i)]);
    std::vector<Color> color(n);
    for (auto& c : color) c = static_cast<Color>(1 + rng.uniform_below(7));
    bool seen = false;
    for (std::size_t m = 0; m <= n; ++m) {
      std::vector<Assignment> prefix;
      for (std::size_t i = 0; i < m; ++i) prefix.push_back({order[i], color[order[i]]});
      const bool now = contains_rainbow_edge(hc, ColoredSet(prefix)).has_value();
      o.require(!seen || now, "monotone in m");
      o.require(now == (hit.colored <= m), "hitting time");
      seen = now;
    }
  }

  ThresholdOptions opt;
  opt.trials = 10'000;
  for (std::size_t single_n : {10u, 11u}) {
    const auto est = estimate_threshold(Hypergraph(single_n, {{0}}), 1, opt, 12);
    const std::size_t half = (single_n + 1) / 2;
    o.require(est.m_ci_lo <= half && half <= est.m_ci_hi, "single edge N=" + std::to_string(single_n));
    o.detail << "single edge N=" << single_n << " m* " << est.m_star << " [" << est.m_ci_lo << ", " << est.m_ci_hi
             << "]; ";
  }

  const auto a = estimate_threshold(hc, 7, opt, 1001);
  const auto b = estimate_threshold(hc, 7, opt, 2002);
  for (const auto* e : {&a, &b}) {
    o.require(e->m_star >= static_cast<std::size_t>(hc.r_bound()) && e->m_star <= n, "r <= m* <= N");
  }
  const double mean_c = (a.implied_C + b.implied_C) / 2;
  o.require(std::fabs(a.implied_C - b.implied_C) <= 0.1 * mean_c, "implied C stable within 10%");
  o.detail << "HC(K7) m* " << a.m_star << "/" << b.m_star << ", implied C " << std::setprecision(4) << a.implied_C
           << "/" << b.implied_C << "; ";

  std::vector<std::size_t> all_m;
  for (std::size_t m = 0; m <= n; ++m) all_m.push_back(m);
  for (const auto& row : sweep(hc, 7, all_m, 10'000, 1001)) {
    o.require(row.uncolored_hits >= row.hits, "uncolored >= colored");
    o.require(wilson_interval(row.uncolored_hits, row.trials).hi >= row.ci().lo, "uncolored >= colored (CI)");
  }
  o.detail << "uncolored >= colored at all m";
}

void criterion_9(Outcome& o) {
  const Schedule s = make_schedule(100, 1000.0, 0.1, 1.0);
  long double power = 1.0L;
  int ell = 0;
  const long double target = std::sqrt(std::log(100.0L)) / 100.0L;
  do {
    power *= 0.9L;
    ++ell;
  } while (power > target);
  const int bound = static_cast<int>(std::floor(std::log(100.0) / 0.1));
  o.require(s.ell == 37 && ell == 37, "ell = 37");
  o.require(s.ell <= bound, "ell <= log(r)/gamma");
  o.detail << "ell " << s.ell << " <= floor(log r / gamma) = " << bound;
}

void criterion_10(Outcome& o) {
  // The six 2-subsets of {0,1} x {1,2}; a collision pairs one vertex with both colors.
  const std::vector<Assignment> ground = {{0, 1}, {0, 2}, {1, 1}, {1, 2}};
  int cases = 0, collisions = 0;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    for (std::size_t j = i + 1; j < ground.size(); ++j) {
      ++cases;
      collisions += ground[i].vertex == ground[j].vertex;
    }
  }
  const CollisionExpectation ex = expected_color_collisions(2, 2, 2);
  o.require(cases == 6 && collisions * 3 == cases, "enumeration gives 1/3");
  o.require(std::fabs(ex.exact - 1.0 / 3.0) <= 1e-15, "exact formula 1/3");

  RngStream rng(10, 0);
  const std::size_t trials = 100'000;
  double sum = 0, sum_sq = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double c = static_cast<double>(sample_lifted_uniform(2, 2, 2, rng).collision_pairs());
    sum += c;
    sum_sq += c * c;
  }
  const double mean = sum / trials;
  const double sd = std::sqrt((sum_sq / trials - mean * mean) / (trials - 1));
  o.require(std::fabs(mean - ex.exact) <= 3 * sd, "Monte Carlo within 3 sigma");
  o.detail << "exact 1/3, Monte Carlo " << std::setprecision(5) << mean << ", approximation " << ex.approximate;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"count oracles", criterion_1},
      {"spread oracle", criterion_2},
      {"lifted spread bound", criterion_3},
      {"dual-path delta and bound chain", criterion_4},
      {"empirical mu", criterion_5},
      {"chebyshev endgame", criterion_6},
      {"fragmentation consistency", criterion_7},
      {"threshold behavior", criterion_8},
      {"schedule arithmetic", criterion_9},
      {"collision model", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << std::setw(2) << i + 1 << ' ' << criteria[i].first << ": "
              << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

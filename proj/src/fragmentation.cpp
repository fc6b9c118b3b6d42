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

#include "rainbow/fragmentation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <unordered_map>

#include "json.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/spread.hpp"

namespace rainbow {
namespace {

struct AssignmentsHash {
  std::size_t operator()(const std::vector<Assignment>& items) const {
    std::size_t seed = items.size();
    for (const auto& a : items) {
      const std::uint64_t x = (static_cast<std::uint64_t>(a.vertex) << 32) | a.color;
      seed ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};

using BestByRemainder = std::unordered_map<std::vector<Assignment>, std::int64_t, AssignmentsHash>;

bool tie_less(const Fragment& a, const Fragment& b) {
  if (a.base != b.base) return a.base < b.base;
  return a.colors < b.colors;
}

bool is_compatible(const Fragment& f, const std::vector<Color>& w) {
  return std::all_of(f.remaining.begin(), f.remaining.end(), [&](const Assignment& a) {
    return w[a.vertex] == kNoColor || w[a.vertex] == a.color;
  });
}

// Compatible survivors indexed by their uncovered part, keeping the
// tie-break minimum for each distinct part.
BestByRemainder index_by_remainder(const std::vector<Fragment>& survivors, const std::vector<Color>& w,
                                   std::vector<char>& compatible) {
  BestByRemainder best;
  compatible.assign(survivors.size(), 0);
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    if (!is_compatible(survivors[i], w)) continue;
    compatible[i] = 1;
    auto [it, inserted] = best.try_emplace(uncovered_part(survivors[i], w), static_cast<std::int64_t>(i));
    if (!inserted && tie_less(survivors[i], survivors[it->second])) it->second = static_cast<std::int64_t>(i);
  }
  return best;
}

// Smallest-remainder survivor whose uncovered part is a subset of `mine`.
std::int64_t minimize_over_subsets(const std::vector<Assignment>& mine, const BestByRemainder& best,
                                   const std::vector<Fragment>& survivors) {
  const std::size_t k = mine.size();
  std::vector<Assignment> subset;
  std::vector<std::size_t> pick;
  for (std::size_t size = 0; size <= k; ++size) {
    std::int64_t found = -1;
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      subset.clear();
      for (std::size_t i : pick) subset.push_back(mine[i]);
      auto it = best.find(subset);
      if (it != best.end() && (found < 0 || tie_less(survivors[it->second], survivors[found]))) {
        found = it->second;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == k - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (found >= 0) return found;
  }
  return -1;  // unreachable for a compatible survivor: it matches itself
}

ColoredSet color_vertices(const VertexSet& vertices, int q, RngStream& rng) {
  std::vector<Assignment> items;
  items.reserve(vertices.size());
  for (Vertex v : vertices) {
    items.push_back({v, static_cast<Color>(1 + rng.uniform_below(static_cast<std::uint64_t>(q)))});
  }
  return ColoredSet(std::move(items));
}

VertexSet pick_from(const VertexSet& pool, std::size_t m, RngStream& rng) {
  VertexSet out;
  for (Vertex idx : sample_uniform_subset(pool.size(), m, rng)) out.push_back(pool[idx]);
  return out;
}

}  // namespace

Schedule make_schedule(int r, double kappa, double gamma, double C, bool allow_infeasible) {
  if (r < 3) throw std::invalid_argument("schedule needs r >= 3");
  if (!(kappa > 0.0)) throw std::invalid_argument("schedule needs kappa > 0");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0, 1)");
  if (!(C >= 1.0)) throw std::invalid_argument("C must be at least 1");
  Schedule s;
  s.r = r;
  s.kappa = kappa;
  s.gamma = gamma;
  s.C = C;
  const double log_r = std::log(static_cast<double>(r));
  const double target = std::sqrt(log_r) / r;
  double power = 1.0;
  do {
    power *= (1.0 - gamma);
    ++s.ell;
  } while (power > target);
  s.p = C / kappa;
  if (s.p > 1.0) {
    throw std::invalid_argument("per-round rate C/kappa = " + std::to_string(s.p) + " exceeds 1");
  }
  s.rho = log_r / kappa;
  s.delta = 1.0 / (2.0 * s.ell);
  for (int i = 0; i <= s.ell; ++i) s.r_i.push_back(std::pow(1.0 - gamma, i) * r);
  s.total_rate = s.ell * s.p + s.rho;
  s.feasible = s.total_rate <= 1.0;
  s.ell_bound = log_r / gamma;
  s.endgame_r = std::sqrt(log_r);
  s.endgame_bound = 4.0 * std::exp(1.0) * s.endgame_r / (s.rho * kappa);
  if (!s.feasible && !allow_infeasible) {
    throw InfeasibleSchedule("schedule needs total rate ell p + rho = " + std::to_string(s.total_rate) +
                             " <= 1 (ell = " + std::to_string(s.ell) + ", p = " + std::to_string(s.p) +
                             ", rho = " + std::to_string(s.rho) + ")");
  }
  return s;
}

std::vector<Assignment> uncovered_part(const Fragment& f, const std::vector<Color>& sample_colors) {
  std::vector<Assignment> out;
  for (const auto& a : f.remaining) {
    if (sample_colors[a.vertex] == kNoColor) out.push_back(a);
  }
  return out;
}

std::vector<std::int64_t> select_psi(const std::vector<Fragment>& survivors,
                                     const std::vector<Color>& sample_colors) {
  std::vector<char> compatible;
  const BestByRemainder best = index_by_remainder(survivors, sample_colors, compatible);
  std::vector<std::int64_t> choice(survivors.size(), -1);
  const auto count = static_cast<std::int64_t>(survivors.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < count; ++i) {
    if (!compatible[i]) continue;
    choice[i] = minimize_over_subsets(uncovered_part(survivors[i], sample_colors), best, survivors);
  }
  return choice;
}

namespace serial {

// Direct minimization over all pairs; quadratic, kept as the reference.
std::vector<std::int64_t> select_psi(const std::vector<Fragment>& survivors,
                                     const std::vector<Color>& sample_colors) {
  std::vector<std::int64_t> choice(survivors.size(), -1);
  std::vector<std::vector<Assignment>> open(survivors.size());
  std::vector<char> ok(survivors.size());
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    ok[i] = is_compatible(survivors[i], sample_colors);
    open[i] = uncovered_part(survivors[i], sample_colors);
  }
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    if (!ok[i]) continue;
    std::int64_t best = -1;
    for (std::size_t j = 0; j < survivors.size(); ++j) {
      if (!ok[j]) continue;
      if (!std::includes(open[i].begin(), open[i].end(), open[j].begin(), open[j].end())) continue;
      if (best < 0 || open[j].size() < open[best].size() ||
          (open[j].size() == open[best].size() && tie_less(survivors[j], survivors[best]))) {
        best = static_cast<std::int64_t>(j);
      }
    }
    choice[i] = best;
  }
  return choice;
}

}  // namespace serial

RoundOutcome run_round(const std::vector<Fragment>& survivors, const VertexSet& residual, std::size_t n,
                       int round_index, int q, const Schedule& schedule,
                       const FragmentationOptions& options, RngStream& rng) {
  if (round_index < 1 || round_index > schedule.ell) throw std::invalid_argument("round index out of range");
  const auto start = std::chrono::steady_clock::now();
  RoundOutcome out;
  auto& rec = out.record;
  rec.round = round_index;
  rec.r_bound = schedule.r_i[round_index];
  rec.residual_before = residual.size();
  rec.survivors_before = survivors.size();

  VertexSet chosen;
  if (options.fixed_size_rounds) {
    std::size_t m = round_half_up(static_cast<double>(n) * schedule.p);
    if (m > residual.size()) {
      m = residual.size();
      rec.clamped = true;
    }
    chosen = pick_from(residual, m, rng);
  } else {
    for (Vertex v : residual) {
      if (rng.bernoulli(schedule.p)) chosen.push_back(v);
    }
  }
  out.sample = color_vertices(chosen, q, rng);
  rec.sample_size = out.sample.size();

  const std::vector<Color> w = out.sample.dense(n);
  const auto choice = select_psi(survivors, w);
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    if (choice[i] < 0) continue;
    ++rec.compatible;
    const Fragment& psi = survivors[choice[i]];
    auto chi = uncovered_part(psi, w);
    if (static_cast<double>(chi.size()) > rec.r_bound) continue;
    rec.max_remainder = std::max(rec.max_remainder, chi.size());
    out.survivors.push_back(Fragment{psi.base, psi.colors, std::move(chi)});
  }
  rec.survivors_after = out.survivors.size();
  rec.good_fraction = rec.survivors_before == 0
                          ? 0.0
                          : static_cast<double>(rec.survivors_after) / static_cast<double>(rec.survivors_before);
  // |H_i| >= (1 - 1/(2 ell)) |H_{i-1}| in integers.
  const auto two_ell = static_cast<std::uint64_t>(2 * schedule.ell);
  rec.successful = two_ell * rec.survivors_after >= (two_ell - 1) * rec.survivors_before;
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

FragmentationTrace run_fragmentation(const Hypergraph& h, int q, const FragmentationOptions& options,
                                     std::uint64_t seed) {
  if (h.num_edges() == 0) throw std::invalid_argument("fragmentation of an empty hypergraph");
  if (q < h.r_bound()) throw std::invalid_argument("fragmentation needs q >= r");
  const double kappa = options.kappa ? *options.kappa : max_spread(h).kappa;

  FragmentationTrace trace;
  trace.seed = seed;
  trace.schedule = make_schedule(h.r_bound(), kappa, options.gamma, options.C, options.allow_infeasible);
  const Schedule& s = trace.schedule;
  const std::size_t n = h.num_vertices();

  std::vector<Fragment> survivors;
  for (auto& lifted : lift_rainbow(h, q, options.lift_cap)) {
    Fragment f{static_cast<std::uint32_t>(lifted.base), std::move(lifted.colors), {}};
    const auto& e = h.edge(f.base);
    for (std::size_t j = 0; j < e.size(); ++j) f.remaining.push_back({e[j], f.colors[j]});
    survivors.push_back(std::move(f));
  }
  trace.initial_survivors = survivors.size();

  VertexSet residual(n);
  for (std::size_t v = 0; v < n; ++v) residual[v] = static_cast<Vertex>(v);
  if (options.keep_history) {
    trace.survivor_history.push_back(survivors);
    trace.sample_history.push_back(trace.accumulated);
  }

  trace.all_successful = true;
  for (int i = 1; i <= s.ell; ++i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    auto round = run_round(survivors, residual, n, i, q, s, options, rng);
    trace.accumulated = merge(trace.accumulated, round.sample);
    const VertexSet taken = round.sample.domain();
    VertexSet next;
    std::set_difference(residual.begin(), residual.end(), taken.begin(), taken.end(), std::back_inserter(next));
    residual = std::move(next);
    survivors = std::move(round.survivors);
    trace.all_successful = trace.all_successful && round.record.successful;
    trace.rounds.push_back(round.record);
    if (options.keep_history) {
      trace.survivor_history.push_back(survivors);
      trace.sample_history.push_back(trace.accumulated);
    }
  }
  trace.final_survivors = survivors.size();

  RngStream rng(seed, static_cast<std::uint64_t>(s.ell) + 1);
  std::size_t m = round_half_up(static_cast<double>(n) * s.rho);
  if (m > residual.size()) {
    m = residual.size();
    trace.endgame_clamped = true;
  }
  const ColoredSet endgame = color_vertices(pick_from(residual, m, rng), q, rng);
  trace.endgame_sample_size = endgame.size();
  const std::vector<Color> w = endgame.dense(n);
  trace.endgame_hit = std::any_of(survivors.begin(), survivors.end(), [&](const Fragment& f) {
    return std::all_of(f.remaining.begin(), f.remaining.end(),
                       [&](const Assignment& a) { return w[a.vertex] == a.color; });
  });
  trace.accumulated = merge(trace.accumulated, endgame);
  trace.witness_edge = contains_rainbow_edge(h, trace.accumulated);
  trace.outcome = trace.witness_edge.has_value();
  return trace;
}

std::string schedule_json(const Schedule& s) {
  nlohmann::ordered_json doc;
  doc["r"] = s.r;
  doc["kappa"] = s.kappa;
  doc["gamma"] = s.gamma;
  doc["C"] = s.C;
  doc["ell"] = s.ell;
  doc["p"] = s.p;
  doc["rho"] = s.rho;
  doc["delta"] = s.delta;
  doc["r_i"] = s.r_i;
  doc["total_rate"] = s.total_rate;
  doc["feasible"] = s.feasible;
  doc["ell_bound"] = s.ell_bound;
  doc["endgame_bound"] = s.endgame_bound;
  return doc.dump();
}

void write_trace_jsonl(std::ostream& out, const FragmentationTrace& trace, bool include_timing) {
  for (const auto& rec : trace.rounds) {
    nlohmann::ordered_json line;
    line["type"] = "round";
    line["seed"] = trace.seed;
    line["round"] = rec.round;
    line["r_i"] = rec.r_bound;
    line["residual_before"] = rec.residual_before;
    line["sample_size"] = rec.sample_size;
    line["survivors_before"] = rec.survivors_before;
    line["compatible"] = rec.compatible;
    line["survivors_after"] = rec.survivors_after;
    line["good_fraction"] = rec.good_fraction;
    line["successful"] = rec.successful;
    line["max_remainder"] = rec.max_remainder;
    line["clamped"] = rec.clamped;
    if (include_timing) line["wall_seconds"] = rec.wall_seconds;
    out << line.dump() << '\n';
  }
  nlohmann::ordered_json last;
  last["type"] = "final";
  last["seed"] = trace.seed;
  last["initial_survivors"] = trace.initial_survivors;
  last["final_survivors"] = trace.final_survivors;
  last["all_successful"] = trace.all_successful;
  last["endgame_sample_size"] = trace.endgame_sample_size;
  last["endgame_clamped"] = trace.endgame_clamped;
  last["endgame_hit"] = trace.endgame_hit;
  last["outcome"] = trace.outcome;
  last["witness_edge"] = trace.witness_edge ? nlohmann::ordered_json(*trace.witness_edge) : nlohmann::ordered_json();
  out << last.dump() << '\n';
}

}  // namespace rainbow

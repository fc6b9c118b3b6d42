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

#include "rainbow/lifting.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

class InfeasibleSchedule : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Round structure of the fragmentation process.
///
/// ell is the smallest positive integer with (1-gamma)^ell <= sqrt(ln r)/r;
/// each of the ell rounds samples at rate p = C/kappa, the endgame takes
/// round(N rho) more vertices with rho = ln r / kappa, and a round is
/// successful when it keeps a (1 - delta) share of the survivors,
/// delta = 1/(2 ell). Round i accepts remainders of size <= r_i = (1-gamma)^i r.
struct Schedule {
  int r = 0;
  double kappa = 0.0;
  double gamma = 0.0;
  double C = 0.0;
  int ell = 0;
  double p = 0.0;
  double rho = 0.0;
  double delta = 0.0;
  std::vector<double> r_i;  // r_i[0] = r, ..., r_i[ell]
  double total_rate = 0.0;  // ell p + rho
  bool feasible = true;     // total_rate <= 1
  double ell_bound = 0.0;   // ln(r) / gamma
  double endgame_r = 0.0;   // sqrt(ln r)
  double endgame_bound = 0.0;  // 4 e sqrt(ln r) / (rho kappa)
};

// Throws std::invalid_argument on bad parameters or p > 1, and
// InfeasibleSchedule when ell p + rho > 1 unless allow_infeasible.
Schedule make_schedule(int r, double kappa, double gamma, double C, bool allow_infeasible = false);

/// A surviving piece of a lifted edge: the lifted edge it descends from and
/// the colored elements not yet covered by earlier samples.
struct Fragment {
  std::uint32_t base = 0;
  std::vector<Color> colors;            // full coloring of the base edge
  std::vector<Assignment> remaining;    // sorted by vertex

  bool operator==(const Fragment&) const = default;
};

/// For each survivor: the index of the survivor psi picks for Z* = F* ∪ W*,
/// or -1 when F* clashes with W on a shared vertex. psi minimizes |J* \ W*|
/// over compatible survivors J* ⊆ Z*, ties broken by (base, colors).
std::vector<std::int64_t> select_psi(const std::vector<Fragment>& survivors,
                                     const std::vector<Color>& sample_colors);

// chi = psi(Z*) \ W*, the part of the chosen survivor W does not cover.
std::vector<Assignment> uncovered_part(const Fragment& f, const std::vector<Color>& sample_colors);

namespace serial {
std::vector<std::int64_t> select_psi(const std::vector<Fragment>& survivors,
                                     const std::vector<Color>& sample_colors);
}  // namespace serial

struct RoundRecord {
  int round = 0;
  double r_bound = 0.0;
  std::size_t residual_before = 0;
  std::size_t sample_size = 0;
  std::size_t survivors_before = 0;
  std::size_t compatible = 0;
  std::size_t survivors_after = 0;
  double good_fraction = 0.0;
  bool successful = false;
  std::size_t max_remainder = 0;
  bool clamped = false;  // fixed-size sample larger than the residual set
  double wall_seconds = 0.0;
};

struct FragmentationOptions {
  double gamma = 0.1;
  double C = 1.0;
  std::optional<double> kappa;  // default: max_spread(H)
  bool fixed_size_rounds = false;
  bool allow_infeasible = false;
  bool keep_history = false;
  std::size_t lift_cap = 2'000'000;
};

struct FragmentationTrace {
  std::uint64_t seed = 0;
  Schedule schedule;
  std::size_t initial_survivors = 0;
  std::vector<RoundRecord> rounds;
  std::size_t endgame_sample_size = 0;
  bool endgame_clamped = false;
  bool endgame_hit = false;
  bool all_successful = false;
  std::size_t final_survivors = 0;
  bool outcome = false;  // union of all samples contains a rainbow edge
  std::optional<std::size_t> witness_edge;
  ColoredSet accumulated;  // W*_1 ∪ ... ∪ W*_{ell+1}

  // Filled when keep_history: survivors and accumulated sample after each
  // round (index 0 = before round 1).
  std::vector<std::vector<Fragment>> survivor_history;
  std::vector<ColoredSet> sample_history;
};

struct RoundOutcome {
  std::vector<Fragment> survivors;
  ColoredSet sample;
  RoundRecord record;
};

// One round on the residual ground set (sorted). Round i uses r_i as the
// acceptance bound; the sample is W*_p on the residual set (or a fixed-size
// sample of round(N p) vertices when options.fixed_size_rounds).
RoundOutcome run_round(const std::vector<Fragment>& survivors, const VertexSet& residual, std::size_t n,
                       int round_index, int q, const Schedule& schedule,
                       const FragmentationOptions& options, RngStream& rng);

// Full process for one seed. Round i draws from stream (seed, i); the
// endgame from stream (seed, ell + 1).
FragmentationTrace run_fragmentation(const Hypergraph& h, int q, const FragmentationOptions& options,
                                     std::uint64_t seed);

// One line per record: a "round" record per round, then a "final" record.
// Wall times are written only when include_timing is set.
void write_trace_jsonl(std::ostream& out, const FragmentationTrace& trace, bool include_timing = false);
std::string schedule_json(const Schedule& s);

}  // namespace rainbow

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

// rainbow: command-line front end.
//
//   rainbow spread FILE [--check-kappa K]
//   rainbow generate SPEC [-o FILE] [--formula-only]
//   rainbow fragment --hypergraph FILE --q Q [--gamma G] [--C C] --seeds S0..S1 [--out TRACE]
//   rainbow threshold --hypergraph FILE --q Q [--target T] [--trials N] [--seed S] [--sweep M,...]
//   rainbow moments --janson FILE --q Q --p P [--kappa K]
//   rainbow moments --chebyshev FILE --q Q --alpha A [--exact] [--empirical N]
//   rainbow sample --n N --q Q (--m M | --p P) [--model colored|lifted] [--collisions N]
//
// Exit codes: 0 ok, 1 usage or input error, 2 check failed (witness
// printed), 3 internal cross-check mismatch.

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/fragmentation.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/moments.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/spread.hpp"
#include "rainbow/threshold.hpp"
#include "rainbow/version.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rainbow;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitMismatch = 3;
constexpr std::uint64_t kDefaultSeed = 1;

struct Common {
  std::string format = "machine";
  std::string out_path;
  std::optional<std::uint64_t> seed;
  int jobs = 0;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("RAINBOW_SEED"); env != nullptr && *env != '\0') {
    std::size_t used = 0;
    const std::string text(env);
    const auto value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("RAINBOW_SEED is not an integer: " + text);
    return value;
  }
  return kDefaultSeed;
}

// `body` with a leading "type" key.
ordered_json typed(const std::string& type, const ordered_json& body) {
  ordered_json out = {{"type", type}};
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out;
}

ordered_json header(const std::string& command, const ordered_json& config, std::uint64_t seed) {
  ordered_json h;
  h["type"] = "header";
  h["tool"] = kToolName;
  h["version"] = kVersion;
  h["command"] = command;
  h["config"] = config;
  h["seed"] = seed;
  return h;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

bool human(const Common& c) { return c.format == "human"; }

std::string join(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

// "S" or "S0..S1" (inclusive).
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    const auto v = std::stoull(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad seed range: " + text);
    return static_cast<std::uint64_t>(v);
  };
  if (dots == std::string::npos) {
    const auto s = number(text);
    return {s, s};
  }
  const auto lo = number(text.substr(0, dots));
  const auto hi = number(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("bad seed range: " + text);
  return {lo, hi};
}

// ---------------------------------------------------------------- spread

struct SpreadArgs {
  std::string file;
  std::optional<double> check_kappa;
  std::size_t cap = kDefaultSpreadCap;
};

int cmd_spread(const SpreadArgs& a, const Common& c) {
  const Hypergraph h = read_hypergraph_file(a.file);
  const std::uint64_t seed = resolve_seed(c.seed);
  ordered_json config{{"file", a.file}, {"cap", a.cap}};
  if (a.check_kappa) config["check_kappa"] = *a.check_kappa;
  Output out(c.out_path);
  auto& os = out.stream();

  const SpreadCertificate cert = max_spread(h, a.cap);
  std::optional<SpreadCheck> check;
  if (a.check_kappa) check = is_kappa_spread(h, *a.check_kappa, a.cap);

  if (human(c)) {
    os << "# " << kToolName << ' ' << kVersion << "  seed " << seed << "  " << config.dump() << '\n';
    os << std::setprecision(15);
    os << "vertices   " << h.num_vertices() << '\n'
       << "edges      " << h.num_edges() << '\n'
       << "r          " << h.r_bound() << '\n'
       << "kappa      " << cert.kappa << '\n'
       << "witness    " << join(cert.witness) << "  (in " << cert.containment_count << " edges)\n";
    if (check) {
      os << "check      kappa = " << *a.check_kappa << ": " << (check->pass ? "pass" : "FAIL");
      if (!check->pass) os << "  violation " << join(check->violation) << " (in " << check->containment_count << " edges)";
      os << '\n';
    }
  } else {
    os << header("spread", config, seed).dump() << '\n';
    ordered_json rec{{"type", "spread"},
                     {"vertices", h.num_vertices()},
                     {"edges", h.num_edges()},
                     {"r", h.r_bound()},
                     {"kappa", cert.kappa},
                     {"witness", cert.witness},
                     {"containment_count", cert.containment_count}};
    os << rec.dump() << '\n';
    if (check) {
      ordered_json chk{{"type", "kappa_check"}, {"kappa", *a.check_kappa}, {"pass", check->pass}};
      if (!check->pass) {
        chk["violation"] = check->violation;
        chk["containment_count"] = check->containment_count;
      }
      os << chk.dump() << '\n';
    }
  }
  return check && !check->pass ? kExitCheckFailed : kExitOk;
}

// -------------------------------------------------------------- generate

struct GenerateArgs {
  std::string spec;
  bool formula_only = false;
};

int cmd_generate(const GenerateArgs& a, const Common& c) {
  const StructureSpec spec = parse_structure_spec(a.spec);
  validate(spec);
  const std::uint64_t seed = resolve_seed(c.seed);
  const BigInt formula = count_formula(spec);
  const ordered_json config{{"spec", spec.to_string()}, {"formula_only", a.formula_only}};

  std::optional<Hypergraph> h;
  if (!a.formula_only) h = generate(spec);
  const bool match = !h || BigInt(h->num_edges()) == formula;

  if (h && !c.out_path.empty()) {
    ordered_json meta{{"tool", kToolName}, {"version", kVersion}, {"config", config}, {"seed", seed}};
    write_hypergraph_file(c.out_path, *h, meta.dump());
  }
  if (human(c)) {
    std::cout << "# " << kToolName << ' ' << kVersion << "  seed " << seed << "  " << config.dump() << '\n';
    std::cout << "spec       " << spec.to_string() << '\n';
    if (h) std::cout << "edges      " << h->num_edges() << '\n';
    std::cout << "formula    " << formula.str() << '\n';
    if (h) std::cout << "match      " << (match ? "yes" : "NO") << '\n';
  } else {
    std::cout << header("generate", config, seed).dump() << '\n';
    ordered_json rec{{"type", "count"}, {"spec", spec.to_string()}, {"formula", formula.str()}};
    if (h) {
      rec["edges"] = h->num_edges();
      rec["vertices"] = h->num_vertices();
      rec["r"] = h->r_bound();
      rec["match"] = match;
    }
    std::cout << rec.dump() << '\n';
  }
  if (!match) {
    std::cerr << "error: generated " << h->num_edges() << " edges but the closed form gives " << formula.str()
              << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

// -------------------------------------------------------------- fragment

struct FragmentArgs {
  std::string file;
  int q = 0;
  double gamma = 0.1;
  double C = 1.0;
  std::optional<double> kappa;
  std::string seeds;
  bool allow_infeasible = false;
  bool fixed_size = false;
  bool timing = false;
};

int cmd_fragment(const FragmentArgs& a, const Common& c) {
  const Hypergraph h = read_hypergraph_file(a.file);
  const std::uint64_t default_seed = resolve_seed(c.seed);
  const auto [first, last] = a.seeds.empty() ? std::pair{default_seed, default_seed} : parse_seed_range(a.seeds);

  FragmentationOptions opt;
  opt.gamma = a.gamma;
  opt.C = a.C;
  opt.kappa = a.kappa ? a.kappa : std::optional<double>(max_spread(h).kappa);
  opt.fixed_size_rounds = a.fixed_size;
  opt.allow_infeasible = a.allow_infeasible;

  ordered_json config{{"hypergraph", a.file}, {"q", a.q},           {"gamma", a.gamma},
                      {"C", a.C},             {"kappa", *opt.kappa}, {"seeds", {first, last}},
                      {"allow_infeasible", a.allow_infeasible},      {"fixed_size", a.fixed_size}};
  Output out(c.out_path);
  auto& os = out.stream();
  const Schedule schedule = make_schedule(h.r_bound(), *opt.kappa, a.gamma, a.C, a.allow_infeasible);
  if (human(c)) {
    os << "# " << kToolName << ' ' << kVersion << "  seed " << first << ".." << last << "  " << config.dump()
       << '\n';
    os << "# schedule " << schedule_json(schedule) << '\n';
    os << std::setw(6) << "seed" << std::setw(7) << "round" << std::setw(9) << "r_i" << std::setw(8) << "|W|"
       << std::setw(10) << "before" << std::setw(10) << "after" << std::setw(8) << "good" << std::setw(6) << "ok"
       << '\n';
  } else {
    os << header("fragment", config, first).dump() << '\n';
    os << "{\"type\":\"schedule\",\"schedule\":" << schedule_json(schedule) << "}\n";
  }
  for (std::uint64_t s = first;; ++s) {
    const FragmentationTrace trace = run_fragmentation(h, a.q, opt, s);
    if (human(c)) {
      for (const auto& r : trace.rounds) {
        os << std::setw(6) << s << std::setw(7) << r.round << std::setw(9) << std::fixed << std::setprecision(3)
           << r.r_bound << std::setw(8) << r.sample_size << std::setw(10) << r.survivors_before << std::setw(10)
           << r.survivors_after << std::setw(8) << std::setprecision(3) << r.good_fraction << std::setw(6)
           << (r.successful ? "yes" : "no") << '\n';
      }
      os << std::setw(6) << s << "  endgame |W| " << trace.endgame_sample_size << ", hit "
         << (trace.endgame_hit ? "yes" : "no") << ", rainbow edge in union "
         << (trace.outcome ? "yes" : "no") << '\n';
    } else {
      write_trace_jsonl(os, trace, a.timing);
    }
    if (s == last) break;
  }
  return kExitOk;
}

// ------------------------------------------------------------- threshold

struct ThresholdArgs {
  std::string file;
  int q = 0;
  double target = 0.5;
  std::size_t trials = 10'000;
  std::size_t batch = 1'000;
  std::optional<double> kappa;
  std::vector<std::size_t> sweep;
};

int cmd_threshold(const ThresholdArgs& a, const Common& c) {
  const Hypergraph h = read_hypergraph_file(a.file);
  const std::uint64_t seed = resolve_seed(c.seed);
  ordered_json config{{"hypergraph", a.file}, {"q", a.q},         {"target", a.target},
                      {"trials", a.trials},   {"batch", a.batch}};
  if (a.kappa) config["kappa"] = *a.kappa;
  if (!a.sweep.empty()) config["sweep"] = a.sweep;
  Output out(c.out_path);
  auto& os = out.stream();

  std::vector<CurvePoint> curve;
  std::optional<ThresholdEstimate> est;
  if (!a.sweep.empty()) {
    curve = sweep(h, a.q, a.sweep, a.trials, seed);
  } else {
    ThresholdOptions opt;
    opt.target = a.target;
    opt.trials = a.trials;
    opt.batch = a.batch;
    opt.kappa = a.kappa;
    est = estimate_threshold(h, a.q, opt, seed);
    curve = est->curve;
  }

  if (human(c)) {
    os << "# " << kToolName << ' ' << kVersion << "  seed " << seed << "  " << config.dump() << '\n';
    if (est) {
      os << "m_star     " << est->m_star << "  (hit-rate CI half-width " << std::setprecision(4)
         << est->ci_halfwidth << ", m range " << est->m_ci_lo << ".." << est->m_ci_hi << ")\n"
         << "kappa      " << std::setprecision(6) << est->kappa << '\n'
         << "implied C  " << est->implied_C << '\n';
    }
    os << std::setw(6) << "m" << std::setw(9) << "hits" << std::setw(9) << "trials" << std::setw(9) << "p_hat"
       << std::setw(9) << "ci_lo" << std::setw(9) << "ci_hi" << std::setw(11) << "uncolored" << '\n';
    for (const auto& pt : curve) {
      const Interval ci = pt.ci();
      os << std::setw(6) << pt.m << std::setw(9) << pt.hits << std::setw(9) << pt.trials << std::fixed
         << std::setprecision(4) << std::setw(9) << pt.p_hat() << std::setw(9) << ci.lo << std::setw(9) << ci.hi
         << std::setw(11) << pt.uncolored_hits << '\n';
    }
  } else {
    os << "# " << header("threshold", config, seed).dump() << '\n';
    if (est) {
      auto summary = ordered_json::parse(to_json(*est));
      summary.erase("curve");
      os << "# " << summary.dump() << '\n';
    }
    write_curve_csv(os, curve);
  }
  return kExitOk;
}

// --------------------------------------------------------------- moments

struct MomentsArgs {
  std::string janson;
  std::string chebyshev;
  int q = 0;
  double p = 0.0;
  double alpha = 0.0;
  std::optional<double> kappa;
  bool exact = false;
  std::size_t empirical = 0;
};

int cmd_moments(const MomentsArgs& a, const Common& c) {
  if (a.janson.empty() == a.chebyshev.empty()) {
    throw std::invalid_argument("give exactly one of --janson FILE or --chebyshev FILE");
  }
  const std::uint64_t seed = resolve_seed(c.seed);
  Output out(c.out_path);
  auto& os = out.stream();
  ordered_json config{{"q", a.q}};
  if (a.kappa) config["kappa"] = *a.kappa;

  if (!a.janson.empty()) {
    const Hypergraph h = read_hypergraph_file(a.janson);
    config["janson"] = a.janson;
    config["p"] = a.p;
    const double kappa = a.kappa ? *a.kappa : max_spread(h).kappa;
    const MomentReport report = janson_chain_check(h, a.q, a.p, kappa);
    ordered_json extra;
    if (a.empirical > 0) {
      const EmpiricalMoments em = empirical_untouched(h, a.q, a.p, seed, a.empirical);
      extra = {{"type", "empirical"},       {"trials", a.empirical},        {"mean", em.mean},
               {"stddev", em.stddev},       {"standard_error", em.standard_error},
               {"lower_tail_frequency", em.lower_tail_frequency}};
    }
    if (human(c)) {
      os << "# " << kToolName << ' ' << kVersion << "  seed " << seed << "  " << config.dump() << '\n';
      write_human(os, report);
      if (!extra.is_null()) os << "empirical  " << extra.dump() << '\n';
    } else {
      os << header("moments", config, seed).dump() << '\n';
      os << typed("janson", ordered_json::parse(to_json(report))).dump() << '\n';
      if (!extra.is_null()) os << extra.dump() << '\n';
    }
    if (!report.all_asserted_hold()) {
      std::cerr << "error: an asserted link of the Delta chain failed\n";
      return kExitMismatch;
    }
    return kExitOk;
  }

  const Hypergraph g = read_hypergraph_file(a.chebyshev);
  config["chebyshev"] = a.chebyshev;
  config["alpha"] = a.alpha;
  config["exact"] = a.exact;
  config["empirical"] = a.empirical;
  const ChebyshevReport report = chebyshev_report(g, a.q, a.alpha, a.kappa);
  ordered_json extra = ordered_json::object();
  if (a.exact) extra["exact_uncovered"] = exact_uncovered_probability(g, a.q, a.alpha);
  if (a.empirical > 0) {
    const auto ind = kernels::uncovered_indicators(g, a.q, a.alpha, seed, a.empirical);
    std::size_t misses = 0;
    for (auto x : ind) misses += x;
    const double f = static_cast<double>(misses) / a.empirical;
    extra["empirical_uncovered"] = f;
    extra["standard_error"] = std::sqrt(f * (1.0 - f) / a.empirical);
  }
  if (human(c)) {
    os << "# " << kToolName << ' ' << kVersion << "  seed " << seed << "  " << config.dump() << '\n';
    write_human(os, report);
    if (!extra.empty()) os << "checks     " << extra.dump() << '\n';
  } else {
    os << header("moments", config, seed).dump() << '\n';
    os << typed("chebyshev", ordered_json::parse(to_json(report))).dump() << '\n';
    if (!extra.empty()) os << typed("uncovered", extra).dump() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  std::size_t n = 0;
  int q = 0;
  std::optional<std::size_t> m;
  std::optional<double> p;
  std::string model = "colored";
  std::size_t collisions = 0;
};

int cmd_sample(const SampleArgs& a, const Common& c) {
  if (a.m.has_value() == a.p.has_value()) throw std::invalid_argument("give exactly one of --m or --p");
  const std::uint64_t seed = resolve_seed(c.seed);
  ordered_json config{{"n", a.n}, {"q", a.q}, {"model", a.model}};
  if (a.m) config["m"] = *a.m;
  if (a.p) config["p"] = *a.p;
  if (a.collisions) config["collisions"] = a.collisions;
  Output out(c.out_path);
  auto& os = out.stream();
  os << "# " << header("sample", config, seed).dump() << '\n';

  if (a.collisions > 0) {
    if (!a.m) throw std::invalid_argument("--collisions needs --m");
    const CollisionExpectation expect = expected_color_collisions(a.n, a.q, *a.m);
    CompensatedSum sum, sum_sq;
    for (std::size_t t = 0; t < a.collisions; ++t) {
      RngStream rng(seed, t);
      const auto x = static_cast<double>(sample_lifted_uniform(a.n, a.q, *a.m, rng).collision_pairs());
      sum.add(x);
      sum_sq.add(x * x);
    }
    const double mean = sum.value() / a.collisions;
    const double var = std::max(0.0, sum_sq.value() / a.collisions - mean * mean);
    ordered_json rec{{"type", "collisions"},
                     {"exact", expect.exact},
                     {"approximate", expect.approximate},
                     {"monte_carlo", mean},
                     {"standard_error", std::sqrt(var / a.collisions)},
                     {"trials", a.collisions}};
    os << (human(c) ? "# " : "") << rec.dump() << '\n';
    return kExitOk;
  }

  RngStream rng(seed, 0);
  if (a.model == "colored") {
    const ColoredSet w = a.m ? sample_colored_m(a.n, *a.m, a.q, rng) : sample_colored_p(a.n, *a.p, a.q, rng);
    write_colored_set(os, w);
  } else if (a.model == "lifted") {
    const LiftedSample w =
        a.m ? sample_lifted_uniform(a.n, a.q, *a.m, rng) : sample_lifted_binomial(a.n, a.q, *a.p, rng);
    write_lifted_sample(os, w);
  } else {
    throw std::invalid_argument("unknown model " + a.model);
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Common& c, bool with_out = true) {
  sub->add_option("--format", c.format, "machine or human")->check(CLI::IsMember({"machine", "human"}));
  sub->add_option("--seed", c.seed, "master seed (default: $RAINBOW_SEED, else 1)");
  sub->add_option("--jobs", c.jobs, "worker threads (default: OpenMP default)")->check(CLI::NonNegativeNumber);
  if (with_out) sub->add_option("-o,--out", c.out_path, "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spread analysis, rainbow lifting, fragmentation and threshold estimation"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);
  Common common;

  SpreadArgs spread_args;
  auto* spread_cmd = app.add_subcommand("spread", "maximal spread of a hypergraph file");
  spread_cmd->add_option("file", spread_args.file)->required();
  spread_cmd->add_option("--check-kappa", spread_args.check_kappa, "exit 2 unless the file is kappa-spread");
  spread_cmd->add_option("--cap", spread_args.cap, "candidate-set cap");
  add_common(spread_cmd, common);

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "generate a structure hypergraph");
  gen_cmd->add_option("spec", gen_args.spec, "e.g. hamilton:n=7, pm:n=6,k=3, loose:n=8,k=3")->required();
  gen_cmd->add_flag("--formula-only", gen_args.formula_only, "print the closed-form count only");
  add_common(gen_cmd, common);

  FragmentArgs frag_args;
  auto* frag_cmd = app.add_subcommand("fragment", "run the fragmentation process");
  frag_cmd->add_option("--hypergraph", frag_args.file)->required();
  frag_cmd->add_option("--q", frag_args.q)->required();
  frag_cmd->add_option("--gamma", frag_args.gamma);
  frag_cmd->add_option("--C", frag_args.C);
  frag_cmd->add_option("--kappa", frag_args.kappa, "default: maximal spread of the file");
  frag_cmd->add_option("--seeds", frag_args.seeds, "S or S0..S1 (inclusive)");
  frag_cmd->add_flag("--allow-infeasible", frag_args.allow_infeasible, "run even when ell p + rho > 1");
  frag_cmd->add_flag("--fixed-size", frag_args.fixed_size, "fixed-size round samples");
  frag_cmd->add_flag("--timing", frag_args.timing, "include wall times in the trace");
  add_common(frag_cmd, common);

  ThresholdArgs thr_args;
  auto* thr_cmd = app.add_subcommand("threshold", "estimate the rainbow threshold");
  thr_cmd->add_option("--hypergraph", thr_args.file)->required();
  thr_cmd->add_option("--q", thr_args.q)->required();
  thr_cmd->add_option("--target", thr_args.target);
  thr_cmd->add_option("--trials", thr_args.trials);
  thr_cmd->add_option("--batch", thr_args.batch);
  thr_cmd->add_option("--kappa", thr_args.kappa);
  thr_cmd->add_option("--sweep", thr_args.sweep, "sorted m values; prints the curve only")->delimiter(',');
  add_common(thr_cmd, common);

  MomentsArgs mom_args;
  auto* mom_cmd = app.add_subcommand("moments", "Janson and Chebyshev reports");
  mom_cmd->add_option("--janson", mom_args.janson, "hypergraph file");
  mom_cmd->add_option("--chebyshev", mom_args.chebyshev, "hypergraph file");
  mom_cmd->add_option("--q", mom_args.q)->required();
  mom_cmd->add_option("--p", mom_args.p);
  mom_cmd->add_option("--alpha", mom_args.alpha);
  mom_cmd->add_option("--kappa", mom_args.kappa);
  mom_cmd->add_flag("--exact", mom_args.exact, "exact uncovered probability by enumeration");
  mom_cmd->add_option("--empirical", mom_args.empirical, "Monte Carlo trials");
  add_common(mom_cmd, common);

  SampleArgs smp_args;
  auto* smp_cmd = app.add_subcommand("sample", "draw a colored or lifted sample");
  smp_cmd->add_option("--n", smp_args.n)->required();
  smp_cmd->add_option("--q", smp_args.q)->required();
  smp_cmd->add_option("--m", smp_args.m);
  smp_cmd->add_option("--p", smp_args.p);
  smp_cmd->add_option("--model", smp_args.model)->check(CLI::IsMember({"colored", "lifted"}));
  smp_cmd->add_option("--collisions", smp_args.collisions, "Monte Carlo trials for the collision count");
  add_common(smp_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  if (common.jobs > 0) omp_set_num_threads(common.jobs);

  try {
    if (app.got_subcommand(spread_cmd)) return cmd_spread(spread_args, common);
    if (app.got_subcommand(gen_cmd)) return cmd_generate(gen_args, common);
    if (app.got_subcommand(frag_cmd)) return cmd_fragment(frag_args, common);
    if (app.got_subcommand(thr_cmd)) return cmd_threshold(thr_args, common);
    if (app.got_subcommand(mom_cmd)) return cmd_moments(mom_args, common);
    if (app.got_subcommand(smp_cmd)) return cmd_sample(smp_args, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

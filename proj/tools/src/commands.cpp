#include "mpsep_cli/commands.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "mpsep/combinatorics.hpp"
#include "mpsep/distinguisher.hpp"
#include "mpsep/dynamics.hpp"
#include "mpsep/errors.hpp"
#include "mpsep/random.hpp"
#include "mpsep/stream_io.hpp"
#include "mpsep_cli/formats.hpp"
#include "mpsep_cli/json_io.hpp"

namespace mpsep::cli {

namespace {

using nlohmann::json;

// Thrown for bad input detected after option parsing; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Input {
 public:
  Input(const std::string& path, std::istream& stdin_stream, bool binary = false) {
    if (path == "-") {
      stream_ = &stdin_stream;
      return;
    }
    file_.open(path, binary ? std::ios::in | std::ios::binary : std::ios::in);
    if (!file_) throw InputError("cannot open '" + path + "'");
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + to_string(values[i]);
  return out;
}

std::size_t brute_force_limit() {
  if (const char* env = std::getenv("MP_MAX_BRUTE")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw InputError(std::string("MP_MAX_BRUTE is not a nonnegative integer: '") + env + "'");
    }
  }
  return kDefaultBruteForceLimit;
}

void print_hull(std::ostream& out, const HullWitness& w, std::size_t width) {
  for (const auto& [x, c] : w.positive) out << "+ " << x.to_string() << ' ' << to_string(c) << '\n';
  for (const auto& [x, c] : w.negative) out << "- " << x.to_string() << ' ' << to_string(c) << '\n';
  out << "common point: " << join(common_point(w, width)) << '\n';
}

struct Options {
  bool json = false;
  // distinguish
  std::string trace_path;
  bool refined = false;
  // separable / count
  std::string points_path;
  std::size_t cube = 0;
  // simulate
  std::string system_path;
  std::string start;
  std::size_t steps = 0;
  bool first_bit = false;
  std::size_t prefix = 0;
  bool cycle = false;
  std::uint64_t budget = std::uint64_t{1} << 24;
  bool packed = false;
  // gen
  std::size_t n = 0;
  std::int64_t wlow = -8, whigh = 8, tlow = -8, thigh = 8;
  std::uint64_t seed = 0;
  std::string mp_path;
  bool random = false;
  std::size_t m = 0;
  std::size_t len = 0;
  // bound
  bool sauer = false, prob = false, distinct = false;
  // estimate / sweep
  std::uint64_t trials = 0;
  bool distinct_only = false;
  bool full_cube = false;
  std::size_t workers = 1;
  std::vector<std::string> ratios;
  // battery / search
  std::string stream_path;
  double alpha = 0.01;
  std::size_t block_len = 128;
  std::size_t lag = 1;
  std::size_t attempts = 0;
  std::uint64_t cycle_budget = std::uint64_t{1} << 20;
};

int cmd_distinguish(const Options& o, std::istream& in, std::ostream& out) {
  Input input(o.trace_path, in);
  const Trace trace = parse_trace(input.get());
  const Verdict v = o.refined ? distinguish_refined(trace) : distinguish(trace);
  if (o.json) {
    out << to_json(v, trace, o.refined).dump(2) << '\n';
  } else {
    out << message(v.label) << '\n';
  }
  return v.label == Label::kMcCullochPitts ? kExitOk : kExitNegative;
}

int cmd_separable(const Options& o, std::istream& in, std::ostream& out) {
  Input input(o.points_path, in);
  const auto points = parse_points(input.get());
  if (points.empty()) throw InputError("points file contains no points");
  std::vector<BitVec> pos;
  std::vector<BitVec> neg;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].label == 0) throw InputError("point " + std::to_string(i + 1) + " has no '+'/'-' label");
    (points[i].label == '+' ? pos : neg).push_back(points[i].point);
  }
  const std::size_t width = points.front().point.width();
  auto built = Dichotomy::make(width, std::move(pos), std::move(neg));
  if (const auto* conflict = std::get_if<Dichotomy::Conflict>(&built)) {
    if (o.json) {
      out << json{{"verdict", "inseparable"}, {"conflict_point", conflict->point.to_string()}}.dump(2) << '\n';
    } else {
      out << "inseparable\nconflict point: " << conflict->point.to_string() << '\n';
    }
    return kExitNegative;
  }
  const auto result = decide_separable(std::get<Dichotomy>(built));
  if (o.json) {
    out << to_json(result, width).dump(2) << '\n';
  } else if (result.separable()) {
    out << "separable\nnormal: " << join(result.separator().normal) << "\noffset: "
        << to_string(result.separator().offset) << '\n';
  } else {
    out << "inseparable\n";
    print_hull(out, result.hull_witness(), width);
  }
  return result.separable() ? kExitOk : kExitNegative;
}

int cmd_simulate(const Options& o, std::istream& in, std::ostream& out) {
  Input input(o.system_path, in);
  const MPSystem system = parse_system(input.get());
  const BitVec start = BitVec::from_string(o.start);
  if (start.width() != system.dimension()) {
    throw InputError("--start has width " + std::to_string(start.width()) + ", system has n = " +
                     std::to_string(system.dimension()));
  }
  if (o.cycle) {
    try {
      const CycleInfo c = find_cycle(system, start, o.budget);
      if (o.json) {
        out << to_json(c).dump(2) << '\n';
      } else {
        out << "tail " << c.tail << " period " << c.period << '\n';
      }
      return kExitOk;
    } catch (const BudgetExhausted& e) {
      throw InputError(e.what());
    }
  }
  if (o.first_bit) {
    const BitStream stream = first_bit_stream(system, start, o.steps);
    if (o.json) {
      std::string bits;
      for (auto b : stream) bits.push_back(b ? '1' : '0');
      out << json{{"first_bit_stream", bits}}.dump(2) << '\n';
    } else if (o.packed) {
      write_stream_packed(out, stream);
    } else {
      write_stream_ascii(out, stream);
    }
    return kExitOk;
  }
  const auto states = trajectory(system, start, o.steps);
  json lines = json::array();
  if (o.prefix > 0) {
    if (o.prefix > system.dimension()) throw InputError("--prefix exceeds the system dimension");
    for (std::size_t t = 0; t + 1 < states.size(); ++t) {
      const std::string text = prefix_projection(system, states[t], o.prefix).to_string();
      if (o.json) {
        lines.push_back(text);
      } else {
        out << text << '\n';
      }
    }
  } else {
    for (const auto& s : states) {
      if (o.json) {
        lines.push_back(s.to_string());
      } else {
        out << s.to_string() << '\n';
      }
    }
  }
  if (o.json) out << json{{o.prefix > 0 ? "prefixes" : "trajectory", lines}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_gen_system(const Options& o, std::ostream& out) {
  out << print_system(random_system(SystemGenSpec{o.n, o.wlow, o.whigh, o.tlow, o.thigh, o.seed}));
  return kExitOk;
}

int cmd_gen_trace(const Options& o, std::istream& in, std::ostream& out) {
  if (o.random == !o.mp_path.empty()) throw InputError("gen trace needs exactly one of --mp <file> or --random");
  if (o.random) {
    if (o.n == 0) throw InputError("gen trace --random needs --n");
    out << print_trace(generate_random_trace(o.n, o.m, o.seed));
  } else {
    Input input(o.mp_path, in);
    out << print_trace(generate_mp_trace(parse_system(input.get()), o.m, o.seed));
  }
  return kExitOk;
}

int cmd_gen_stream(const Options& o, std::ostream& out) {
  const BitStream stream = reference_stream(o.seed, o.len);
  if (o.packed) {
    write_stream_packed(out, stream);
  } else {
    write_stream_ascii(out, stream);
  }
  return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  if (static_cast<int>(o.sauer) + static_cast<int>(o.prob) + static_cast<int>(o.distinct) > 1) {
    throw InputError("--sauer, --prob and --distinct are mutually exclusive");
  }
  if (o.m == 0 && !o.distinct) throw InputError("--m must be at least 1");
  std::string value;
  std::string kind = "cover_bound";
  if (o.sauer) {
    value = to_string(sauer_shelah_bound(o.m, o.n));
    kind = "sauer_shelah_bound";
  } else if (o.prob) {
    value = to_string(probability_bound(o.m, o.n));
    kind = "probability_bound";
  } else if (o.distinct) {
    value = to_string(distinct_probability(o.m, o.n));
    kind = "distinct_probability";
  } else {
    value = to_string(cover_bound(o.m, o.n));
  }
  if (o.json) {
    out << json{{"kind", kind}, {"m", o.m}, {"n", o.n}, {"value", value}}.dump(2) << '\n';
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::istream& in, std::ostream& out) {
  std::vector<BitVec> points;
  if (o.cube > 0) {
    if (!o.points_path.empty()) throw InputError("give either a points file or --cube, not both");
    points = full_cube(o.cube);
  } else {
    if (o.points_path.empty()) throw InputError("count needs a points file or --cube");
    Input input(o.points_path, in);
    for (auto& p : parse_points(input.get())) points.push_back(std::move(p.point));
    if (points.empty()) throw InputError("points file contains no points");
  }
  BigInt count;
  try {
    count = count_separable(points, brute_force_limit());
  } catch (const GuardError& e) {
    throw InputError(std::string(e.what()) + " (raise it with MP_MAX_BRUTE)");
  }
  if (o.json) {
    out << json{{"points", points.size()}, {"separable_dichotomies", to_string(count)}}.dump(2) << '\n';
  } else {
    out << to_string(count) << '\n';
  }
  return kExitOk;
}

void print_reports(const Options& o, const std::vector<EstimateReport>& reports, std::ostream& out) {
  if (o.json) {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(to_json(r));
    out << rows.dump(2) << '\n';
  } else {
    out << reports_to_csv(reports);
  }
}

EstimateOptions estimate_options(const Options& o) {
  return EstimateOptions{o.distinct_only, o.full_cube, o.workers};
}

int cmd_estimate(const Options& o, std::ostream& out) {
  std::size_t m = o.m;
  if (o.full_cube && m == 0 && o.n <= 20) m = std::size_t{1} << o.n;
  print_reports(o, {estimate_separability_probability(o.n, m, o.trials, o.seed, estimate_options(o))}, out);
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  std::vector<Rational> ratios;
  for (const auto& r : o.ratios) ratios.push_back(parse_rational(r));
  print_reports(o, phase_transition_sweep(o.n, ratios, o.trials, o.seed, estimate_options(o)), out);
  return kExitOk;
}

int cmd_battery(const Options& o, std::istream& in, std::ostream& out) {
  Input input(o.stream_path, in, o.packed);
  const BitStream stream = o.packed ? read_stream_packed(input.get()) : read_stream_ascii(input.get());
  const BatteryReport report = run_battery(stream, BatteryConfig{o.alpha, o.block_len, o.lag});
  if (o.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    char line[160];
    std::snprintf(line, sizeof line, "stream length %zu, alpha %g, block_len %zu, lag %zu\n", report.length,
                  report.config.alpha, report.config.block_len, report.config.lag);
    out << line;
    std::snprintf(line, sizeof line, "%-16s %14s %10s  %s\n", "test", "statistic", "p-value", "result");
    out << line;
    for (const auto& t : report.results) {
      if (t.applicable) {
        std::snprintf(line, sizeof line, "%-16s %14.4f %10.6f  %s\n", t.name.c_str(), t.statistic, t.p_value,
                      t.pass ? "pass" : "FAIL");
      } else {
        std::snprintf(line, sizeof line, "%-16s %14s %10s  %s\n", t.name.c_str(), "-", "-", "n/a");
      }
      out << line;
    }
    out << (report.pass ? "overall: pass" : "overall: FAIL") << '\n';
  }
  return report.pass ? kExitOk : kExitNegative;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchConfig config;
  config.n = o.n;
  config.stream_len = o.len;
  config.attempts = o.attempts;
  config.seed = o.seed;
  config.weight_low = o.wlow;
  config.weight_high = o.whigh;
  config.theta_low = o.tlow;
  config.theta_high = o.thigh;
  config.battery = BatteryConfig{o.alpha, o.block_len, o.lag};
  config.cycle_budget = o.cycle_budget;
  const SearchReport report = search_pseudorandom_system(config);
  if (o.json) {
    out << to_json(report).dump(2) << '\n';
    return kExitOk;
  }
  const auto& best = report.candidates[report.best];
  out << "best attempt " << best.attempt << " (system seed " << best.system_seed << ", start "
      << best.start.to_string() << ")\n";
  out << "tests passed " << best.passed << "/" << report.best_battery.results.size() << ", cycle ";
  if (best.cycle) {
    out << "tail " << best.cycle->tail << " period " << best.cycle->period << '\n';
  } else {
    out << "not closed within " << config.cycle_budget << " steps\n";
  }
  out << print_system(report.best_system);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear separability certificates and the McCulloch-Pitts distinguisher", "mpsep"};
  app.require_subcommand(1);
  Options o;
  auto seed_option = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "64-bit seed (required; no ambient randomness)")->required();
  };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable JSON output"); };

  auto* distinguish_cmd = app.add_subcommand("distinguish", "Classify a trace file");
  distinguish_cmd->add_option("trace", o.trace_path, "Trace file ('-' for stdin)")->required();
  distinguish_cmd->add_flag("--refined", o.refined, "Test every bit position, not only the first");
  json_flag(distinguish_cmd);

  auto* separable_cmd = app.add_subcommand("separable", "Decide separability of a labeled points file");
  separable_cmd->add_option("points", o.points_path, "Points file with +/- labels ('-' for stdin)")->required();
  json_flag(separable_cmd);

  auto* simulate_cmd = app.add_subcommand("simulate", "Iterate a system file");
  simulate_cmd->add_option("system", o.system_path, "System file ('-' for stdin)")->required();
  simulate_cmd->add_option("--start", o.start, "Start state as a bit string")->required();
  simulate_cmd->add_option("--steps", o.steps, "Number of steps T");
  auto* first_bit_flag = simulate_cmd->add_flag("--first-bit", o.first_bit, "Dump the first-bit stream");
  auto* prefix_option = simulate_cmd->add_option("--prefix", o.prefix, "Print m-bit prefixes of each image");
  auto* cycle_flag = simulate_cmd->add_flag("--cycle", o.cycle, "Report tail and period");
  first_bit_flag->excludes(prefix_option)->excludes(cycle_flag);
  prefix_option->excludes(cycle_flag);
  simulate_cmd->add_option("--budget", o.budget, "Step budget for --cycle");
  simulate_cmd->add_flag("--packed", o.packed, "Packed binary output for --first-bit");
  json_flag(simulate_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Generate systems, traces and reference streams");
  gen_cmd->require_subcommand(1);
  auto* gen_system = gen_cmd->add_subcommand("system", "Random integer-weight system");
  gen_system->add_option("--n", o.n, "Dimension")->required()->check(CLI::PositiveNumber);
  gen_system->add_option("--wlow", o.wlow, "Lowest weight");
  gen_system->add_option("--whigh", o.whigh, "Highest weight");
  gen_system->add_option("--tlow", o.tlow, "Lowest threshold");
  gen_system->add_option("--thigh", o.thigh, "Highest threshold");
  seed_option(gen_system);
  auto* gen_trace = gen_cmd->add_subcommand("trace", "Trace from a system or uniformly random");
  gen_trace->add_option("--mp", o.mp_path, "System file producing y = Phi(x)");
  gen_trace->add_flag("--random", o.random, "Uniform random y");
  gen_trace->add_option("--n", o.n, "Width for --random");
  gen_trace->add_option("--m", o.m, "Number of pairs")->required()->check(CLI::PositiveNumber);
  seed_option(gen_trace);
  auto* gen_stream = gen_cmd->add_subcommand("stream", "Bits from the reference generator");
  gen_stream->add_option("--len", o.len, "Stream length")->required();
  gen_stream->add_flag("--packed", o.packed, "Packed binary output");
  seed_option(gen_stream);

  auto* bound_cmd = app.add_subcommand("bound", "Exact counting bounds");
  bound_cmd->add_option("--m", o.m, "Number of points")->required();
  bound_cmd->add_option("--n", o.n, "Dimension")->required();
  bound_cmd->add_flag("--sauer", o.sauer, "2 sum_{i<=n+1} C(m,i)");
  bound_cmd->add_flag("--prob", o.prob, "min(1, 2^{1-m} sum_{i<=n} C(m-1,i))");
  bound_cmd->add_flag("--distinct", o.distinct, "Probability that m uniform points are distinct");
  json_flag(bound_cmd);

  auto* count_cmd = app.add_subcommand("count", "Count separable dichotomies by brute force");
  count_cmd->add_option("points", o.points_path, "Points file (labels ignored; '-' for stdin)");
  count_cmd->add_option("--cube", o.cube, "Use the full n-cube instead of a file");
  json_flag(count_cmd);

  auto add_estimate_flags = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Dimension")->required()->check(CLI::PositiveNumber);
    sub->add_option("--trials", o.trials, "Trials per estimate")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--distinct-only", o.distinct_only, "Redraw until points are distinct");
    sub->add_option("--workers", o.workers, "Worker threads (results do not depend on it)");
    seed_option(sub);
    json_flag(sub);
  };
  auto* estimate_cmd = app.add_subcommand("estimate", "Monte-Carlo separability probability");
  estimate_cmd->add_option("--m", o.m, "Number of points");
  estimate_cmd->add_flag("--full-cube", o.full_cube, "Use all 2^n points");
  add_estimate_flags(estimate_cmd);
  auto* sweep_cmd = app.add_subcommand("sweep", "Estimates at m = ceil(ratio * n)");
  sweep_cmd->add_option("--ratios", o.ratios, "Comma-separated ratios")->required()->delimiter(',');
  add_estimate_flags(sweep_cmd);

  auto* battery_cmd = app.add_subcommand("battery", "Run the statistical battery on a stream file");
  battery_cmd->add_option("stream", o.stream_path, "Stream file ('-' for stdin)")->required();
  battery_cmd->add_flag("--packed", o.packed, "Input is packed binary");
  battery_cmd->add_option("--alpha", o.alpha, "Two-sided level; pass iff alpha <= p <= 1 - alpha");
  battery_cmd->add_option("--block-len", o.block_len, "Block length for block_frequency");
  battery_cmd->add_option("--lag", o.lag, "Lag for autocorrelation");
  json_flag(battery_cmd);

  auto* search_cmd = app.add_subcommand("search", "Search random systems for battery-passing first-bit streams");
  search_cmd->add_option("--n", o.n, "Dimension")->required()->check(CLI::Range(1, 64));
  search_cmd->add_option("--len", o.len, "Stream length")->required();
  search_cmd->add_option("--attempts", o.attempts, "Systems to try")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--alpha", o.alpha, "Battery level");
  search_cmd->add_option("--cycle-budget", o.cycle_budget, "Steps allowed per cycle search");
  search_cmd->add_option("--wlow", o.wlow, "Lowest weight");
  search_cmd->add_option("--whigh", o.whigh, "Highest weight");
  search_cmd->add_option("--tlow", o.tlow, "Lowest threshold");
  search_cmd->add_option("--thigh", o.thigh, "Highest threshold");
  seed_option(search_cmd);
  json_flag(search_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*distinguish_cmd) return cmd_distinguish(o, in, out);
    if (*separable_cmd) return cmd_separable(o, in, out);
    if (*simulate_cmd) return cmd_simulate(o, in, out);
    if (*gen_system) return cmd_gen_system(o, out);
    if (*gen_trace) return cmd_gen_trace(o, in, out);
    if (*gen_stream) return cmd_gen_stream(o, out);
    if (*bound_cmd) return cmd_bound(o, out);
    if (*count_cmd) return cmd_count(o, in, out);
    if (*estimate_cmd) return cmd_estimate(o, out);
    if (*sweep_cmd) return cmd_sweep(o, out);
    if (*battery_cmd) return cmd_battery(o, in, out);
    if (*search_cmd) return cmd_search(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    // Bad arguments, guards, dimension mismatches: all input errors.
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace mpsep::cli

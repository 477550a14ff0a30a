#include "mpsep_cli/json_io.hpp"

#include <cstdio>

#include "mpsep_cli/formats.hpp"

namespace mpsep::cli {

using nlohmann::json;

namespace {

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json side(const std::map<BitVec, Rational>& coefficients) {
  json out = json::array();
  for (const auto& [x, c] : coefficients) out.push_back({{"point", x.to_string()}, {"coefficient", to_string(c)}});
  return out;
}

// Fixed 6-decimal text keeps reports byte-stable independent of the JSON
// library's float formatting.
std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

json to_json(const Separator& s) { return {{"normal", rationals(s.normal)}, {"offset", to_string(s.offset)}}; }

json to_json(const HullWitness& w, std::size_t width) {
  return {{"positive", side(w.positive)}, {"negative", side(w.negative)},
          {"common_point", rationals(common_point(w, width))}};
}

json to_json(const SeparabilityResult& r, std::size_t width) {
  if (r.separable()) return {{"verdict", "separable"}, {"separator", to_json(r.separator())}};
  return {{"verdict", "inseparable"}, {"hull_witness", to_json(r.hull_witness(), width)}};
}

json to_json(const Verdict& v, const Trace& trace, bool refined) {
  json out{{"verdict", std::string(message(v.label))},
           {"refined", refined},
           {"n", trace.width()},
           {"m", trace.size()}};
  if (v.label == Label::kMcCullochPitts) {
    json seps = json::array();
    for (std::size_t j = 0; j < v.separators.size(); ++j) {
      json s = to_json(v.separators[j]);
      s["position"] = j + 1;
      seps.push_back(std::move(s));
    }
    out["separators"] = std::move(seps);
    return out;
  }
  out["failing_position"] = v.failing_position;
  if (const auto* c = std::get_if<Dichotomy::Conflict>(&v.failure)) {
    out["conflict_point"] = c->point.to_string();
  } else if (const auto* w = std::get_if<HullWitness>(&v.failure)) {
    out["hull_witness"] = to_json(*w, trace.width());
  }
  return out;
}

json to_json(const EstimateReport& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"trials", r.trials},
          {"hits", r.hits},
          {"estimate", to_string(r.estimate)},
          {"estimate_decimal", decimal(r.estimate.get_d())},
          {"ci_low", decimal(r.interval.low)},
          {"ci_high", decimal(r.interval.high)},
          {"seed", r.seed}};
}

json to_json(const TestResult& t) {
  json out{{"name", t.name}, {"applicable", t.applicable}};
  if (t.applicable) {
    out["statistic"] = decimal(t.statistic);
    out["p_value"] = decimal(t.p_value);
    out["pass"] = t.pass;
  }
  return out;
}

json to_json(const BatteryReport& b) {
  json tests = json::array();
  for (const auto& t : b.results) tests.push_back(to_json(t));
  return {{"length", b.length},
          {"alpha", decimal(b.config.alpha)},
          {"block_len", b.config.block_len},
          {"lag", b.config.lag},
          {"tests", std::move(tests)},
          {"passed", b.passed()},
          {"pass", b.pass}};
}

json to_json(const CycleInfo& c) { return {{"tail", c.tail}, {"period", c.period}}; }

json to_json(const SearchReport& s) {
  const auto& c = s.config;
  json candidates = json::array();
  for (const auto& cand : s.candidates) {
    candidates.push_back({{"attempt", cand.attempt},
                          {"system_seed", cand.system_seed},
                          {"start", cand.start.to_string()},
                          {"passed", cand.passed},
                          {"cycle", cand.cycle ? to_json(*cand.cycle) : json(nullptr)}});
  }
  const auto& best = s.candidates[s.best];
  return {{"config",
           {{"n", c.n},
            {"stream_len", c.stream_len},
            {"attempts", c.attempts},
            {"seed", c.seed},
            {"weight_range", {c.weight_low, c.weight_high}},
            {"theta_range", {c.theta_low, c.theta_high}},
            {"cycle_budget", c.cycle_budget}}},
          {"best",
           {{"attempt", best.attempt},
            {"system_seed", best.system_seed},
            {"start", best.start.to_string()},
            {"passed", best.passed},
            {"cycle", best.cycle ? to_json(*best.cycle) : json(nullptr)},
            {"battery", to_json(s.best_battery)},
            {"system", json::parse(print_system(s.best_system))}}},
          {"candidates", std::move(candidates)}};
}

}  // namespace mpsep::cli

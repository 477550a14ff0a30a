#pragma once

#include <json.hpp>

#include "mpsep/bitstats.hpp"
#include "mpsep/combinatorics.hpp"
#include "mpsep/distinguisher.hpp"
#include "mpsep/dynamics.hpp"
#include "mpsep/separability.hpp"

namespace mpsep::cli {

// Rationals are emitted as strings ("p/q" or "p"); points as bit strings.

nlohmann::json to_json(const Separator& s);
nlohmann::json to_json(const HullWitness& w, std::size_t width);
nlohmann::json to_json(const SeparabilityResult& r, std::size_t width);
nlohmann::json to_json(const Verdict& v, const Trace& trace, bool refined);
nlohmann::json to_json(const EstimateReport& r);
nlohmann::json to_json(const TestResult& t);
nlohmann::json to_json(const BatteryReport& b);
nlohmann::json to_json(const CycleInfo& c);
nlohmann::json to_json(const SearchReport& s);

}  // namespace mpsep::cli

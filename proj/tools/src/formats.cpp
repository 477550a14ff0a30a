#include "mpsep_cli/formats.hpp"

#include <istream>
#include <json.hpp>
#include <sstream>

#include "mpsep/errors.hpp"
#include "mpsep/rational.hpp"

namespace mpsep::cli {

namespace {

using nlohmann::json;

Rational rational_field(const json& value, const std::string& where) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return parse_rational(std::to_string(value.get<long long>()));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, where + ": " + e.what());
  }
  throw ParseError(0, where + ": expected a rational string or an integer");
}

std::string strip(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

BitVec parse_bits(const std::string& token, std::size_t line) {
  try {
    return BitVec::from_string(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

MPSystem parse_system(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("system file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("units") || !doc["n"].is_number_unsigned() ||
      !doc["units"].is_array()) {
    throw ParseError(0, "system file needs an unsigned \"n\" and a \"units\" array");
  }
  const auto n = doc["n"].get<std::size_t>();
  const auto& units_json = doc["units"];
  if (units_json.size() != n) {
    throw ParseError(0, "system file has " + std::to_string(units_json.size()) + " units, expected " +
                            std::to_string(n));
  }
  std::vector<ThresholdUnit> units;
  units.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& u = units_json[j];
    const std::string where = "unit " + std::to_string(j + 1);
    if (!u.is_object() || !u.contains("weights") || !u.contains("theta") || !u["weights"].is_array()) {
      throw ParseError(0, where + ": needs \"weights\" and \"theta\"");
    }
    if (u["weights"].size() != n) {
      throw ParseError(0, where + ": has " + std::to_string(u["weights"].size()) + " weights, expected " +
                              std::to_string(n));
    }
    ThresholdUnit unit;
    for (const auto& w : u["weights"]) unit.weights.push_back(rational_field(w, where));
    unit.theta = rational_field(u["theta"], where);
    units.push_back(std::move(unit));
  }
  try {
    return MPSystem(std::move(units));
  } catch (const DimensionError& e) {
    throw ParseError(0, e.what());
  }
}

MPSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  return parse_system(in);
}

std::string print_system(const MPSystem& system) {
  json doc;
  doc["n"] = system.dimension();
  doc["units"] = json::array();
  for (const auto& u : system.units()) {
    json weights = json::array();
    for (const auto& w : u.weights) weights.push_back(to_string(w));
    doc["units"].push_back({{"weights", std::move(weights)}, {"theta", to_string(u.theta)}});
  }
  return doc.dump(2) + "\n";
}

Trace parse_trace(std::istream& in) {
  std::vector<SamplePair> pairs;
  std::string raw;
  std::size_t line = 0;
  std::size_t width = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = strip(raw);
    if (text.empty() || text.front() == '#') continue;
    std::istringstream fields(text);
    std::string x;
    std::string y;
    std::string extra;
    if (!(fields >> x >> y) || (fields >> extra)) throw ParseError(line, "expected '<x-bits> <y-bits>'");
    BitVec xv = parse_bits(x, line);
    BitVec yv = parse_bits(y, line);
    if (width == 0) width = xv.width();
    if (xv.width() != width || yv.width() != width) {
      throw ParseError(line, "width differs from the first pair (" + std::to_string(width) + ")");
    }
    pairs.push_back({std::move(xv), std::move(yv)});
  }
  if (pairs.empty()) throw ParseError(line, "trace file contains no pairs");
  return Trace(std::move(pairs));
}

std::string print_trace(const Trace& trace) {
  std::string out;
  for (const auto& [x, y] : trace.pairs()) out += x.to_string() + " " + y.to_string() + "\n";
  return out;
}

std::vector<LabeledPoint> parse_points(std::istream& in) {
  std::vector<LabeledPoint> points;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = strip(raw);
    if (text.empty() || text.front() == '#') continue;
    std::istringstream fields(text);
    std::string bits;
    std::string label;
    std::string extra;
    fields >> bits;
    LabeledPoint p{parse_bits(bits, line), 0};
    if (fields >> label) {
      if (label != "+" && label != "-") throw ParseError(line, "label must be '+' or '-', got '" + label + "'");
      p.label = label.front();
    }
    if (fields >> extra) throw ParseError(line, "unexpected trailing text '" + extra + "'");
    if (!points.empty() && p.point.width() != points.front().point.width()) {
      throw ParseError(line, "width differs from the first point (" +
                                 std::to_string(points.front().point.width()) + ")");
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace mpsep::cli

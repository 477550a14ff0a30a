#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mpsep/bitvec.hpp"
#include "mpsep/model.hpp"

namespace mpsep::cli {

/// SystemFile: {"n": N, "units": [{"weights": ["p/q", ...], "theta": "p/q"}, ...]}.
/// Weights may also be JSON integers. Throws ParseError on malformed input.
MPSystem parse_system(std::istream& in);
MPSystem parse_system(const std::string& text);
/// Pretty-printed SystemFile; rationals print as "p/q" or "p".
std::string print_system(const MPSystem& system);

/// TraceFile: one "<x-bits> <y-bits>" pair per line, first bit leftmost;
/// blank lines and lines starting with '#' are skipped. Errors carry the
/// 1-based line number.
Trace parse_trace(std::istream& in);
std::string print_trace(const Trace& trace);

/// A points file line: "<bits>" optionally followed by a '+' or '-' label.
struct LabeledPoint {
  BitVec point;
  char label = 0;  // '+', '-', or 0 when absent
};

/// Same comment and error rules as TraceFile; widths must agree.
std::vector<LabeledPoint> parse_points(std::istream& in);

}  // namespace mpsep::cli

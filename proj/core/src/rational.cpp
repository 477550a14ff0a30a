#include "mpsep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mpsep {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (const auto dot = text.find('.'); dot != std::string_view::npos && text.find('/') == std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    const bool negative = !int_part.empty() && int_part.front() == '-';
    const auto digits = negative || (!int_part.empty() && int_part.front() == '+') ? int_part.substr(1) : int_part;
    if ((digits.empty() && frac_part.empty()) || (!digits.empty() && !is_integer_literal(digits)) ||
        (!frac_part.empty() && !is_integer_literal(frac_part)) || (!frac_part.empty() && !std::isdigit(
            static_cast<unsigned char>(frac_part.front())))) {
      throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
    }
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    const BigInt whole = digits.empty() ? BigInt(0) : BigInt(std::string(digits), 10);
    const BigInt frac = frac_part.empty() ? BigInt(0) : BigInt(std::string(frac_part), 10);
    Rational q(whole * den + frac, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("denominator may not carry a sign: '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace mpsep

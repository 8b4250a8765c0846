#include "fcadepth/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fcadepth {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  cpp_int value = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (s[pos] - '0');
  }
  return negative ? cpp_int(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const cpp_int num = parse_integer(trim(s.substr(0, slash)), text);
    const cpp_int den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto int_part = s.substr(0, dot);
    const auto frac_part = s.substr(dot + 1);
    const bool negative = !int_part.empty() && int_part[0] == '-';
    cpp_int whole = (int_part.empty() || int_part == "-" || int_part == "+") ? cpp_int(0) : parse_integer(int_part, text);
    if (whole < 0) whole = -whole;
    cpp_int frac = frac_part.empty() ? cpp_int(0) : parse_integer(frac_part, text);
    if (frac < 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational r = Rational(whole) + Rational(frac, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(s, text));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace fcadepth

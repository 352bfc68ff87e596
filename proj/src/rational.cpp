#include "finbool/rational.hpp"

#include "finbool/errors.hpp"

namespace finbool {

namespace {

boost::multiprecision::cpp_int parse_int(std::string_view s) {
  if (s.empty()) throw input_error("empty integer in rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw input_error("sign without digits in rational");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw input_error("bad digit '" + std::string(1, s[i]) + "' in rational");
  return boost::multiprecision::cpp_int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw input_error("zero denominator in rational");
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

Rational half_power(std::uint64_t e) {
  return Rational(1, boost::multiprecision::cpp_int(1) << e);
}

}  // namespace finbool

#include "hlpos/exactalg/rational.hpp"

#include <stdexcept>
#include <string>

namespace hlpos::exactalg {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& x) {
    const auto b = x.find_first_not_of(" \t");
    const auto e = x.find_last_not_of(" \t");
    x = (b == std::string::npos) ? std::string() : x.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto parse_int = [&](std::string part) {
    trim(part);
    const std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (part.size() == start || part.find_first_not_of("0123456789", start) != std::string::npos) {
      throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    if (part[0] == '+') part.erase(0, 1);
    return Integer(part);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hlpos::exactalg

#include "ptc/rational.hpp"

#include <cctype>
#include <ostream>

namespace ptc {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw ParseError("malformed rational literal '" + s + "'");
  bool slash_seen = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (slash_seen || j + 1 == s.size()) throw ParseError("malformed rational literal '" + s + "'");
      slash_seen = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("malformed rational literal '" + s + "'");
  }
  mpq_class q(s, 10);
  if (slash_seen && q.get_den() == 0) throw MathError("DivisionByZero", "rational with zero denominator");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ptc

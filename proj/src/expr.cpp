#include "ptc/expr.hpp"

#include <cctype>
#include <sstream>

#include "ptc/errors.hpp"

namespace ptc {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number in '" + s + "'");
    return s.substr(start, pos - start);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size()) {
      char c = s[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
        ++pos;
      } else {
        break;
      }
    }
    if (pos == start) throw ParseError("expected a name in '" + s + "'");
    return s.substr(start, pos - start);
  }
};

int find_generator(const std::string& name, const GeneratorList& gens, const std::string& ctx) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].name == name) return static_cast<int>(i);
  }
  throw ParseError("unknown generator '" + name + "' in '" + ctx + "'");
}

// One *-separated term, already past its sign. Returns coefficient * monomial
// as a polynomial (zero when an odd generator ends up squared).
GradedPoly parse_term(Lexer& lex, const GeneratorList& gens) {
  Rational coef(1);
  Monomial mono = Monomial::one();
  int parity_sign = 1;
  bool vanished = false;  // an odd generator got squared; term is 0

  while (true) {
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = lex.number();
      std::string den = "1";
      if (lex.accept('/')) den = lex.number();
      coef *= Rational::parse(num + "/" + den);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lex.identifier();
      int idx = find_generator(name, gens, lex.s);
      int exp = 1;
      if (lex.accept('^')) {
        std::string digits = lex.number();
        try {
          exp = std::stoi(digits);
        } catch (const std::exception&) {
          throw ParseError("exponent out of range in '" + lex.s + "'");
        }
      }
      for (int k = 0; k < exp && !vanished; ++k) {
        auto prod = monomial_mul(mono, Monomial::gen(idx), gens);
        if (!prod) {
          vanished = true;
          break;
        }
        mono = prod->first;
        parity_sign *= prod->second;
      }
    } else {
      throw ParseError("expected a factor in '" + lex.s + "'");
    }
    if (!lex.accept('*')) break;
  }
  if (vanished) return GradedPoly::zero();
  if (parity_sign < 0) coef = -coef;
  return GradedPoly::term(mono, coef);
}

}  // namespace

GradedPoly parse_expression(const std::string& text, const GeneratorList& gens) {
  Lexer lex{text};
  if (lex.done()) throw ParseError("empty expression");

  GradedPoly result;
  bool first = true;
  while (!lex.done()) {
    Rational sign(1);
    if (lex.accept('-')) {
      sign = Rational(-1);
    } else if (lex.accept('+')) {
      if (first) throw ParseError("expression starts with '+' in '" + text + "'");
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms in '" + text + "'");
    }
    GradedPoly term = parse_term(lex, gens);
    result += term.scaled(sign);
    first = false;
  }
  return result;
}

std::string print_poly(const GradedPoly& p, const GeneratorList& gens) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coef] : p.terms()) {
    Rational c = coef;
    if (first) {
      if (c.sign() < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    bool unit_coef = (c == Rational(1));
    if (!unit_coef || mono.is_one()) out << c.str();
    if (!mono.is_one()) {
      if (!unit_coef) out << "*";
      out << mono.str(gens);
    }
    first = false;
  }
  return out.str();
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  char c0 = s[0];
  if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  }
  return true;
}

}  // namespace ptc

#ifndef CORECALC_PARSE_HPP
#define CORECALC_PARSE_HPP

#include <cctype>
#include <string>

#include "corecalc/polynomial.hpp"

namespace corecalc {

// Recursive-descent parser for the polynomial grammar
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ident | integer | '(' expr ')' | factor '^' nat
// Whitespace is insignificant. The leading '-' is accepted so printed
// polynomials always re-parse.
class PolynomialParser {
 public:
  PolynomialParser(std::string text, RingPtr ring)
      : text_(std::move(text)), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool negate = consume('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (consume('+'))
        acc = acc + term();
      else if (consume('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (consume('*'))
        acc = acc * factor();
      else
        return acc;
    }
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    Polynomial base;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      skip_ws();
      if (!consume(')')) throw ParseError("missing ')'", pos_);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = Polynomial::constant(ring_, FieldScalar::from_int(ring_->field, integer()));
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string name = ident();
      int idx = ring_->var_index(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
      base = Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    } else if (c == '/') {
      throw ParseError("division is not supported", pos_);
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }
    for (;;) {
      skip_ws();
      if (!consume('^')) return base;
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("malformed exponent", pos_);
      BigInt e = integer();
      if (e > 512) throw ParseError("exponent too large", pos_);
      base = base.pow(static_cast<int>(e));
    }
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return BigInt(text_.substr(start, pos_ - start));
  }

  std::string ident() {
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text, RingPtr ring) {
  return PolynomialParser(text, std::move(ring)).parse();
}

namespace detail {

inline std::string monomial_str(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.vars[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace detail

inline std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::string coeff = t.coeff.str();
    bool negative = coeff.size() > 0 && coeff[0] == '-';
    if (i == 0) {
      if (negative) {
        out += "-";
        coeff = coeff.substr(1);
      }
    } else {
      out += negative ? "-" : "+";
      if (negative) coeff = coeff.substr(1);
    }
    std::string mono = detail::monomial_str(t.mono, *ring_);
    if (mono.empty())
      out += coeff;
    else if (coeff == "1")
      out += mono;
    else
      out += coeff + "*" + mono;
  }
  return out;
}

}  // namespace corecalc

#endif  // CORECALC_PARSE_HPP

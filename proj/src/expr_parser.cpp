#include "polyalg/expr_parser.hpp"

#include <cctype>
#include <string>

namespace polyalg {

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  CoeffPoly parse() {
    CoeffPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CoeffPoly expr() {
    CoeffPoly v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  CoeffPoly term() {
    CoeffPoly v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        CoeffPoly d = unary();
        if (d.size() != 1) fail("division by a non-monomial");
        v = v.divided_by_term(d);
      } else {
        return v;
      }
    }
  }

  CoeffPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  CoeffPoly power() {
    CoeffPoly base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    std::string digits = read_digits();
    if (digits.empty()) fail("expected integer exponent");
    int e = std::stoi(digits);
    if (!neg) return base.pow(static_cast<unsigned>(e));
    if (base.size() != 1) fail("negative power of a non-monomial");
    return CoeffPoly(1).divided_by_term(base.pow(static_cast<unsigned>(e)));
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  CoeffPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      CoeffPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return CoeffPoly(Rational(mpz_class(read_digits())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return CoeffPoly::var(s_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CoeffPoly parse_coeff_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace polyalg

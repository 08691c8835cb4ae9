#pragma once

// Whitelisted constant expressions for scenario files: decimal literals
// (including scientific notation), pi, e, sqrt, + - * /, unary minus, and
// parentheses.  Everything evaluates in double precision.

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace setconv {

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  double parse() {
    const double v = expression();
    skipSpace();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  double expression() {
    double v = term();
    for (;;) {
      skipSpace();
      if (consume('+'))
        v += term();
      else if (consume('-'))
        v -= term();
      else
        return v;
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      skipSpace();
      if (consume('*'))
        v *= factor();
      else if (consume('/'))
        v /= factor();
      else
        return v;
    }
  }

  double factor() {
    skipSpace();
    if (consume('-')) return -factor();
    return primary();
  }

  double primary() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const double v = expression();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = identifier();
      if (name == "pi") return std::acos(-1.0);
      if (name == "e") return std::exp(1.0);
      if (name == "sqrt") {
        skipSpace();
        expect('(');
        const double v = expression();
        expect(')');
        return std::sqrt(v);
      }
      fail("unknown name '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
    return 0.0;  // unreachable
  }

  double number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_ + 1;
      if (mark < text_.size() && (text_[mark] == '+' || text_[mark] == '-')) ++mark;
      if (mark < text_.size() && std::isdigit(static_cast<unsigned char>(text_[mark]))) {
        pos_ = mark;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      }
    }
    if (pos_ == start) fail("malformed number");
    return std::stod(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("expression '" + text_ + "' at position " +
                                std::to_string(pos_) + ": " + why);
  }

  const std::string& text_;
  std::size_t pos_{0};
};

}  // namespace detail

/// Evaluates a whitelisted constant expression; throws invalid_argument with
/// the offending position on malformed input.
inline double evalExpr(const std::string& text) { return detail::ExprParser(text).parse(); }

}  // namespace setconv

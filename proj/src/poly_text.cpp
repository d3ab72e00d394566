#include "paraframe/poly_text.hpp"

#include <cctype>

#include "paraframe/errors.hpp"

namespace paraframe {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::optional<std::set<std::string>>& allowed)
      : text_(text), allowed_(allowed) {}

  ExactScalar parse() {
    ExactScalar value = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("in '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + message);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  ExactScalar expression() {
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    ExactScalar value = term();
    if (negate) value = -value;
    while (true) {
      if (eat('+'))
        value += term();
      else if (eat('-'))
        value -= term();
      else
        break;
    }
    return value;
  }

  ExactScalar term() {
    ExactScalar value = power();
    while (true) {
      if (eat('*')) {
        value = value * power();
      } else if (eat('/')) {
        ExactScalar d = power();
        if (!d.is_rational() || d.rational_value() == 0)
          fail("division is only defined by a nonzero rational constant");
        value = value * ExactScalar(Rational(1) / d.rational_value());
      } else {
        break;
      }
    }
    return value;
  }

  ExactScalar power() {
    ExactScalar base = primary();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a non-negative integer");
      unsigned e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (e > 64) fail("exponent too large");
        ++pos_;
      }
      return base.pow(e);
    }
    return base;
  }

  ExactScalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExactScalar inner = expression();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {  // unary minus inside a product, e.g. 2*-3
      ++pos_;
      return -primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ExactScalar(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = identifier();
      if (allowed_ && !allowed_->count(name)) fail("unknown indeterminate '" + name + "'");
      return ExactScalar::variable(name);
    }
    fail("expected a number, name or '('");
  }

  Rational integer() {
    BigInt v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return Rational(v);
  }

  std::string identifier() {
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      name.push_back(text_[pos_]);
      ++pos_;
    }
    return name;
  }

  std::string_view text_;
  const std::optional<std::set<std::string>>& allowed_;
  size_t pos_ = 0;
};

}  // namespace

ExactScalar parse_polynomial(std::string_view text, const std::optional<std::set<std::string>>& allowed) {
  return Parser(text, allowed).parse();
}

}  // namespace paraframe

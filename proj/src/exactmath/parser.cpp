#include "golodkit/exactmath/parser.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "golodkit/error.hpp"

namespace golodkit {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (!accept('^')) return b;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    if (pos_ >= text_.size() || !digit(text_[pos_])) fail("exponent must be a non-negative integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) fail("non-integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    return b.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (digit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      const mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ctx_, Scalar(ctx_->field, value));
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto& names = ctx_->names;
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ctx_, static_cast<std::size_t>(it - names.begin()));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const ContextPtr& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name.front())) return false;
  return std::all_of(name.begin(), name.end(), ident_char);
}

Polynomial parse_poly(std::string_view text, const ContextPtr& ctx) {
  for (const auto& n : ctx->names) {
    if (!is_identifier(n)) throw ValidationError("invalid variable name '" + n + "'");
  }
  return Parser(text, ctx).parse();
}

}  // namespace golodkit

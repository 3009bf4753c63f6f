#include "burniat/expression.hpp"

#include <cctype>
#include <stdexcept>

namespace burniat {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::map<std::string, DivClass>& symbols) : s_(s), symbols_(symbols) {}

  DivClass parse() {
    DivClass v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("divisor expression at " + std::to_string(pos_) + ": " + what);
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

  DivClass expr() {
    DivClass v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  DivClass term() {
    if (eat('-')) return -term();
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Int k = 0;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        if (pos_ - start > 6) fail("integer too large");
        k = 10 * k + (s_[pos_++] - '0');
      }
      eat('*');
      skip();
      // A bare "0" is the zero class.
      if (k == 0 && (pos_ == s_.size() || s_[pos_] == ')' || s_[pos_] == '+' || s_[pos_] == '-')) return DivClass{};
      return k * atom();
    }
    return atom();
  }

  DivClass atom() {
    if (eat('(')) {
      DivClass v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
    if (start == pos_) fail("expected a name");
    const std::string name(s_.substr(start, pos_ - start));
    const auto it = symbols_.find(name);
    if (it == symbols_.end()) fail("unknown name '" + name + "'");
    return it->second;
  }

  std::string_view s_;
  const std::map<std::string, DivClass>& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

DivClass parse_divisor(std::string_view text, const std::map<std::string, DivClass>& symbols) {
  return Parser(text, symbols).parse();
}

}  // namespace burniat

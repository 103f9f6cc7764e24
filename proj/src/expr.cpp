#include "kodeg/expr.hpp"

#include <cctype>

namespace kodeg {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  KOElem parse() {
    KOElem v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("at position " + std::to_string(pos_ + 1) + ": " + what + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  KOElem expr() {
    KOElem v = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return v;
      ++pos_;
      KOElem rhs = term();
      try {
        v = c == '+' ? v + rhs : v - rhs;
      } catch (const std::domain_error& e) {
        fail(e.what());
      }
    }
  }

  KOElem term() {
    KOElem v = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
      } else if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '[' || c == '(')) {
        return v;
      }
      KOElem rhs = factor();
      v = ko_mul(v, rhs);
    }
  }

  Int integer() {
    size_t start = pos_;
    Int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = checked_add(checked_mul(v, 10), s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  KOElem factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    if (c == '(') {
      ++pos_;
      KOElem v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return KOElem::basis(RealKind::R, 0, 0, integer());
    if (c == '[') return basis();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  KOElem basis() {
    ++pos_;  // '['
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (peek() != ']') fail("expected ']'");
    ++pos_;
    RealKind kind;
    int index = 0;
    if (name == "R") kind = RealKind::R;
    else if (name == "Rt") kind = RealKind::Rt;
    else if (name == "C0") kind = RealKind::C0;
    else if (name.size() > 1 && (name[0] == 'D' || name[0] == 'H') &&
             name.find_first_not_of("0123456789", 1) == std::string::npos && name.size() < 8) {
      kind = name[0] == 'D' ? RealKind::D : RealKind::H;
      index = std::stoi(name.substr(1));
    } else {
      fail("unknown basis token [" + name + "]");
    }
    int degree = 0;
    if (pos_ < s_.size() && s_[pos_] == '_') {
      ++pos_;
      Int q = integer();
      if (q % 2 != 0) fail("odd degree " + std::to_string(q));
      degree = static_cast<int>(q % 8);
    }
    try {
      return KOElem::basis(kind, index, degree);
    } catch (const std::domain_error& e) {
      fail(e.what());
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

KOElem eval_ko(const std::string& text) { return Parser(text).parse(); }

}  // namespace kodeg

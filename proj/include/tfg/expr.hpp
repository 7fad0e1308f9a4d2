#pragma once

#include <cctype>
#include <string>

#include "tfg/generators.hpp"

namespace tfg {

/// Recursive-descent parser for element and clopen-set expressions.
///
/// elements:  phi | id | gammaU(C) | tauU(C) | sigmaU(C) | phiU(C)
///            products by juxtaposition or '*', powers a^k (k may be negative),
///            parentheses, commutators [a,b] = a^-1 b^-1 a b
/// clopen:    cylinder literals [letters.letters], '|' union, '&' intersection,
///            '~' complement, shift(C,k), X (everything), O (empty)
class ExprParser {
 public:
  explicit ExprParser(SystemPtr sys) : sys_(std::move(sys)) {}

  FullGroupElement parse_element(const std::string& text) {
    src_ = text;
    pos_ = 0;
    FullGroupElement e = element();
    skip_ws();
    require(pos_ == src_.size(), errc::parse_error, trailer());
    return e;
  }

  ClopenSet parse_clopen(const std::string& text) {
    src_ = text;
    pos_ = 0;
    ClopenSet c = clopen();
    skip_ws();
    require(pos_ == src_.size(), errc::parse_error, trailer());
    return c;
  }

 private:
  FullGroupElement element() {
    FullGroupElement acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = compose(acc, factor());
      } else if (starts_factor()) {
        acc = compose(acc, factor());
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    skip_ws();
    char c = peek();
    return std::isalpha((unsigned char)c) || c == '(' || c == '[';
  }

  FullGroupElement factor() {
    FullGroupElement base = atom();
    skip_ws();
    while (peek() == '^') {
      ++pos_;
      long k = integer();
      base = power(base, k);
      skip_ws();
    }
    return base;
  }

  FullGroupElement atom() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      FullGroupElement e = element();
      expect(')');
      return e;
    }
    if (peek() == '[') {
      ++pos_;
      FullGroupElement a = element();
      expect(',');
      FullGroupElement b = element();
      expect(']');
      return commutator(a, b);
    }
    std::string name = ident();
    if (name == "phi") return FullGroupElement::shift_power(sys_, 1);
    if (name == "id") return FullGroupElement::identity(sys_);
    expect('(');
    ClopenSet c = clopen();
    expect(')');
    if (name == "gammaU") return gamma_u(sys_, c);
    if (name == "tauU") return tau_u(sys_, c);
    if (name == "sigmaU") return sigma_u(sys_, c);
    if (name == "phiU") return first_return(sys_, c);
    fail(errc::parse_error, "unknown element constructor '" + name + "' " + trailer());
  }

  ClopenSet clopen() {
    ClopenSet acc = cterm();
    while (true) {
      skip_ws();
      if (peek() == '|') {
        ++pos_;
        acc = clopen_union(acc, cterm());
      } else {
        return acc;
      }
    }
  }

  ClopenSet cterm() {
    ClopenSet acc = cfactor();
    while (true) {
      skip_ws();
      if (peek() == '&') {
        ++pos_;
        acc = clopen_intersect(acc, cfactor());
      } else {
        return acc;
      }
    }
  }

  ClopenSet cfactor() {
    skip_ws();
    char c = peek();
    if (c == '~') {
      ++pos_;
      return clopen_complement(cfactor());
    }
    if (c == '(') {
      ++pos_;
      ClopenSet s = clopen();
      expect(')');
      return s;
    }
    if (c == '[') return cylinder_literal();
    std::string name = ident();
    if (name == "X") return ClopenSet::full_set(sys_);
    if (name == "O") return ClopenSet::empty_set(sys_);
    if (name == "shift") {
      expect('(');
      ClopenSet s = clopen();
      expect(',');
      long k = integer();
      expect(')');
      return clopen_shift(s, k);
    }
    fail(errc::parse_error, "unknown set constructor '" + name + "' " + trailer());
  }

  // [a-m ... a0 . a1 ... an] with single-character alphabet symbols
  ClopenSet cylinder_literal() {
    expect('[');
    std::string before, after;
    bool dotted = false;
    while (true) {
      char c = peek();
      require(c != '\0', errc::parse_error, "unterminated cylinder " + trailer());
      ++pos_;
      if (c == ']') break;
      if (c == '.') {
        require(!dotted, errc::parse_error, "two dots in cylinder " + trailer());
        dotted = true;
        continue;
      }
      if (std::isspace((unsigned char)c)) continue;
      (dotted ? after : before) += c;
    }
    require(dotted, errc::parse_error, "cylinder literal needs a dot " + trailer());
    std::string all = before + after;
    require(!all.empty(), errc::parse_error, "empty cylinder literal " + trailer());
    Word w = Word::parse(sys_->alphabet(), all);
    long offset = -(long)before.size() + 1;  // a0 sits just before the dot
    if (before.empty()) offset = 1;
    return cylinder(sys_, w, offset);
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    require(std::isdigit((unsigned char)peek()), errc::parse_error,
            "expected integer " + trailer());
    long v = 0;
    while (std::isdigit((unsigned char)peek())) {
      v = v * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::string ident() {
    skip_ws();
    require(std::isalpha((unsigned char)peek()), errc::parse_error,
            "expected identifier " + trailer());
    std::string s;
    while (std::isalnum((unsigned char)peek()) || peek() == '_') s += src_[pos_++];
    return s;
  }

  void expect(char c) {
    skip_ws();
    require(peek() == c, errc::parse_error,
            std::string("expected '") + c + "' " + trailer());
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  std::string trailer() const { return "at position " + std::to_string(pos_); }

  SystemPtr sys_;
  std::string src_;
  size_t pos_ = 0;
};

}  // namespace tfg

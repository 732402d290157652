#pragma once

// Recursive-descent evaluator for field-element expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] digits)?
//   primary := digits | '(' expr ')' | 'hypot' '(' expr ',' expr ')' | 'r' digits
//
// `r<k>` names the k-th generator of the tower being evaluated in, so anything
// printed by FieldElement::to_string parses back in the same tower.

#include <cctype>
#include <string>
#include <string_view>

#include "hos/fields/square.hpp"

namespace hos {

struct ParsedElement {
  FieldElement value;
  Tower tower;
};

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, Tower tower) : text_(text), tower_(std::move(tower)) {}

  ParsedElement run() {
    FieldElement v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return {v.lift(tower_), tower_};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  FieldElement term() {
    FieldElement v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  FieldElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  FieldElement power() {
    FieldElement base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    Integer e = digits();
    if (!e.fits_ulong_p()) fail("exponent too large");
    unsigned long n = e.get_ui();
    FieldElement result = FieldElement::rational(1, base.tower());
    FieldElement b = base;
    for (; n != 0; n >>= 1) {
      if (n & 1U) result *= b;
      if (n > 1) b *= b;
    }
    if (negative) {
      if (result.is_zero()) throw DivisionByZero();
      result = result.inverse();
    }
    return result;
  }

  FieldElement primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return FieldElement(Rational(digits()));
    if (accept('(')) {
      FieldElement v = expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "hypot") {
        expect('(');
        FieldElement a = expr();
        expect(',');
        FieldElement b = expr();
        expect(')');
        FieldElement terms[] = {a, b};
        HypotResult h = hypot_all(terms, tower_);
        tower_ = h.tower;
        return h.value;
      }
      if (name == "r") {
        Integer k = digits();
        if (k < 1 || k > tower_.depth()) {
          pos_ = start;
          fail("unknown generator r" + k.get_str());
        }
        return FieldElement::generator(tower_, k.get_ui() - 1);
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Tower tower_;
};

}  // namespace detail

/// Evaluates `text` in `tower`, extending it as hypot nodes require.
inline ParsedElement parse_element(std::string_view text, const Tower& tower) {
  return detail::ExpressionParser(text, tower).run();
}

inline ParsedElement parse_element(std::string_view text) {
  return parse_element(text, Tower::rationals());
}

}  // namespace hos

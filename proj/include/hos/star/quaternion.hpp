#pragma once

// Rational quaternions Q + Qi + Qj + Qk with the standard conjugation.

#include <cctype>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hos/error.hpp"
#include "hos/rational.hpp"

namespace hos {

struct Quaternion {
  Rational a, b, c, d;  // coefficients of 1, i, j, k

  Quaternion() = default;
  Quaternion(const Rational& real) : a(real) {}  // NOLINT: Q is the centre
  Quaternion(long real) : a(real) {}             // NOLINT
  Quaternion(int real) : a(real) {}              // NOLINT
  Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_real() const { return b == 0 && c == 0 && d == 0; }

  /// q q* = a^2 + b^2 + c^2 + d^2.
  Rational norm() const { return a * a + b * b + c * c + d * d; }

  Quaternion star() const { return {a, -b, -c, -d}; }

  Quaternion inverse() const {
    Rational n = norm();
    if (n == 0) throw DivisionByZero();
    return {a / n, -b / n, -c / n, -d / n};
  }

  Quaternion operator-() const { return {-a, -b, -c, -d}; }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  /// Right division x * y^-1.
  friend Quaternion operator/(const Quaternion& x, const Quaternion& y) { return x * y.inverse(); }

  Quaternion& operator+=(const Quaternion& y) { return *this = *this + y; }
  Quaternion& operator-=(const Quaternion& y) { return *this = *this - y; }
  Quaternion& operator*=(const Quaternion& y) { return *this = *this * y; }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  /// "a + bi + cj + dk" with zero terms omitted.
  std::string to_string() const {
    std::string s;
    auto put = [&s](const Rational& q, const char* unit) {
      if (q == 0) return;
      bool neg = q < 0;
      Rational mag = neg ? Rational(-q) : q;
      std::string term = (*unit != '\0' && mag == 1) ? std::string(unit) : hos::to_string(mag) + unit;
      if (s.empty()) {
        s = neg ? "-" + term : term;
      } else {
        s += neg ? " - " : " + ";
        s += term;
      }
    };
    put(a, "");
    put(b, "i");
    put(c, "j");
    put(d, "k");
    return s.empty() ? "0" : s;
  }
};

/// Parses `a + b i + c j + d k`: a signed sum of terms, each an optional rational
/// coefficient (p or p/q, optionally followed by '*') and an optional unit.
inline Quaternion parse_quaternion(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> Integer {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return Integer(std::string(text.substr(start, pos - start)), 10);
  };
  Quaternion q;
  skip();
  if (pos == text.size()) throw ParseError("empty quaternion", 0);
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
      neg = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;
    Rational coef = 1;
    bool have_coef = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      Integer p = number();
      Integer den = 1;
      skip();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw ParseError("expected denominator", pos);
        den = number();
        if (den == 0) throw DivisionByZero();
      }
      coef = Rational(p, den);
      coef.canonicalize();
      have_coef = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
        if (pos >= text.size() || std::string_view("ijk").find(text[pos]) == std::string_view::npos)
          throw ParseError("expected unit after '*'", pos);
      }
    }
    if (neg) coef = -coef;
    char unit = pos < text.size() ? text[pos] : '\0';
    if (unit == 'i' || unit == 'j' || unit == 'k') {
      ++pos;
      (unit == 'i' ? q.b : unit == 'j' ? q.c : q.d) += coef;
    } else if (have_coef) {
      q.a += coef;
    } else {
      throw ParseError("expected a coefficient or unit", pos);
    }
  }
  return q;
}

inline nlohmann::ordered_json quaternion_to_json(const Quaternion& q) {
  return {{"a", to_string(q.a)}, {"b", to_string(q.b)}, {"c", to_string(q.c)}, {"d", to_string(q.d)}};
}

inline Quaternion quaternion_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw ParseError("quaternion must be an object {a, b, c, d}", 0);
  auto get = [&j](const char* key) -> Rational {
    if (!j.contains(key)) return 0;
    if (!j.at(key).is_string()) throw ParseError(std::string("quaternion: '") + key + "' must be a rational string", 0);
    return parse_rational(j.at(key).get<std::string>());
  };
  return {get("a"), get("b"), get("c"), get("d")};
}

}  // namespace hos

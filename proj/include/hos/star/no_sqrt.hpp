#pragma once

// Certificate that a positive non-square rational has no square root among the
// rational quaternions, so no real quadratic tower maps into them.

#include <string>
#include <vector>

#include "hos/report.hpp"
#include "hos/star/quaternion.hpp"

namespace hos {

namespace detail {

inline std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Rational roots of q x^2 - p by the rational root theorem (candidates ±u/v with
/// u | p, v | q). Only used for small p, q.
inline std::vector<Rational> rational_roots_of_square(const Rational& target) {
  Integer p = target.get_num(), q = target.get_den();
  std::vector<Rational> roots;
  if (p == 0) return {Rational(0)};
  Integer ap = abs(p);
  for (const auto& u : divisors(ap))
    for (const auto& v : divisors(q))
      for (int s : {1, -1}) {
        Rational x(s * u, v);
        x.canonicalize();
        if (q * x * x - p == 0) roots.push_back(x);
      }
  return roots;
}

}  // namespace detail

/// Runs the case analysis for alpha^2 = target over Q + Qi + Qj + Qk:
/// alpha^2 = a^2 - b^2 - c^2 - d^2 + 2a(bi + cj + dk). If a = 0 a non-positive
/// rational would equal target > 0; if a != 0 then b = c = d = 0 and a^2 = target,
/// which the rational root test excludes.
inline Report verify_no_quaternion_sqrt(const Rational& target) {
  Report r;
  r.command = "quat no-sqrt";
  const std::string t = to_string(target);

  // The expansion is a polynomial identity of degree <= 2 in each of a, b, c, d;
  // agreeing on the grid {0, 1, 2}^4 proves it.
  bool expansion = true;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          Quaternion x(a, b, c, d);
          Quaternion rhs(a * a - b * b - c * c - d * d, 2 * a * b, 2 * a * c, 2 * a * d);
          expansion = expansion && (x * x == rhs);
        }
  r.add("expansion", expansion,
        "(a+bi+cj+dk)^2 = a^2-b^2-c^2-d^2 + 2a(bi+cj+dk), checked on {0,1,2}^4");

  bool positive = target > 0;
  r.add("case a = 0", positive,
        "alpha^2 = -(b^2+c^2+d^2) <= 0, but " + t + " > 0: contradiction");

  bool small = abs(target.get_num()) < 1000000000 && target.get_den() < 1000000000;
  bool no_root = small ? detail::rational_roots_of_square(target).empty() : !rational_sqrt(target);
  r.add("case a != 0", no_root,
        "2ab = 2ac = 2ad = 0 forces b = c = d = 0, so a^2 = " + t +
            "; x^2 - " + t + " has no rational root: contradiction");

  r.witnesses.push_back(Json{{"case", "a = 0"},
                             {"equation", "-b^2 - c^2 - d^2 = " + t},
                             {"contradiction", positive}});
  r.witnesses.push_back(Json{{"case", "a != 0"},
                             {"equation", "a^2 = " + t},
                             {"contradiction", no_root}});
  return r;
}

/// The x^2 = 2 instance, plus two sample quaternions squared for illustration.
inline Report verify_no_sqrt2() {
  Report r = verify_no_quaternion_sqrt(2);
  r.command = "quat no-sqrt2";
  for (const Quaternion& alpha : {Quaternion(1, 1, 0, 0), Quaternion(Rational(3, 2))}) {
    Quaternion sq = alpha * alpha;
    r.add("sample " + alpha.to_string(), !(sq == Quaternion(2)),
          "(" + alpha.to_string() + ")^2 = " + sq.to_string() + " != 2");
  }
  return r;
}

}  // namespace hos

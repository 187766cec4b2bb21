// Pure binomials t^a - t^b with nonnegative exponent vectors.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toric/monomial.hpp"

namespace toric {

struct Binomial {
  Exponents a, b;

  int s() const { return (int)a.size(); }
  bool is_zero() const { return a == b; }
  bool homogeneous() const { return total_degree(a) == total_degree(b); }
  int degree() const { return total_degree(a); }

  // The normal form reached by gcd-stripping and exponent reduction:
  // disjoint supports and every entry <= q-2 (and homogeneous).
  bool normalized(int q) const;

  friend bool operator==(const Binomial& x, const Binomial& y) {
    return x.a == y.a && x.b == y.b;
  }
};

Binomial make_binomial(Exponents a, Exponents b);

// Leading monomial under grevlex: the larger of t^a, t^b.
const Exponents& leading_monomial(const Binomial& f);

// Text format: one binomial per line, "a_1 ... a_s | b_1 ... b_s".
// '#' starts a comment line.
std::vector<Binomial> parse_binomials(std::string_view text);
std::string format_binomial(const Binomial& f);
std::string format_binomials(const std::vector<Binomial>& fs);

// Human-readable form like "t1*t3^2 - t2*t4" (1-based variables).
std::string pretty_binomial(const Binomial& f);

}  // namespace toric

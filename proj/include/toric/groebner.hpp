// Minimal Buchberger machinery over GF(q), enough to test whether an
// explicit binomial basis is a Groebner basis under grevlex with
// t_1 > ... > t_s. Everything handled here is homogeneous, for which grevlex
// and plain reverse-lex compare identically degreewise, so a single order
// suffices.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/binomial.hpp"
#include "toric/caps.hpp"
#include "toric/field.hpp"
#include "toric/monomial.hpp"

namespace toric {

struct Term {
  std::uint16_t coef = 0;  // raw encoding, nonzero in canonical polys
  Exponents exp;
};

// Canonical form: terms strictly descending under grevlex, no zero
// coefficients, no duplicate exponents.
class Poly {
 public:
  Poly() = default;
  static Poly from_terms(const Field& f, std::vector<Term> terms);
  static Poly from_binomial(const Field& f, const Binomial& bin);

  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const;
  const std::vector<Term>& terms() const { return terms_; }
  int degree() const;  // of the leading term; -1 for zero

  // this - c * t^shift * g
  Poly subtract_multiple(const Field& f, std::uint16_t c, const Exponents& shift,
                         const Poly& g) const;
  // leading coefficient scaled to 1
  Poly monic(const Field& f) const;

  friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

 private:
  std::vector<Term> terms_;
};

std::string pretty_poly(const Poly& p);

// Remainder of f under multivariate division by basis (reducers tried in
// list order); no term of the result is divisible by any leading monomial.
Poly normal_form(const Field& f, const Poly& p, const std::vector<Poly>& basis);

Poly s_polynomial(const Field& f, const Poly& a, const Poly& b);

struct GroebnerCheck {
  bool is_basis = false;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

// Buchberger criterion: every S-polynomial reduces to zero. The failing pair,
// if any, is the first in lexicographic (i, j) order.
GroebnerCheck is_groebner(const Field& f, const std::vector<Poly>& basis);

// Completion to a Groebner basis; throws CapError past max_basis elements.
std::vector<Poly> buchberger(const Field& f, std::vector<Poly> basis,
                             std::size_t max_basis = 4096);

struct ConjectureReport {
  int k = 0, q = 0;
  std::string order = "grevlex t1>...>ts";
  bool generates = false;
  bool minimal = false;
  bool groebner = false;
  std::vector<std::string> witnesses;  // failing S-pair / redundant generators
  std::size_t basis_size = 0;
};

// Empirically tests, for the cycle of length 2k over GF(q), whether the
// conjectured basis generates (certain), is minimal, and is a Groebner basis.
ConjectureReport test_conjecture(int k, int q, const Caps& caps = Caps{});

}  // namespace toric

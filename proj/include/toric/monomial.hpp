// Exponent vectors and the graded reverse lexicographic order with
// t_1 > ... > t_s. This order is the single total order used everywhere:
// monomial bases, leading terms and tie-breaking are all derived from it.
#pragma once

#include <vector>

namespace toric {

using Exponents = std::vector<int>;

int total_degree(const Exponents& a);

// +1 if a > b, -1 if a < b, 0 if equal. Higher total degree wins; ties are
// broken by the sign of the last nonzero entry of a - b (negative => a > b).
int grevlex_compare(const Exponents& a, const Exponents& b);

inline bool grevlex_greater(const Exponents& a, const Exponents& b) {
  return grevlex_compare(a, b) > 0;
}

// C(n, k) as an exact long long; throws on 64-bit overflow.
long long binomial_coeff(long long n, long long k);

// Number of monomials of degree d in s variables: C(s-1+d, s-1).
long long monomial_count(int s, int d);

// All degree-d exponent vectors in s variables, grevlex-descending.
std::vector<Exponents> monomial_basis(int s, int d);

}  // namespace toric

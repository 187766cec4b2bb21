#include "toric/monomial.hpp"

#include <algorithm>
#include <limits>

#include "toric/errors.hpp"

namespace toric {

int total_degree(const Exponents& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

int grevlex_compare(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (int i = (int)a.size() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

long long binomial_coeff(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    unsigned long long num = (unsigned long long)(n - k + i);
    // exact at every step: r holds C(n-k+i-1, i-1) * ... — the running
    // product r*num is divisible by i
    if (r > std::numeric_limits<unsigned long long>::max() / num)
      throw CapError("binomial coefficient overflows 64 bits");
    r = r * num / i;
  }
  if (r > (unsigned long long)std::numeric_limits<long long>::max())
    throw CapError("binomial coefficient overflows 64 bits");
  return (long long)r;
}

long long monomial_count(int s, int d) { return binomial_coeff(s - 1 + d, s - 1); }

namespace {

void compositions(int s, int d, Exponents& cur, std::vector<Exponents>& out) {
  if (s == 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur.push_back(e);
    compositions(s - 1, d - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Exponents> monomial_basis(int s, int d) {
  std::vector<Exponents> out;
  out.reserve((std::size_t)monomial_count(s, d));
  Exponents cur;
  compositions(s, d, cur, out);
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

}  // namespace toric

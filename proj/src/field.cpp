#include "toric/field.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace toric {

namespace {

constexpr int kMaxQ = 65536;
constexpr int kAddTableMaxQ = 1024;  // 2 MiB of table at most

std::atomic<std::uint16_t> next_fid{1};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; (long long)d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p, coefficients low degree first, no trailing zeros.
using PolyFp = std::vector<int>;

PolyFp trim(PolyFp f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// f mod g, g monic.
PolyFp poly_mod(PolyFp f, const PolyFp& g, int p) {
  f = trim(std::move(f));
  while (f.size() >= g.size()) {
    int lead = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      int v = f[shift + i] - lead * g[i];
      f[shift + i] = ((v % p) + p) % p;
    }
    f = trim(std::move(f));
  }
  return f;
}

PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& mod, int p) {
  if (a.empty() || b.empty()) return {};
  PolyFp prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), mod, p);
}

bool is_irreducible(const PolyFp& f, int p) {
  int m = (int)f.size() - 1;
  // trial division by every monic polynomial of degree 1..m/2
  for (int e = 1; 2 * e <= m; ++e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      PolyFp g(e + 1, 0);
      long long t = v;
      for (int i = 0; i < e; ++i) {
        g[i] = (int)(t % p);
        t /= p;
      }
      g[e] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

int encode(const PolyFp& f, int p, int m) {
  int v = 0;
  for (int i = m - 1; i >= 0; --i)
    v = v * p + (i < (int)f.size() ? f[i] : 0);
  return v;
}

PolyFp decode(int v, int p, int m) {
  PolyFp f(m, 0);
  for (int i = 0; i < m; ++i) {
    f[i] = v % p;
    v /= p;
  }
  return trim(std::move(f));
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field::Field(int p, int m, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw NonPrime("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw UnsupportedQ("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) throw UnsupportedQ("q exceeds 2^16");
  }
  if (q < 3) throw UnsupportedQ("q = 2 is not supported (codes there are trivial)");
  p_ = p;
  m_ = m;
  q_ = (int)q;
  fid_ = next_fid.fetch_add(1);

  if (m == 1) {
    if (modulus && !modulus->empty())
      throw ReducibleModulus("a modulus must not be given for prime fields");
  } else if (modulus) {
    if ((int)modulus->size() != m + 1 || modulus->back() != 1)
      throw ReducibleModulus("modulus must be monic of degree m");
    for (int c : *modulus)
      if (c < 0 || c >= p) throw ReducibleModulus("modulus coefficient out of range");
    if (!is_irreducible(*modulus, p))
      throw ReducibleModulus("modulus is reducible over F_p");
    modulus_ = *modulus;
  } else {
    // smallest monic irreducible, coefficients compared low-degree-first
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long v = 0; v < count && modulus_.empty(); ++v) {
      PolyFp f(m + 1, 0);
      long long t = v;
      for (int i = m - 1; i >= 0; --i) {
        f[i] = (int)(t % p);
        t /= p;
      }
      f[m] = 1;
      if (is_irreducible(f, p)) modulus_ = f;
    }
  }

  // generator: smallest encoding with multiplicative order q - 1
  auto factors = prime_factors(q_ - 1);
  auto order_is_full = [&](int cand) {
    PolyFp base = decode(cand, p_, m_);
    for (long long ell : factors) {
      long long e = (q_ - 1) / ell;
      PolyFp acc = {1};
      PolyFp sq = base;
      while (e) {
        if (e & 1) acc = poly_mulmod(acc, sq, modulus_, p_);
        sq = poly_mulmod(sq, sq, modulus_, p_);
        e >>= 1;
      }
      if (encode(acc, p_, m_) == 1) return false;
    }
    return true;
  };
  auto order_is_full_prime = [&](int cand) {
    for (long long ell : factors) {
      long long e = (q_ - 1) / ell;
      long long acc = 1, sq = cand;
      while (e) {
        if (e & 1) acc = acc * sq % p_;
        sq = sq * sq % p_;
        e >>= 1;
      }
      if (acc == 1) return false;
    }
    return true;
  };
  for (int cand = 2; cand < q_; ++cand) {
    bool full = (m_ == 1) ? order_is_full_prime(cand) : order_is_full(cand);
    if (full) {
      gen_ = (std::uint16_t)cand;
      break;
    }
  }

  // antilog/log tables from successive powers of the generator
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  if (m_ == 1) {
    long long cur = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      exp_[i] = (std::uint16_t)cur;
      log_[cur] = (std::uint16_t)i;
      cur = cur * gen_ % p_;
    }
  } else {
    PolyFp cur = {1};
    PolyFp g = decode(gen_, p_, m_);
    for (int i = 0; i < q_ - 1; ++i) {
      int enc = encode(cur, p_, m_);
      exp_[i] = (std::uint16_t)enc;
      log_[enc] = (std::uint16_t)i;
      cur = poly_mulmod(cur, g, modulus_, p_);
    }
  }
  for (int i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];

  neg_.assign(q_, 0);
  for (int v = 0; v < q_; ++v) {
    if (m_ == 1) {
      neg_[v] = (std::uint16_t)((p_ - v) % p_);
    } else {
      PolyFp f = decode(v, p_, m_);
      for (int& c : f) c = (p_ - c) % p_;
      neg_[v] = (std::uint16_t)encode(f, p_, m_);
    }
  }
  if (q_ <= kAddTableMaxQ) {
    add_.assign((std::size_t)q_ * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        int v;
        if (m_ == 1) {
          v = (a + b) % p_;
        } else if (p_ == 2) {
          v = a ^ b;
        } else {
          PolyFp fa = decode(a, p_, m_), fb = decode(b, p_, m_);
          fa.resize(m_, 0);
          fb.resize(m_, 0);
          for (int i = 0; i < m_; ++i) fa[i] = (fa[i] + fb[i]) % p_;
          v = encode(fa, p_, m_);
        }
        add_[(std::size_t)a * q_ + b] = (std::uint16_t)v;
      }
  }
}

FieldElem Field::elem(int repr) const {
  if (repr < 0 || repr >= q_)
    throw InputError("element encoding out of range for this field");
  return {(std::uint16_t)repr, fid_};
}

std::uint16_t Field::radd(std::uint16_t a, std::uint16_t b) const {
  if (!add_.empty()) return add_[(std::size_t)a * q_ + b];
  if (m_ == 1) return (std::uint16_t)((a + b) % p_);
  if (p_ == 2) return a ^ b;
  std::uint16_t out = 0;
  int pw = 1;
  for (int i = 0; i < m_; ++i) {
    int da = a / pw % p_, db = b / pw % p_;
    out = (std::uint16_t)(out + (da + db) % p_ * pw);
    pw *= p_;
  }
  return out;
}

std::uint16_t Field::rsub(std::uint16_t a, std::uint16_t b) const {
  return radd(a, neg_[b]);
}

std::uint16_t Field::rmul(std::uint16_t a, std::uint16_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint32_t)log_[a] + log_[b]];
}

std::uint16_t Field::rinv(std::uint16_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint16_t Field::rpow(std::uint16_t a, long long e) const {
  if (e < 0) throw InputError("negative exponent");
  if (a == 0) return e == 0 ? 1 : 0;
  long long idx = (long long)log_[a] * (e % (q_ - 1)) % (q_ - 1);
  return exp_[idx];
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  return {radd(a.repr, b.repr), fid_};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  return {rsub(a.repr, b.repr), fid_};
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  return {rmul(a.repr, b.repr), fid_};
}

FieldElem Field::neg(FieldElem a) const {
  check(a);
  return {neg_[a.repr], fid_};
}

FieldElem Field::inv(FieldElem a) const {
  check(a);
  return {rinv(a.repr), fid_};
}

FieldElem Field::pow(FieldElem a, long long e) const {
  check(a);
  return {rpow(a.repr, e), fid_};
}

std::vector<FieldElem> Field::units() const {
  std::vector<FieldElem> out(q_ - 1);
  for (int i = 0; i < q_ - 1; ++i) out[i] = {exp_[i], fid_};
  return out;
}

FieldPtr make_field(int p, int m, std::optional<std::vector<int>> modulus) {
  return std::make_shared<Field>(p, m, std::move(modulus));
}

std::pair<int, int> prime_power(long long q) {
  if (q < 3 || q > kMaxQ)
    throw UnsupportedQ("q must satisfy 3 <= q <= 65536");
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {(int)q, 1};  // q prime
  int m = 0;
  long long rem = q;
  while (rem % p == 0) {
    rem /= p;
    ++m;
  }
  if (rem != 1) throw UnsupportedQ("q = " + std::to_string(q) + " is not a prime power");
  return {(int)p, m};
}

FieldPtr make_field_q(long long q) {
  auto [p, m] = prime_power(q);
  return make_field(p, m);
}

}  // namespace toric

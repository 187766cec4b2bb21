// Exact arithmetic in GF(p^m), 3 <= p^m <= 2^16, with log/antilog tables over
// a fixed primitive element. Elements are encoded as integers in [0, q): the
// base-p digits of the representative polynomial's coefficients (for m = 1,
// simply the residue mod p). Construction is deterministic: when no modulus is
// given the lexicographically smallest monic irreducible (coefficients
// compared low-degree-first) is chosen, and the generator is the smallest
// encoding with multiplicative order q - 1.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

class Field;

// Checked element handle. `fid` ties the element to the Field that made it;
// mixing elements of different fields raises FieldMismatch.
struct FieldElem {
  std::uint16_t repr = 0;
  std::uint16_t fid = 0;

  friend bool operator==(FieldElem a, FieldElem b) {
    return a.repr == b.repr && a.fid == b.fid;
  }
  friend bool operator!=(FieldElem a, FieldElem b) { return !(a == b); }
};

class Field {
 public:
  // modulus, when given, is the coefficient vector a_0..a_m (low degree
  // first) of a monic irreducible of degree m over F_p. Must be omitted for
  // m == 1.
  Field(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElem zero() const { return {0, fid_}; }
  FieldElem one() const { return {1, fid_}; }
  FieldElem generator() const { return {gen_, fid_}; }
  FieldElem elem(int repr) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem inv(FieldElem a) const;  // DivisionByZero on 0
  FieldElem pow(FieldElem a, long long e) const;

  // Nonzero elements in antilog order: generator^0, generator^1, ...
  std::vector<FieldElem> units() const;

  // Unchecked arithmetic on raw encodings, for matrix inner loops.
  std::uint16_t radd(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t rsub(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t rmul(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t rneg(std::uint16_t a) const { return neg_[a]; }
  std::uint16_t rinv(std::uint16_t a) const;
  std::uint16_t rpow(std::uint16_t a, long long e) const;

  // log_raw(x) in [0, q-1) for x != 0; exp_raw accepts indices < 2(q-1) so a
  // sum of two logs needs no reduction.
  std::uint16_t log_raw(std::uint16_t x) const { return log_[x]; }
  std::uint16_t exp_raw(std::uint32_t i) const { return exp_[i]; }

  std::uint16_t id() const { return fid_; }

 private:
  void check(FieldElem a) const {
    if (a.fid != fid_) throw FieldMismatch("element belongs to another field");
  }

  int p_ = 0, m_ = 0, q_ = 0;
  std::vector<int> modulus_;  // empty when m == 1
  std::uint16_t fid_ = 0;
  std::uint16_t gen_ = 0;
  std::vector<std::uint16_t> exp_;  // size 2(q-1)
  std::vector<std::uint16_t> log_;  // size q, log_[0] unused
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> add_;  // q*q table when q is small, else empty
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(int p, int m,
                    std::optional<std::vector<int>> modulus = std::nullopt);

// Splits q into (p, m); UnsupportedQ when q is not a prime power in range.
std::pair<int, int> prime_power(long long q);

// Convenience: field of order q with the default modulus.
FieldPtr make_field_q(long long q);

}  // namespace toric

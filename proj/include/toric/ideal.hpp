// Membership and graded-dimension machinery for the vanishing ideal of a
// toric set. Membership of a homogeneous binomial is tested by evaluation at
// every point (points are enumerable at this scale), never by normal forms.
// Generation is certified degree by degree: a candidate set generates iff its
// span at each degree d <= N has dimension dim S_d - H_X(d), where N bounds
// the largest degree of a minimal generator.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toric/binomial.hpp"
#include "toric/caps.hpp"
#include "toric/code.hpp"
#include "toric/field.hpp"
#include "toric/toric_set.hpp"

namespace toric {

// t^a(P) - t^b(P); P must have s nonzero coordinates.
FieldElem evaluate_binomial(const Field& f, const Binomial& bin,
                            std::span<const std::uint16_t> point);

// True iff the (homogeneous) binomial vanishes at every point of X.
// Throws NotHomogeneous otherwise: for non-homogeneous binomials pointwise
// vanishing at the stored representatives is not a well-defined membership test.
bool vanishes_on(const Binomial& bin, const ToricSet& x);

// Index of a witness point where the binomial does not vanish, if any.
std::optional<std::size_t> nonvanishing_index(const Binomial& bin, const ToricSet& x);

struct ReduceStep {
  Binomial g;
  int j = 0;  // f - t_j * g lies in the toric ideal of the full torus
};

// One step of exponent reduction: with disjoint supports, some a_i >= q-1 and
// supp(b) nonempty, rewrites t^a = t_i^{q-1} t^{a'}, t^b = t_j t^{b'} (always
// the smallest such i and j) and returns g = t_j^{q-2} t^{a'} - t^{b'}.
ReduceStep reduce_exponent_step(const Binomial& f, int q);

// Full normalization: strip the common monomial factor, then reduce any
// exponent >= q-1 (on either side), re-stripping after each round, until the
// binomial is normalized or collapses to zero. Vanishing on any toric set is
// preserved exactly at every step.
Binomial normalize_binomial(const Binomial& f, int q);

// dim over GF(q) of the degree-d piece of the ideal generated by `gens`
// (all homogeneous). The coefficient rows of the monomial multiples m*g are
// signed incidence vectors (two entries, +1/-1), so the rank equals
//   #monomials touched - #connected components
// of the graph pairing m+a with m+b; that count is field-independent.
long long ideal_dim_at_degree(const std::vector<Binomial>& gens, int d, int s,
                              long long matrix_cap = Caps{}.matrix_cap);

// Reference implementation of the same dimension by dense row reduction of
// the coefficient matrix over GF(q). Kept as an independent cross-check.
long long ideal_dim_at_degree_dense(const Field& f, const std::vector<Binomial>& gens,
                                    int d, int s,
                                    long long matrix_cap = Caps{}.matrix_cap);

struct DegreeRow {
  int d = 0;
  long long dim_sd = 0;   // C(s-1+d, s-1)
  long long dim_jd = 0;   // span of the candidate generators at degree d
  long long dim_ixd = 0;  // dim S_d - H_X(d)
};

struct GenSetReport {
  bool vanish_ok = false;
  int verified_up_to = 0;              // N
  long long regularity_bound = 0;      // reg + 1
  std::optional<long long> support_bound;  // floor(s/2)(q-2), when floor(s/2) >= 2
  std::vector<DegreeRow> table;        // d = 0..N
  bool generates = false;
};

// Checks that every generator vanishes on X (else GeneratorDoesNotVanish with
// the offender indices) and that the graded dimensions match up to
// N = min(reg+1, floor(s/2)(q-2)) or the explicit N when given. Both bounds
// dominate the largest degree of a minimal generator, so equality up to N
// certifies generation. A precomputed complete Hilbert profile of x may be
// passed to avoid recomputing ranks.
GenSetReport verify_generating_set(const std::vector<Binomial>& gens, const ToricSet& x,
                                   std::optional<int> up_to = std::nullopt,
                                   const Caps& caps = Caps{},
                                   const HilbertProfile* profile = nullptr);

struct MinimalizeResult {
  std::vector<Binomial> kept;          // original order
  std::vector<std::size_t> redundant;  // indices into the input
};

// Greedy redundancy elimination in a fixed order (ascending degree, then
// ascending grevlex leading monomial, then input position): a generator is
// dropped iff it lies in the degree-deg(g) piece of the ideal generated by
// the others still alive. The input must generate; the kept set still does.
MinimalizeResult minimalize(const std::vector<Binomial>& gens, const ToricSet& x,
                            const Caps& caps = Caps{});

}  // namespace toric

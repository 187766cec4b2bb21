// Evaluation codes on a toric set: C_X(d) is the image of the degree-d forms
// under pointwise evaluation (points are stored with first coordinate 1, so
// the usual normalization by t_1^d is already built in). The dimension of
// C_X(d) is the Hilbert function of the quotient by the vanishing ideal; the
// regularity is the degree where it stabilizes at |X|.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toric/caps.hpp"
#include "toric/monomial.hpp"
#include "toric/toric_set.hpp"

namespace toric {

// Row per degree-d monomial (grevlex-descending), column per point.
std::vector<std::vector<std::uint16_t>> evaluation_matrix(
    const ToricSet& x, int d, long long matrix_cap = Caps{}.matrix_cap);

// Rank of the evaluation matrix over GF(q) = dim C_X(d) = H_X(d).
long long hilbert_function(const ToricSet& x, int d,
                           long long matrix_cap = Caps{}.matrix_cap);

struct HilbertProfile {
  std::vector<long long> values;      // H_X(0), H_X(1), ...
  std::optional<int> regularity;      // least d with H_X(d) = |X|; unset if truncated
  long long degree = 0;               // |X|
};

// Computes H_X(d) for increasing d until it reaches |X| (guaranteed by
// d = |X| - 1), or until max_d when given. Monotonicity is asserted at
// runtime; a violation aborts instead of returning a wrong regularity.
HilbertProfile hilbert_profile(const ToricSet& x,
                               std::optional<int> max_d = std::nullopt,
                               long long matrix_cap = Caps{}.matrix_cap);

struct CodeParams {
  int d = 0;
  long long length = 0;
  long long dimension = 0;
  std::optional<long long> min_distance;
};

// Minimum distance (when requested) is found by enumerating every nonzero
// codeword, one representative per scalar class, from the reduced basis.
CodeParams code_params(const ToricSet& x, int d, bool want_min_distance,
                       const Caps& caps = Caps{});

// Closed forms for the full projective torus.
long long torus_dimension(int s, int q, int d);
long long torus_regularity(int s, int q);  // (s-1)(q-2)
// Valid for 1 <= d < (s-1)(q-2); decomposes d = k(q-2)+l with 1 <= l <= q-2
// and returns (q-1)^{s-(k+2)} (q-1-l). OutOfRange otherwise.
long long torus_min_distance(int s, int q, int d);
// Power series coefficients of (1-t^{q-1})^{s-1} / (1-t)^s, degrees 0..up_to_d.
std::vector<long long> torus_hilbert_series_coeffs(int s, int q, int up_to_d);

}  // namespace toric

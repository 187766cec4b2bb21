#pragma once

namespace toric {

// Resource caps. Every potentially large computation checks against these and
// throws a CapError instead of degrading to sampling or approximation.
struct Caps {
  long long enum_cap = 100'000'000;   // candidate vectors in a torus enumeration
  long long matrix_cap = 50'000'000;  // entries (rows x cols) of a dense matrix
  long long dist_cap = 10'000'000;    // q^dimension words in a min-distance search
};

}  // namespace toric

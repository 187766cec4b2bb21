// Enumeration of the toric set cut out by a graph over GF(q): the images of
// (x^{e_1}, ..., x^{e_s}) for x ranging over the torus (K*)^n, projectivized
// by scaling the first coordinate to 1 and deduplicated. Closed-form point
// counts are provided independently so enumeration can be cross-checked.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/caps.hpp"
#include "toric/field.hpp"
#include "toric/graph.hpp"

namespace toric {

struct ToricSet {
  FieldPtr field;
  int s = 0;
  // Each point has s nonzero coordinates and leading coordinate 1; the list
  // is sorted lexicographically on encodings and free of duplicates.
  std::vector<std::vector<std::uint16_t>> points;

  long long size() const { return (long long)points.size(); }
};

ToricSet enumerate_toric_set(const Graph& g, FieldPtr field,
                             long long enum_cap = Caps{}.enum_cap);

// All of the projective torus: points (1, y_2, ..., y_s), y_i nonzero.
ToricSet projective_torus(int s, FieldPtr field,
                          long long enum_cap = Caps{}.enum_cap);

// Point count by the component-counting formula (gamma = number of
// non-bipartite components):
//   gamma >= 1, q odd:  (q-1)^{n-m} * ((q-1)/2)^{gamma-1}
//   gamma >= 1, q even: (q-1)^{n-m+gamma-1}
//   gamma = 0:          (q-1)^{n-m-1}
unsigned long long length_formula(const Graph& g, int q);

// Order of the kernel of the projectivization on a connected component:
// (q-1)/2 when non-bipartite with q odd, q-1 otherwise.
unsigned long long kernel_order(const ComponentInfo& comp, int q);

// One point per row, coordinates as integer encodings.
std::string to_csv(const ToricSet& x);

}  // namespace toric

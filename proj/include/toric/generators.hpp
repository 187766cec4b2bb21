// Combinatorial generating sets for vanishing ideals over even cycles and
// over connected bipartite graphs whose cycles are pairwise vertex disjoint,
// plus the matching regularity formulas and bounds.
//
// For an even cycle with edges 1..s (s = 2k), a two-block partition sigma of
// the edge indices with 1 in block A and a residue r in 1..q-2 determine a
// labeling rho: rho(1) = r, and rho(i+1) flips to q-1-rho(i) exactly when i
// and i+1 lie in the same block. f_sigma_r is the binomial with exponents
// rho(i) on block A minus the same on block B; it is homogeneous iff the
// blocks are balanced, and the balanced ones generate the vanishing ideal
// together with the toric relations t_i^{q-1} - t_s^{q-1}.
#pragma once

#include <optional>
#include <vector>

#include "toric/binomial.hpp"
#include "toric/graph.hpp"

namespace toric {

struct Partition {
  int s = 0;
  std::vector<bool> in_a;  // index 0 (variable t_1) must be in A

  bool balanced() const {
    int cnt = 0;
    for (bool x : in_a) cnt += x;
    return 2 * cnt == s;
  }
  std::vector<int> a_members() const {  // 0-based
    std::vector<int> out;
    for (int i = 0; i < s; ++i)
      if (in_a[i]) out.push_back(i);
    return out;
  }
  friend bool operator==(const Partition& x, const Partition& y) {
    return x.s == y.s && x.in_a == y.in_a;
  }
};

Partition make_partition(int s, const std::vector<int>& a_members_0based);

// The alternating/copying labels rho(1..s), as a 0-indexed vector.
std::vector<int> rho(const Partition& sigma, int r, int q);

Binomial f_sigma_r(const Partition& sigma, int r, int q);

// Moves i (0-based, i >= 2, i in A, i-1 not in A) to B and i-1 to A.
// Membership of f_sigma_r in the vanishing ideal is preserved.
Partition transfer(const Partition& sigma, int i);

// Exchanges the exponents of variables i and i+2 (0-based, i + 2 < s);
// maps the set of balanced f_sigma_r binomials onto itself.
Binomial sigma_swap(const Binomial& f, int i);

// All balanced partitions with 0 in A, ordered lexicographically by the
// combination of remaining A-members.
std::vector<Partition> balanced_partitions(int s);

// The partition {1,3,...,s-1} | {2,4,...,s} (1-based odds in A).
Partition alternating_partition(int s);

struct CycleGenSet {
  int k = 0, q = 0;
  std::vector<Binomial> toric_relations;  // t_i^{q-1} - t_s^{q-1}, i < s
  struct Entry {
    Partition sigma;
    int r = 0;
    Binomial f;
  };
  std::vector<Entry> combinatorial;

  std::vector<Binomial> all() const;
};

// Toric relations plus f_sigma_r for every balanced sigma and r in 1..q-2.
CycleGenSet even_cycle_generators(int k, int q);

// even_cycle_generators minus the redundant f_lambda_r for r >= 2, where
// lambda is the alternating partition. Conjecturally minimal and a Groebner
// basis; generation itself is certain.
CycleGenSet conjectured_basis(int k, int q);

struct ProvenanceEntry {
  enum class Kind { toric, cycle } kind = Kind::toric;
  int i = 0, j = 0;                 // toric: the two variables (0-based)
  int cycle = -1;                   // cycle: index into the family
  std::vector<int> sigma_ambient;   // cycle: A-members as ambient 0-based vars
  int r = 0;
};

struct EmbeddedGenSet {
  std::vector<Binomial> binomials;
  std::vector<ProvenanceEntry> provenance;  // parallel to binomials
  CycleFamily family;
};

// For a connected bipartite graph whose cycles are pairwise vertex disjoint:
// ambient toric relations plus each cycle's balanced binomials re-indexed
// along the cycle's traversal order. Generates the vanishing ideal.
EmbeddedGenSet bipartite_disjoint_generators(const Graph& g, int q);

// Exact regularity under the same hypotheses: (q-2)(s - sum k_i - 1).
long long regularity_formula_disjoint(const Graph& g, int q);

// Upper bound for any bipartite graph and any edge-disjoint family of even
// cycles: (q-2)(s - sum k_i - 1).
long long regularity_upper_bound(const Graph& g, int q, const CycleFamily& family);

}  // namespace toric

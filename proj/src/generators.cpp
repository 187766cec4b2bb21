#include "toric/generators.hpp"

#include <algorithm>
#include <string>

#include "toric/errors.hpp"

namespace toric {

Partition make_partition(int s, const std::vector<int>& a_members) {
  Partition sigma;
  sigma.s = s;
  sigma.in_a.assign(s, false);
  for (int i : a_members) {
    if (i < 0 || i >= s) throw BadPartition("partition member out of range");
    sigma.in_a[i] = true;
  }
  if (!sigma.in_a[0]) throw BadPartition("variable t_1 must lie in block A");
  return sigma;
}

std::vector<int> rho(const Partition& sigma, int r, int q) {
  if (r < 1 || r > q - 2) throw BadR("r must lie in 1..q-2");
  std::vector<int> out(sigma.s);
  out[0] = r;
  for (int i = 1; i < sigma.s; ++i) {
    bool same = sigma.in_a[i - 1] == sigma.in_a[i];
    out[i] = same ? q - 1 - out[i - 1] : out[i - 1];
  }
  return out;
}

Binomial f_sigma_r(const Partition& sigma, int r, int q) {
  auto values = rho(sigma, r, q);
  Exponents a(sigma.s, 0), b(sigma.s, 0);
  for (int i = 0; i < sigma.s; ++i) {
    if (sigma.in_a[i])
      a[i] = values[i];
    else
      b[i] = values[i];
  }
  return Binomial{std::move(a), std::move(b)};
}

Partition transfer(const Partition& sigma, int i) {
  if (i < 2 || i >= sigma.s) throw BadTransfer("index out of range (need 2 <= i < s)");
  if (!sigma.in_a[i]) throw BadTransfer("index must lie in block A");
  if (sigma.in_a[i - 1]) throw BadTransfer("predecessor must lie in block B");
  Partition out = sigma;
  out.in_a[i] = false;
  out.in_a[i - 1] = true;
  return out;
}

Binomial sigma_swap(const Binomial& f, int i) {
  if (i < 0 || i + 2 >= f.s())
    throw IndexOutOfRange("swap index must satisfy 0 <= i <= s-3");
  Binomial out = f;
  std::swap(out.a[i], out.a[i + 2]);
  std::swap(out.b[i], out.b[i + 2]);
  return out;
}

std::vector<Partition> balanced_partitions(int s) {
  // combinations of {1..s-1} of size s/2 - 1, lexicographic
  std::vector<Partition> out;
  const int pick = s / 2 - 1;
  std::vector<int> combo(pick);
  for (int i = 0; i < pick; ++i) combo[i] = i + 1;
  while (true) {
    std::vector<int> members = combo;
    members.push_back(0);
    out.push_back(make_partition(s, members));
    int pos = pick - 1;
    while (pos >= 0 && combo[pos] == s - 1 - (pick - 1 - pos)) --pos;
    if (pos < 0) break;
    ++combo[pos];
    for (int i = pos + 1; i < pick; ++i) combo[i] = combo[i - 1] + 1;
  }
  return out;
}

Partition alternating_partition(int s) {
  std::vector<int> odds;
  for (int i = 0; i < s; i += 2) odds.push_back(i);
  return make_partition(s, odds);
}

std::vector<Binomial> CycleGenSet::all() const {
  std::vector<Binomial> out = toric_relations;
  for (const auto& e : combinatorial) out.push_back(e.f);
  return out;
}

namespace {

CycleGenSet cycle_generators(int k, int q, bool drop_redundant_alternating) {
  if (k < 2) throw InputError("even cycle needs k >= 2");
  if (q < 3) throw UnsupportedQ("q must be at least 3");
  const int s = 2 * k;
  CycleGenSet out;
  out.k = k;
  out.q = q;
  for (int i = 0; i < s - 1; ++i) {
    Exponents a(s, 0), b(s, 0);
    a[i] = q - 1;
    b[s - 1] = q - 1;
    out.toric_relations.push_back(Binomial{std::move(a), std::move(b)});
  }
  const Partition lambda = alternating_partition(s);
  for (const auto& sigma : balanced_partitions(s)) {
    for (int r = 1; r <= q - 2; ++r) {
      if (drop_redundant_alternating && sigma == lambda && r >= 2) continue;
      out.combinatorial.push_back({sigma, r, f_sigma_r(sigma, r, q)});
    }
  }
  return out;
}

}  // namespace

CycleGenSet even_cycle_generators(int k, int q) { return cycle_generators(k, q, false); }

CycleGenSet conjectured_basis(int k, int q) { return cycle_generators(k, q, true); }

namespace {

// Shared hypothesis checks for the vertex-disjoint-cycles results.
CycleFamily disjoint_cycle_family(const Graph& g) {
  auto comps = components(g);
  if (comps.size() != 1) throw NotConnected("graph must be connected");
  if (!comps[0].bipartite) throw NotBipartite("graph must be bipartite");
  auto family = cycle_blocks(g);
  if (!family)
    throw CyclesNotVertexDisjoint("the cycles of the graph are not pairwise vertex disjoint");
  return *family;
}

}  // namespace

EmbeddedGenSet bipartite_disjoint_generators(const Graph& g, int q) {
  EmbeddedGenSet out;
  out.family = disjoint_cycle_family(g);
  const int s = g.s();
  for (int i = 0; i < s - 1; ++i) {
    Exponents a(s, 0), b(s, 0);
    a[i] = q - 1;
    b[s - 1] = q - 1;
    out.binomials.push_back(Binomial{std::move(a), std::move(b)});
    ProvenanceEntry p;
    p.kind = ProvenanceEntry::Kind::toric;
    p.i = i;
    p.j = s - 1;
    out.provenance.push_back(p);
  }
  for (std::size_t c = 0; c < out.family.cycles.size(); ++c) {
    const auto& cyc = out.family.cycles[c];
    auto local = even_cycle_generators(cyc.k(), q);
    for (const auto& entry : local.combinatorial) {
      Exponents a(s, 0), b(s, 0);
      for (int j = 0; j < cyc.length(); ++j) {
        a[cyc.edge_indices[j]] = entry.f.a[j];
        b[cyc.edge_indices[j]] = entry.f.b[j];
      }
      out.binomials.push_back(Binomial{std::move(a), std::move(b)});
      ProvenanceEntry p;
      p.kind = ProvenanceEntry::Kind::cycle;
      p.cycle = (int)c;
      for (int j : entry.sigma.a_members()) p.sigma_ambient.push_back(cyc.edge_indices[j]);
      p.r = entry.r;
      out.provenance.push_back(std::move(p));
    }
  }
  return out;
}

long long regularity_formula_disjoint(const Graph& g, int q) {
  auto family = disjoint_cycle_family(g);
  return (long long)(q - 2) * (g.s() - family.k_sum() - 1);
}

long long regularity_upper_bound(const Graph& g, int q, const CycleFamily& family) {
  for (const auto& comp : components(g))
    if (!comp.bipartite) throw NotBipartite("graph must be bipartite");
  std::vector<bool> used(g.s(), false);
  for (const auto& cyc : family.cycles) {
    if (cyc.length() % 2 != 0) throw OddCycle("cycle family contains an odd cycle");
    for (int e : cyc.edge_indices) {
      if (e < 0 || e >= g.s()) throw IndexOutOfRange("cycle edge index out of range");
      if (used[e]) throw EdgesOverlap("cycle family is not edge disjoint");
      used[e] = true;
    }
  }
  return (long long)(q - 2) * (g.s() - family.k_sum() - 1);
}

}  // namespace toric

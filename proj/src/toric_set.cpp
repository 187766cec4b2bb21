#include "toric/toric_set.hpp"

#include <algorithm>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

// (q-1)^n with a cap; throws EnumerationTooLarge beyond it.
long long torus_size_checked(int units, int n, long long cap) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= units;
    if (total > cap)
      throw EnumerationTooLarge("(q-1)^" + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(cap));
  }
  return total;
}

void finalize(ToricSet& x) {
  std::sort(x.points.begin(), x.points.end());
  x.points.erase(std::unique(x.points.begin(), x.points.end()), x.points.end());
}

unsigned long long upow(unsigned long long b, int e) {
  unsigned long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (b != 0 && r > ~0ULL / b) throw CapError("point count overflows 64 bits");
    r *= b;
  }
  return r;
}

}  // namespace

ToricSet enumerate_toric_set(const Graph& g, FieldPtr field, long long enum_cap) {
  const Field& f = *field;
  const int qm1 = f.q() - 1;
  torus_size_checked(qm1, g.n, enum_cap);

  ToricSet x;
  x.field = field;
  x.s = g.s();

  std::vector<int> idx(g.n, 0);  // odometer over unit exponents
  std::vector<std::uint16_t> pt(g.s());
  while (true) {
    for (int i = 0; i < g.s(); ++i) {
      auto [u, v] = g.edges[i];
      pt[i] = f.rmul(f.exp_raw(idx[u]), f.exp_raw(idx[v]));
    }
    const std::uint16_t scale = f.rinv(pt[0]);
    if (scale != 1)
      for (auto& c : pt) c = f.rmul(c, scale);
    x.points.push_back(pt);

    int pos = g.n - 1;
    while (pos >= 0 && idx[pos] == qm1 - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  finalize(x);
  return x;
}

ToricSet projective_torus(int s, FieldPtr field, long long enum_cap) {
  if (s < 2) throw InputError("projective torus needs s >= 2");
  const Field& f = *field;
  const int qm1 = f.q() - 1;
  torus_size_checked(qm1, s - 1, enum_cap);

  ToricSet x;
  x.field = field;
  x.s = s;
  std::vector<int> idx(s - 1, 0);
  while (true) {
    std::vector<std::uint16_t> pt(s);
    pt[0] = 1;
    for (int i = 0; i < s - 1; ++i) pt[i + 1] = f.exp_raw(idx[i]);
    x.points.push_back(std::move(pt));
    int pos = s - 2;
    while (pos >= 0 && idx[pos] == qm1 - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  finalize(x);
  return x;
}

unsigned long long length_formula(const Graph& g, int q) {
  auto comps = components(g);
  const int m = (int)comps.size();
  const int gamma = nonbipartite_count(comps);
  const unsigned long long u = (unsigned long long)(q - 1);
  if (gamma == 0) return upow(u, g.n - m - 1);
  if (q % 2 == 0) return upow(u, g.n - m + gamma - 1);
  return upow(u, g.n - m) * upow(u / 2, gamma - 1);
}

unsigned long long kernel_order(const ComponentInfo& comp, int q) {
  if (!comp.bipartite && q % 2 == 1) return (unsigned long long)(q - 1) / 2;
  return (unsigned long long)(q - 1);
}

std::string to_csv(const ToricSet& x) {
  std::ostringstream out;
  for (const auto& pt : x.points) {
    for (std::size_t i = 0; i < pt.size(); ++i) {
      if (i) out << ',';
      out << pt[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace toric

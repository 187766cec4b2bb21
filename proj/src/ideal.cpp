#include "toric/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "toric/code.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

struct ExpHash {
  std::size_t operator()(const Exponents& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : v) {
      h ^= (std::size_t)e + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Union-find over monomial ids.
struct Dsu {
  std::vector<int> parent;
  int add() {
    parent.push_back((int)parent.size());
    return (int)parent.size() - 1;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

Exponents add_exp(const Exponents& m, const Exponents& a) {
  Exponents out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i] + a[i];
  return out;
}

void require_homogeneous(const Binomial& f) {
  if (!f.homogeneous())
    throw NotHomogeneous("binomial is not homogeneous: " + pretty_binomial(f));
}

long long product_row_count(const std::vector<Binomial>& gens, int d, int s) {
  long long rows = 0;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = g.degree();
    if (dg <= d) rows += monomial_count(s, d - dg);
  }
  return rows;
}

}  // namespace

FieldElem evaluate_binomial(const Field& f, const Binomial& bin,
                            std::span<const std::uint16_t> point) {
  if ((std::size_t)bin.s() != point.size())
    throw InputError("point arity does not match the binomial");
  const int qm1 = f.q() - 1;
  long long la = 0, lb = 0;
  for (int i = 0; i < bin.s(); ++i) {
    const std::uint16_t c = point[i];
    if (c == 0) throw InputError("point has a zero coordinate");
    la += (long long)bin.a[i] * f.log_raw(c);
    lb += (long long)bin.b[i] * f.log_raw(c);
  }
  const std::uint16_t ta = f.exp_raw((std::uint32_t)(la % qm1));
  const std::uint16_t tb = f.exp_raw((std::uint32_t)(lb % qm1));
  return {f.rsub(ta, tb), f.id()};
}

std::optional<std::size_t> nonvanishing_index(const Binomial& bin, const ToricSet& x) {
  require_homogeneous(bin);
  const Field& f = *x.field;
  for (std::size_t j = 0; j < x.points.size(); ++j)
    if (evaluate_binomial(f, bin, x.points[j]).repr != 0) return j;
  return std::nullopt;
}

bool vanishes_on(const Binomial& bin, const ToricSet& x) {
  return !nonvanishing_index(bin, x).has_value();
}

ReduceStep reduce_exponent_step(const Binomial& f, int q) {
  for (int i = 0; i < f.s(); ++i)
    if (f.a[i] > 0 && f.b[i] > 0)
      throw NotReducible("supports are not disjoint");
  int i = -1;
  for (int k = 0; k < f.s(); ++k)
    if (f.a[k] >= q - 1) {
      i = k;
      break;
    }
  if (i < 0) throw NotReducible("no exponent reaches q-1 on the left side");
  int j = -1;
  for (int k = 0; k < f.s(); ++k)
    if (f.b[k] > 0) {
      j = k;
      break;
    }
  if (j < 0) throw NotReducible("right side is empty");
  Binomial g = f;
  g.a[i] -= q - 1;
  g.a[j] += q - 2;
  g.b[j] -= 1;
  return {std::move(g), j};
}

Binomial normalize_binomial(const Binomial& f, int q) {
  require_homogeneous(f);
  Binomial cur = f;
  auto strip = [&] {
    for (int i = 0; i < cur.s(); ++i) {
      int c = std::min(cur.a[i], cur.b[i]);
      cur.a[i] -= c;
      cur.b[i] -= c;
    }
  };
  strip();
  while (!cur.is_zero()) {
    bool left = false, right = false;
    for (int i = 0; i < cur.s(); ++i) {
      left = left || cur.a[i] >= q - 1;
      right = right || cur.b[i] >= q - 1;
    }
    if (!left && !right) break;
    if (!left) std::swap(cur.a, cur.b);  // reduce the side that carries q-1
    cur = reduce_exponent_step(cur, q).g;
    strip();
  }
  if (cur.is_zero()) {
    Exponents z(cur.s(), 0);
    return Binomial{z, z};
  }
  return cur;
}

long long ideal_dim_at_degree(const std::vector<Binomial>& gens, int d, int s,
                              long long matrix_cap) {
  if (d < 0) throw InputError("degree must be nonnegative");
  if (product_row_count(gens, d, s) > matrix_cap || monomial_count(s, d) > matrix_cap)
    throw MatrixTooLarge("degree-" + std::to_string(d) +
                         " piece exceeds the matrix cap");
  std::unordered_map<Exponents, int, ExpHash> ids;
  Dsu dsu;
  auto id_of = [&](Exponents m) {
    auto [it, fresh] = ids.try_emplace(std::move(m), (int)ids.size());
    if (fresh) dsu.add();
    return it->second;
  };
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    require_homogeneous(g);
    int dg = g.degree();
    if (dg > d) continue;
    for (const auto& m : monomial_basis(s, d - dg))
      dsu.unite(id_of(add_exp(m, g.a)), id_of(add_exp(m, g.b)));
  }
  long long touched = (long long)ids.size();
  long long comps = 0;
  for (int v = 0; v < (int)dsu.parent.size(); ++v)
    if (dsu.find(v) == v) ++comps;
  return touched - comps;
}

long long ideal_dim_at_degree_dense(const Field& f, const std::vector<Binomial>& gens,
                                    int d, int s, long long matrix_cap) {
  if (d < 0) throw InputError("degree must be nonnegative");
  const long long cols = monomial_count(s, d);
  if (cols > matrix_cap || product_row_count(gens, d, s) > matrix_cap / std::max<long long>(cols, 1))
    throw MatrixTooLarge("degree-" + std::to_string(d) +
                         " piece exceeds the matrix cap");
  const auto basis = monomial_basis(s, d);
  std::unordered_map<Exponents, std::size_t, ExpHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  RowBasis rb(f, basis.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    require_homogeneous(g);
    int dg = g.degree();
    if (dg > d) continue;
    for (const auto& m : monomial_basis(s, d - dg)) {
      std::vector<std::uint16_t> row(basis.size(), 0);
      row[index.at(add_exp(m, g.a))] = 1;
      row[index.at(add_exp(m, g.b))] = f.rneg(1);
      rb.insert(std::move(row));
    }
  }
  return (long long)rb.rank();
}

GenSetReport verify_generating_set(const std::vector<Binomial>& gens, const ToricSet& x,
                                   std::optional<int> up_to, const Caps& caps,
                                   const HilbertProfile* precomputed) {
  const int s = x.s;
  const int q = x.field->q();
  std::vector<std::size_t> offenders;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!vanishes_on(gens[i], x)) offenders.push_back(i);
  }
  if (!offenders.empty())
    throw GeneratorDoesNotVanish(std::to_string(offenders.size()) +
                                     " generator(s) do not vanish on X",
                                 offenders);

  GenSetReport report;
  report.vanish_ok = true;

  if (precomputed && !precomputed->regularity)
    throw InputError("precomputed Hilbert profile must be complete");
  const HilbertProfile profile =
      precomputed ? *precomputed : hilbert_profile(x, std::nullopt, caps.matrix_cap);
  report.regularity_bound = *profile.regularity + 1;
  if (s / 2 >= 2) report.support_bound = (long long)(s / 2) * (q - 2);
  long long n = report.regularity_bound;
  if (report.support_bound) n = std::min(n, *report.support_bound);
  if (up_to) n = *up_to;
  report.verified_up_to = (int)n;

  report.generates = true;
  for (int d = 0; d <= n; ++d) {
    DegreeRow row;
    row.d = d;
    row.dim_sd = monomial_count(s, d);
    const long long h =
        d < (int)profile.values.size() ? profile.values[d] : x.size();
    row.dim_ixd = row.dim_sd - h;
    row.dim_jd = ideal_dim_at_degree(gens, d, s, caps.matrix_cap);
    if (row.dim_jd > row.dim_ixd)
      throw std::logic_error(
          "span of vanishing binomials exceeds the vanishing ideal; "
          "dimension bookkeeping is broken");
    if (row.dim_jd != row.dim_ixd) report.generates = false;
    report.table.push_back(row);
  }
  return report;
}

MinimalizeResult minimalize(const std::vector<Binomial>& gens, const ToricSet& x,
                            const Caps& caps) {
  auto report = verify_generating_set(gens, x, std::nullopt, caps);
  if (!report.generates)
    throw VerificationError("minimalize requires a verified generating set");

  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    int di = gens[i].degree(), dj = gens[j].degree();
    if (di != dj) return di < dj;
    return grevlex_compare(leading_monomial(gens[i]), leading_monomial(gens[j])) < 0;
  });

  std::vector<bool> alive(gens.size(), true);
  const int s = x.s;
  for (std::size_t idx : order) {
    const Binomial& g = gens[idx];
    if (g.is_zero()) {
      alive[idx] = false;
      continue;
    }
    // g is redundant iff its two monomials are connected by the others
    const int d = g.degree();
    std::unordered_map<Exponents, int, ExpHash> ids;
    Dsu dsu;
    auto id_of = [&](Exponents m) {
      auto [it, fresh] = ids.try_emplace(std::move(m), (int)ids.size());
      if (fresh) dsu.add();
      return it->second;
    };
    int target_a = id_of(g.a), target_b = id_of(g.b);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!alive[k] || k == idx || gens[k].is_zero()) continue;
      int dk = gens[k].degree();
      if (dk > d) continue;
      for (const auto& m : monomial_basis(s, d - dk))
        dsu.unite(id_of(add_exp(m, gens[k].a)), id_of(add_exp(m, gens[k].b)));
    }
    if (dsu.find(target_a) == dsu.find(target_b)) alive[idx] = false;
  }

  MinimalizeResult out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (alive[i])
      out.kept.push_back(gens[i]);
    else
      out.redundant.push_back(i);
  }
  return out;
}

}  // namespace toric

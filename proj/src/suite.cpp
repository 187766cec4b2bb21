#include "toric/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "toric/code.hpp"
#include "toric/errors.hpp"
#include "toric/generators.hpp"
#include "toric/groebner.hpp"
#include "toric/ideal.hpp"
#include "toric/toric_set.hpp"

namespace toric {

namespace {

Graph from_edges(int n, std::vector<std::pair<int, int>> edges_1based) {
  for (auto& [u, v] : edges_1based) {
    --u;
    --v;
  }
  return make_graph(n, std::move(edges_1based));
}

}  // namespace

Graph two_triangles_graph() {
  return from_edges(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
}

Graph offending_graph_g1() {
  return from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}, {5, 1}, {1, 6}, {6, 3}});
}

Graph offending_graph_g2() {
  return from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 5}, {4, 5}});
}

Graph hip_graph() {
  return from_edges(7, {{1, 2}, {2, 3}, {1, 3}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
}

std::vector<NamedGraph> length_corpus() {
  std::vector<NamedGraph> out;
  auto add = [&](std::string name, Graph g) { out.push_back({std::move(name), std::move(g)}); };
  // trees
  add("path-2e", path_graph(3));
  add("path-3e", path_graph(4));
  add("path-4e", path_graph(5));
  add("path-5e", path_graph(6));
  add("star-3", star_graph(3));
  add("star-4", star_graph(4));
  add("star-5", star_graph(5));
  add("broom", with_pendant_path(path_graph(4), 1, 1));
  add("caterpillar", with_pendant_path(with_pendant_path(path_graph(4), 1, 1), 2, 1));
  // cycles
  add("triangle", cycle_graph(3));
  add("square", cycle_graph(4));
  add("c5", cycle_graph(5));
  add("c6", cycle_graph(6));
  // unicyclic
  add("triangle+pendant", with_pendant_path(cycle_graph(3), 0, 1));
  add("triangle+path2", with_pendant_path(cycle_graph(3), 0, 2));
  add("c4+pendant", with_pendant_path(cycle_graph(4), 0, 1));
  add("c4+path2", with_pendant_path(cycle_graph(4), 0, 2));
  add("c4+2pendants-adjacent", with_pendant_path(with_pendant_path(cycle_graph(4), 0, 1), 1, 1));
  add("c4+2pendants-opposite", with_pendant_path(with_pendant_path(cycle_graph(4), 0, 1), 2, 1));
  add("c5+pendant", with_pendant_path(cycle_graph(5), 0, 1));
  add("c6+pendant", with_pendant_path(cycle_graph(6), 0, 1));
  // cyclomatic number >= 2
  add("k4", complete_graph(4));
  add("k4-minus-edge", from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}}));
  add("k5", complete_graph(5));
  add("k23", complete_bipartite(2, 3));
  add("k33", complete_bipartite(3, 3));
  add("book-2", from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}));
  add("wheel-4", from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}));
  add("c6+chord", from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}}));
  // two components
  add("triangle+square", disjoint_union(cycle_graph(3), cycle_graph(4)));
  add("triangle+triangle", disjoint_union(cycle_graph(3), cycle_graph(3)));
  add("triangle+edge", disjoint_union(cycle_graph(3), path_graph(2)));
  add("square+edge", disjoint_union(cycle_graph(4), path_graph(2)));
  add("square+square", disjoint_union(cycle_graph(4), cycle_graph(4)));
  add("path2+path2", disjoint_union(path_graph(3), path_graph(3)));
  add("triangle-and-path2", disjoint_union(cycle_graph(3), path_graph(3)));
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string first_failure;
  long long count = 0;

  void expect(bool cond, const std::function<std::string()>& describe) {
    ++count;
    if (!cond && ok) {
      ok = false;
      first_failure = describe();
    }
  }
  void expect(bool cond, const std::string& describe) {
    expect(cond, [&] { return describe; });
  }
};

std::string fmt_kq(int k, int q) {
  return "(k=" + std::to_string(k) + ", q=" + std::to_string(q) + ")";
}

// ---- criterion bodies ----------------------------------------------------

void c1_length(Check& c, const Caps& caps) {
  std::map<int, FieldPtr> fields;
  for (int q : {3, 4, 5}) fields[q] = make_field_q(q);
  for (const auto& [name, g] : length_corpus()) {
    for (int q : {3, 4, 5}) {
      const auto formula = length_formula(g, q);
      const auto x = enumerate_toric_set(g, fields[q], caps.enum_cap);
      c.expect((unsigned long long)x.size() == formula, [&, q] {
        return name + " q=" + std::to_string(q) + ": enumerated " +
               std::to_string(x.size()) + " != formula " + std::to_string(formula);
      });
    }
  }
  // published anchors for the triangle+square graph
  const Graph ts = disjoint_union(cycle_graph(3), cycle_graph(4));
  c.expect(length_formula(ts, 5) == 1024, "triangle+square q=5 must give 1024");
  c.expect(length_formula(ts, 4) == 243, "triangle+square q=4 must give 243");
}

void c2_torus(Check& c, const Caps& caps) {
  for (int s : {2, 3, 4}) {
    for (int q : {3, 4, 5}) {
      auto f = make_field_q(q);
      const ToricSet t = projective_torus(s, f, caps.enum_cap);
      const long long reg = torus_regularity(s, q);
      const auto series = torus_hilbert_series_coeffs(s, q, (int)reg + 2);
      for (int d = 0; d <= reg + 2; ++d) {
        const long long h = hilbert_function(t, d, caps.matrix_cap);
        c.expect(h == torus_dimension(s, q, d), [&] {
          return "torus s=" + std::to_string(s) + " q=" + std::to_string(q) +
                 " d=" + std::to_string(d) + ": rank != closed form";
        });
        c.expect(h == series[d], [&] {
          return "torus s=" + std::to_string(s) + " q=" + std::to_string(q) +
                 " d=" + std::to_string(d) + ": rank != series coefficient";
        });
      }
      const auto profile = hilbert_profile(t, std::nullopt, caps.matrix_cap);
      c.expect(profile.regularity && *profile.regularity == reg, [&] {
        return "torus s=" + std::to_string(s) + " q=" + std::to_string(q) +
               ": computed regularity != (s-1)(q-2)";
      });
    }
  }
  for (int q : {3, 4}) {
    auto f = make_field_q(q);
    const ToricSet t = projective_torus(3, f, caps.enum_cap);
    for (int d = 1; d < torus_regularity(3, q); ++d) {
      const auto params = code_params(t, d, true, caps);
      c.expect(params.min_distance == torus_min_distance(3, q, d), [&] {
        return "torus s=3 q=" + std::to_string(q) + " d=" + std::to_string(d) +
               ": brute-force distance != closed form";
      });
    }
  }
}

const std::vector<std::pair<int, int>> kCycleGrid = {{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}};

void c3_cycle_generators(Check& c, const Caps& caps) {
  for (auto [k, q] : kCycleGrid) {
    auto x = enumerate_toric_set(cycle_graph(2 * k), make_field_q(q), caps.enum_cap);
    const auto report = verify_generating_set(even_cycle_generators(k, q).all(), x,
                                              std::nullopt, caps);
    c.expect(report.generates,
             fmt_kq(k, q) + ": combinatorial set fails graded-dimension verification");
  }
}

void c4_cycle_regularity(Check& c, const Caps& caps) {
  for (auto [k, q] : kCycleGrid) {
    auto x = enumerate_toric_set(cycle_graph(2 * k), make_field_q(q), caps.enum_cap);
    const auto profile = hilbert_profile(x, std::nullopt, caps.matrix_cap);
    c.expect(profile.regularity && *profile.regularity == (long long)(q - 2) * (k - 1),
             fmt_kq(k, q) + ": regularity != (q-2)(k-1)");
  }
}

void c5_degree_extremes(Check& c, const Caps&) {
  for (auto [k, q] : kCycleGrid) {
    const int s = 2 * k;
    const auto set = even_cycle_generators(k, q);
    const long long want_max = (long long)(q - 2) * (k - 1) + 1;
    long long max_deg = 0, min_comb = 1LL << 40;
    for (const auto& b : set.all()) max_deg = std::max<long long>(max_deg, b.degree());
    for (const auto& e : set.combinatorial)
      min_comb = std::min<long long>(min_comb, e.f.degree());
    c.expect(max_deg == want_max, fmt_kq(k, q) + ": max generator degree != (q-2)(k-1)+1");
    c.expect(min_comb == k, fmt_kq(k, q) + ": min combinatorial degree != k");

    // explicit top-degree witness: A = {1,3,...,2k-3,2k} (1-based), r = q-2
    std::vector<int> a_members;
    for (int i = 0; i + 2 < s; i += 2) a_members.push_back(i);
    a_members.push_back(s - 1);
    const Binomial witness = f_sigma_r(make_partition(s, a_members), q - 2, q);
    c.expect(witness.degree() == want_max,
             fmt_kq(k, q) + ": top-degree witness has the wrong degree");
    bool found = false;
    for (const auto& e : set.combinatorial) found = found || e.f == witness;
    c.expect(found, fmt_kq(k, q) + ": top-degree witness missing from the set");
    // bottom witness: the alternating partition at r = 1
    const Binomial bottom = f_sigma_r(alternating_partition(s), 1, q);
    c.expect(bottom.degree() == k, fmt_kq(k, q) + ": alternating binomial degree != k");
  }
}

std::vector<Binomial> two_triangles_published_generators() {
  auto bin = [](Exponents a, Exponents b) { return make_binomial(std::move(a), std::move(b)); };
  std::vector<Binomial> out;
  for (int i = 4; i >= 0; --i) {
    Exponents a(6, 0), b(6, 0);
    a[i] = 2;
    b[5] = 2;
    out.push_back(bin(a, b));
  }
  out.push_back(bin({0, 0, 1, 1, 1, 0}, {1, 1, 0, 0, 0, 1}));
  out.push_back(bin({0, 1, 0, 1, 1, 0}, {1, 0, 1, 0, 0, 1}));
  out.push_back(bin({1, 0, 0, 1, 1, 0}, {0, 1, 1, 0, 0, 1}));
  out.push_back(bin({0, 1, 1, 0, 1, 0}, {1, 0, 0, 1, 0, 1}));
  out.push_back(bin({1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}));
  out.push_back(bin({1, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 1}));
  out.push_back(bin({0, 1, 1, 1, 0, 0}, {1, 0, 0, 0, 1, 1}));
  out.push_back(bin({1, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 1, 1}));
  out.push_back(bin({1, 1, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 1}));
  out.push_back(bin({1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}));
  return out;
}

void c6_two_triangles(Check& c, const Caps& caps) {
  const auto gens = two_triangles_published_generators();
  c.expect(gens.size() == 15, "expected the fifteen published generators");
  auto x = enumerate_toric_set(two_triangles_graph(), make_field_q(3), caps.enum_cap);
  c.expect(x.size() == 16, "two-triangles |X| over GF(3) should be 16");
  const auto report = verify_generating_set(gens, x, std::nullopt, caps);
  c.expect(report.generates, "published set fails generation verification");
  if (report.generates) {
    const auto min = minimalize(gens, x, caps);
    c.expect(min.redundant.empty(), "published minimal set lost a generator");
  }
}

void c7_pipeline(Check& c, const Caps& caps) {
  const int q = 3;
  auto field = make_field_q(q);
  std::vector<std::pair<std::string, Graph>> cases = {
      {"c4+pendant", with_pendant_path(cycle_graph(4), 0, 1)},
      {"c4+2pendants", with_pendant_path(with_pendant_path(cycle_graph(4), 0, 1), 2, 1)},
      {"c4+path2", with_pendant_path(cycle_graph(4), 0, 2)},
      {"c6+pendant", with_pendant_path(cycle_graph(6), 0, 1)},
      {"c6+2pendants", with_pendant_path(with_pendant_path(cycle_graph(6), 0, 1), 3, 1)},
  };
  for (const auto& [name, g] : cases) {
    const auto gens = bipartite_disjoint_generators(g, q);
    auto x = enumerate_toric_set(g, field, caps.enum_cap);
    const auto report = verify_generating_set(gens.binomials, x, std::nullopt, caps);
    c.expect(report.generates, name + ": embedded set fails verification");
    const auto profile = hilbert_profile(x, std::nullopt, caps.matrix_cap);
    const long long formula = regularity_formula_disjoint(g, q);
    c.expect(profile.regularity && *profile.regularity == formula, [&] {
      return name + ": regularity " +
             (profile.regularity ? std::to_string(*profile.regularity) : "?") +
             " != formula " + std::to_string(formula);
    });
  }
}

void c8_offending_graphs(Check& c, const Caps& caps) {
  const int q = 5;
  auto field = make_field_q(q);

  // G1: the glued pair of 4-cycles
  const Graph g1 = offending_graph_g1();
  auto x1 = enumerate_toric_set(g1, field, caps.enum_cap);
  c.expect(x1.size() == 256, "|X(G1)| over GF(5) should be 256");

  // (a) the published degree-4 binomial vanishes on X(G1)
  const Binomial special =
      make_binomial({1, 0, 0, 1, 0, 1, 1, 0}, {0, 1, 1, 0, 1, 0, 0, 1});
  c.expect(vanishes_on(special, x1), "t1 t4 t6 t7 - t2 t3 t5 t8 must vanish on X(G1)");

  const auto profile1 = hilbert_profile(x1, std::nullopt, caps.matrix_cap);

  // (b) the naive cycle-union candidate set fails generation
  std::vector<Binomial> naive;
  for (int i = 0; i < 7; ++i) {
    Exponents a(8, 0), b(8, 0);
    a[i] = q - 1;
    b[7] = q - 1;
    naive.push_back(make_binomial(std::move(a), std::move(b)));
  }
  const auto local = even_cycle_generators(2, q);
  for (int offset : {0, 4}) {
    for (const auto& e : local.combinatorial) {
      Exponents a(8, 0), b(8, 0);
      for (int j = 0; j < 4; ++j) {
        a[offset + j] = e.f.a[j];
        b[offset + j] = e.f.b[j];
      }
      naive.push_back(make_binomial(std::move(a), std::move(b)));
    }
  }
  const auto naive_report = verify_generating_set(naive, x1, std::nullopt, caps, &profile1);
  c.expect(!naive_report.generates,
           "the naive per-cycle candidate set must fail for G1");

  // (c) regularity equals the edge-disjoint-family bound
  c.expect(profile1.regularity && *profile1.regularity == 9, "reg for X(G1) should be 9");
  const auto family1 = validate_cycle_family(g1, {{1, 2, 3, 4}, {3, 5, 1, 6}});
  c.expect(regularity_upper_bound(g1, q, family1) == 9, "G1 bound should be 9");

  // (d) G2: vanishing witness, exact regularity 6, bound 9 not sharp
  const Graph g2 = offending_graph_g2();
  auto x2 = enumerate_toric_set(g2, field, caps.enum_cap);
  const Binomial special2 = make_binomial({1, 1, 0, 0, 2, 0}, {0, 0, 1, 1, 0, 2});
  c.expect(vanishes_on(special2, x2), "t1 t2 t5^2 - t3 t4 t6^2 must vanish on X(G2)");
  const auto profile2 = hilbert_profile(x2, std::nullopt, caps.matrix_cap);
  c.expect(profile2.regularity && *profile2.regularity == 6, "reg for X(G2) should be 6");
  const auto family2 = validate_cycle_family(g2, {{1, 2, 3, 4}});
  const long long bound2 = regularity_upper_bound(g2, q, family2);
  c.expect(bound2 == 9, "G2 single-cycle bound should be 9");
  c.expect(bound2 > *profile2.regularity, "G2 bound is expected to be slack");
}

void c9_conjecture(Check& c, std::vector<std::string>& findings, const Caps& caps) {
  for (auto [k, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {2, 5}, {3, 3}}) {
    const auto report = test_conjecture(k, q, caps);
    c.expect(report.generates, fmt_kq(k, q) + ": trimmed basis must generate");
    if (!report.minimal)
      findings.push_back(fmt_kq(k, q) + ": minimality verdict is FALSE — " +
                         (report.witnesses.empty() ? "" : report.witnesses.front()));
    if (!report.groebner)
      findings.push_back(fmt_kq(k, q) + ": Groebner verdict is FALSE — " +
                         (report.witnesses.empty() ? "" : report.witnesses.back()));
  }
}

void c10_properties(Check& c, const Caps& caps) {
  // (a) Hilbert monotonicity + stabilization over the profile corpus
  long long profiled = 0;
  for (const auto& [name, g] : length_corpus()) {
    for (int q : {3, 4, 5}) {
      const auto formula = length_formula(g, q);
      if (formula > 256 || g.s() > 8) continue;  // keep rank work desk-sized
      auto x = enumerate_toric_set(g, make_field_q(q), caps.enum_cap);
      const auto profile = hilbert_profile(x, std::nullopt, caps.matrix_cap);
      ++profiled;
      c.expect(profile.regularity.has_value(),
               name + " q=" + std::to_string(q) + ": profile did not stabilize");
      c.expect(profile.values.front() == 1,
               name + " q=" + std::to_string(q) + ": H(0) != 1");
      for (std::size_t d = 1; d < profile.values.size(); ++d)
        c.expect(profile.values[d - 1] <= profile.values[d],
                 name + " q=" + std::to_string(q) + ": Hilbert function not monotone");
      c.expect(profile.regularity && *profile.regularity <= x.size() - 1,
               name + " q=" + std::to_string(q) + ": regularity exceeds |X|-1");
    }
  }
  c.expect(profiled >= 30, "profile corpus unexpectedly small");

  // (b) Singleton bound on every computed parameter set; distance 1 at reg
  for (int s : {2, 3}) {
    for (int q : {3, 4}) {
      auto t = projective_torus(s, make_field_q(q), caps.enum_cap);
      const long long reg = torus_regularity(s, q);
      for (int d = 0; d <= reg + 1; ++d) {
        const auto params = code_params(t, d, true, caps);
        c.expect(params.min_distance &&
                     *params.min_distance <= params.length - params.dimension + 1,
                 "Singleton bound violated on a torus code");
        if (d >= reg)
          c.expect(*params.min_distance == 1, "distance must be 1 past the regularity");
      }
    }
  }
  for (int len : {4, 6}) {
    auto x = enumerate_toric_set(cycle_graph(len), make_field_q(3), caps.enum_cap);
    const auto profile = hilbert_profile(x, std::nullopt, caps.matrix_cap);
    for (int d = 0; d <= *profile.regularity + 1; ++d) {
      const auto params = code_params(x, d, true, caps);
      c.expect(params.min_distance &&
                   *params.min_distance <= params.length - params.dimension + 1,
               "Singleton bound violated on a cycle code");
    }
  }

  // (c) the variable swap t_i <-> t_{i+2} permutes the combinatorial set
  for (auto [k, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}}) {
    const auto set = even_cycle_generators(k, q);
    std::set<std::vector<Exponents>> keys;
    for (const auto& e : set.combinatorial) keys.insert({e.f.a, e.f.b});
    for (int i = 0; i + 2 < 2 * k; ++i) {
      std::set<std::vector<Exponents>> image;
      for (const auto& e : set.combinatorial) {
        Binomial swapped = sigma_swap(e.f, i);
        // the swap may move t_1 to the other side; normalize orientation
        if (swapped.a[0] == 0) std::swap(swapped.a, swapped.b);
        image.insert({swapped.a, swapped.b});
      }
      c.expect(image == keys, fmt_kq(k, q) + ": swap at " + std::to_string(i + 1) +
                                  " does not permute the combinatorial set");
    }
  }

  // (d) bridge exclusion: exhaustive over normalized binomials at q = 3
  for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{
           {"c4+pendant", with_pendant_path(cycle_graph(4), 0, 1)},
           {"c6+pendant", with_pendant_path(cycle_graph(6), 0, 1)},
           {"c4+2pendants", with_pendant_path(with_pendant_path(cycle_graph(4), 0, 1), 2, 1)}}) {
    const int q = 3;
    auto x = enumerate_toric_set(g, make_field_q(q), caps.enum_cap);
    auto family = cycle_blocks(g);
    std::vector<bool> on_cycle(g.s(), false);
    for (const auto& cyc : family->cycles)
      for (int e : cyc.edge_indices) on_cycle[e] = true;
    // all (a, b) with disjoint supports and entries <= q-2 = 1
    const int s = g.s();
    std::vector<int> state(s, 0);  // 0: absent, 1: in a, 2: in b
    while (true) {
      Exponents a(s, 0), b(s, 0);
      for (int i = 0; i < s; ++i) {
        if (state[i] == 1) a[i] = 1;
        if (state[i] == 2) b[i] = 1;
      }
      Binomial f{a, b};
      if (!f.is_zero() && f.homogeneous() && vanishes_on(f, x)) {
        for (int i = 0; i < s; ++i)
          if (!on_cycle[i])
            c.expect(a[i] == 0 && b[i] == 0,
                     name + ": vanishing normalized binomial touches bridge edge " +
                         std::to_string(i + 1));
      }
      int pos = s - 1;
      while (pos >= 0 && state[pos] == 2) state[pos--] = 0;
      if (pos < 0) break;
      ++state[pos];
    }
  }

  // (e) transferring an index between blocks preserves vanishing
  for (auto [len, q] : std::vector<std::pair<int, int>>{{4, 3}, {4, 5}, {6, 3}}) {
    auto x = enumerate_toric_set(cycle_graph(len), make_field_q(q), caps.enum_cap);
    for (const auto& sigma : balanced_partitions(len)) {
      for (int r = 1; r <= q - 2; ++r) {
        for (int i = 2; i < len; ++i) {
          if (!sigma.in_a[i] || sigma.in_a[i - 1]) continue;
          const Partition moved = transfer(sigma, i);
          const bool before = vanishes_on(f_sigma_r(sigma, r, q), x);
          const bool after = vanishes_on(f_sigma_r(moved, r, q), x);
          c.expect(before == after, "transfer changed membership on a cycle");
          c.expect(before, "balanced binomial unexpectedly fails to vanish");
        }
      }
    }
  }
}

CriterionResult run_criterion(int id, const std::string& name, double budget_s,
                              const std::function<void(Check&, std::vector<std::string>&)>& body) {
  CriterionResult result;
  result.id = id;
  result.name = name;
  result.budget_s = budget_s;
  Check check;
  const auto start = Clock::now();
  try {
    body(check, result.findings);
    result.status = check.ok ? "pass" : "fail";
    result.detail = check.ok ? std::to_string(check.count) + " checks"
                             : check.first_failure;
  } catch (const CapError& e) {
    result.status = "skip";
    result.detail = std::string("cap exceeded: ") + e.what();
  } catch (const std::exception& e) {
    result.status = "fail";
    result.detail = e.what();
  }
  result.elapsed_s =
      std::chrono::duration<double>(Clock::now() - start).count();
  result.within_budget = result.elapsed_s < budget_s;
  if (result.status == "pass" && !result.within_budget) {
    result.status = "fail";
    result.detail = "exceeded runtime budget of " + std::to_string(budget_s) + "s";
  }
  return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const Caps& caps) {
  std::vector<CriterionResult> out;
  auto simple = [&caps](void (*fn)(Check&, const Caps&)) {
    return [fn, &caps](Check& c, std::vector<std::string>&) { fn(c, caps); };
  };
  out.push_back(run_criterion(1, "length formula vs enumeration", 60, simple(c1_length)));
  out.push_back(run_criterion(2, "torus closed forms", 120, simple(c2_torus)));
  out.push_back(run_criterion(3, "even-cycle generating sets", 300, simple(c3_cycle_generators)));
  out.push_back(run_criterion(4, "even-cycle regularity", 300, simple(c4_cycle_regularity)));
  out.push_back(run_criterion(5, "generator degree extremes", 60, simple(c5_degree_extremes)));
  out.push_back(run_criterion(6, "two-triangles regression", 60, simple(c6_two_triangles)));
  out.push_back(run_criterion(7, "vertex-disjoint-cycles pipeline", 300, simple(c7_pipeline)));
  out.push_back(run_criterion(8, "glued-cycles regressions", 600, simple(c8_offending_graphs)));
  out.push_back(run_criterion(9, "trimmed-basis battery", 600,
                              [&caps](Check& c, std::vector<std::string>& findings) {
                                c9_conjecture(c, findings, caps);
                              }));
  out.push_back(run_criterion(10, "property suites", 600, simple(c10_properties)));
  return out;
}

}  // namespace toric

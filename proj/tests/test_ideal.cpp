#include "toric/ideal.hpp"

#include <random>

#include "doctest.h"
#include "toric/errors.hpp"
#include "toric/generators.hpp"
#include "toric/suite.hpp"

using namespace toric;

namespace {

std::vector<Binomial> toric_relations(int s, int q) {
  std::vector<Binomial> out;
  for (int i = 0; i < s - 1; ++i) {
    Exponents a(s, 0), b(s, 0);
    a[i] = q - 1;
    b[s - 1] = q - 1;
    out.push_back(make_binomial(std::move(a), std::move(b)));
  }
  return out;
}

}  // namespace

TEST_CASE("evaluate_binomial") {
  auto f5 = make_field_q(5);
  auto t = projective_torus(3, f5);
  SUBCASE("toric relations vanish at every torus point") {
    Binomial rel = make_binomial({4, 0, 0}, {0, 4, 0});
    for (const auto& pt : t.points)
      CHECK(evaluate_binomial(*f5, rel, pt) == f5->zero());
  }
  SUBCASE("t1 - t2 at (1, g) evaluates to 1 - g") {
    Binomial f = make_binomial({1, 0}, {0, 1});
    const auto g = f5->generator();
    std::vector<std::uint16_t> pt = {1, g.repr};
    CHECK(evaluate_binomial(*f5, f, pt) == f5->sub(f5->one(), g));
    CHECK(evaluate_binomial(*f5, f, pt) != f5->zero());
  }
  SUBCASE("points with zero coordinates are rejected") {
    Binomial f = make_binomial({1, 0}, {0, 1});
    std::vector<std::uint16_t> pt = {1, 0};
    CHECK_THROWS_AS(evaluate_binomial(*f5, f, pt), InputError);
  }
}

TEST_CASE("the published degree-5 binomial vanishes on the bridged-triangles graph") {
  // triangle 1-2-3, bridge path 2-4-5, triangle 5-6-7; q = 5
  const Graph g = hip_graph();
  REQUIRE(g.s() == 8);
  auto x = enumerate_toric_set(g, make_field_q(5));
  CHECK(x.size() == 4096);
  const Binomial special =
      make_binomial({1, 1, 0, 2, 0, 0, 1, 0}, {0, 0, 1, 0, 2, 1, 0, 1});
  CHECK(special.homogeneous());
  CHECK(vanishes_on(special, x));
}

TEST_CASE("vanishes_on and witnesses") {
  auto f3 = make_field_q(3);
  auto x = enumerate_toric_set(cycle_graph(4), f3);
  SUBCASE("toric relations vanish on any toric set") {
    for (const auto& rel : toric_relations(4, 3)) CHECK(vanishes_on(rel, x));
  }
  SUBCASE("the alternating quadric vanishes on the 4-cycle") {
    CHECK(vanishes_on(make_binomial({1, 0, 1, 0}, {0, 1, 0, 1}), x));
  }
  SUBCASE("t1 - t2 does not vanish; a witness point exists") {
    Binomial f = make_binomial({1, 0, 0, 0}, {0, 1, 0, 0});
    auto witness = nonvanishing_index(f, x);
    REQUIRE(witness.has_value());
    CHECK(evaluate_binomial(*f3, f, x.points[*witness]).repr != 0);
  }
  SUBCASE("non-homogeneous membership queries are rejected") {
    CHECK_THROWS_AS(vanishes_on(make_binomial({2, 0, 0, 0}, {0, 1, 0, 0}), x),
                    NotHomogeneous);
  }
}

TEST_CASE("reduce_exponent_step") {
  SUBCASE("a toric relation collapses to the zero binomial at q = 3") {
    auto step = reduce_exponent_step(make_binomial({2, 0}, {0, 2}), 3);
    CHECK(step.g.is_zero());
    CHECK(step.j == 1);
  }
  SUBCASE("frozen example at q = 3") {
    // t1^2 t3 - t2^2 t4  ->  g = t2 t3 - t2 t4, j = 2 (0-based 1)
    auto step = reduce_exponent_step(make_binomial({2, 0, 1, 0}, {0, 2, 0, 1}), 3);
    CHECK(step.j == 1);
    CHECK(step.g == make_binomial({0, 1, 1, 0}, {0, 1, 0, 1}));
    CHECK(step.g.degree() == 2);

    // f - t_j g must vanish on the whole torus: check by evaluation
    auto f5 = make_field_q(3);
    auto t = projective_torus(4, f5);
    const Binomial f = make_binomial({2, 0, 1, 0}, {0, 2, 0, 1});
    for (const auto& pt : t.points) {
      auto lhs = evaluate_binomial(*f5, f, pt);
      // t_j * g at the point
      auto gval = evaluate_binomial(*f5, step.g, pt);
      auto tj = f5->elem(pt[step.j]);
      CHECK(lhs == f5->mul(tj, gval));
    }
  }
  SUBCASE("inputs without a reducible exponent are rejected") {
    CHECK_THROWS_AS(reduce_exponent_step(make_binomial({1, 0}, {0, 1}), 3), NotReducible);
    CHECK_THROWS_AS(reduce_exponent_step(make_binomial({2, 1}, {1, 2}), 3), NotReducible);
  }
}

TEST_CASE("normalize_binomial") {
  SUBCASE("strips the common factor") {
    auto f = normalize_binomial(make_binomial({3, 1, 0}, {1, 3, 0}), 5);
    CHECK(f == make_binomial({2, 0, 0}, {0, 2, 0}));
  }
  SUBCASE("already-normal binomials are unchanged") {
    const Binomial f = make_binomial({1, 0, 1, 0}, {0, 1, 0, 1});
    CHECK(normalize_binomial(f, 3) == f);
  }
  SUBCASE("chain collapsing to zero at q = 3") {
    CHECK(normalize_binomial(make_binomial({3, 1}, {1, 3}), 3).is_zero());
  }
  SUBCASE("result is always in normal form") {
    std::mt19937 rng(12345);
    auto x = enumerate_toric_set(cycle_graph(4), make_field_q(3));
    for (int trial = 0; trial < 300; ++trial) {
      Exponents a(4), b(4);
      int da = 0, db = 0;
      for (int i = 0; i < 4; ++i) {
        a[i] = (int)(rng() % 5);
        da += a[i];
      }
      for (int i = 0; i < 3; ++i) {
        b[i] = (int)(rng() % 5);
        db += b[i];
      }
      b[3] = da - db;  // force homogeneity
      if (b[3] < 0) continue;
      const Binomial f = make_binomial(a, b);
      const Binomial nf = normalize_binomial(f, 3);
      CHECK((nf.is_zero() || nf.normalized(3)));
      // vanishing on X(C4) is preserved exactly
      const bool before = vanishes_on(f, x);
      const bool after = nf.is_zero() ? true : vanishes_on(nf, x);
      CHECK(before == after);
    }
  }
}

TEST_CASE("ideal_dim_at_degree") {
  auto f3 = make_field_q(3);
  SUBCASE("empty set spans nothing") {
    CHECK(ideal_dim_at_degree({}, 3, 2) == 0);
  }
  SUBCASE("single linear binomial") {
    CHECK(ideal_dim_at_degree({make_binomial({1, 0}, {0, 1})}, 1, 2) == 1);
  }
  SUBCASE("toric relations at s = 2, q = 3, degree 2") {
    CHECK(ideal_dim_at_degree(toric_relations(2, 3), 2, 2) == 1);
  }
  SUBCASE("agreement with dense elimination on assorted inputs") {
    std::vector<std::vector<Binomial>> cases = {
        toric_relations(4, 3),
        even_cycle_generators(2, 3).all(),
        even_cycle_generators(2, 4).all(),
        {make_binomial({1, 1, 0, 0}, {0, 0, 1, 1}),
         make_binomial({2, 0, 0, 0}, {0, 0, 2, 0})},
    };
    for (const auto& gens : cases)
      for (int d = 0; d <= 5; ++d)
        CHECK(ideal_dim_at_degree(gens, d, 4) ==
              ideal_dim_at_degree_dense(*f3, gens, d, 4));
    // dense route over a different field: the dimension is char-independent
    auto f4 = make_field_q(4);
    for (int d = 0; d <= 5; ++d)
      CHECK(ideal_dim_at_degree(even_cycle_generators(2, 4).all(), d, 4) ==
            ideal_dim_at_degree_dense(*f4, even_cycle_generators(2, 4).all(), d, 4));
  }
  SUBCASE("zero binomials contribute nothing") {
    Exponents z(2, 0);
    CHECK(ideal_dim_at_degree({Binomial{z, z}}, 2, 2) == 0);
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(ideal_dim_at_degree(toric_relations(6, 5), 12, 6, 100),
                    MatrixTooLarge);
  }
}

TEST_CASE("verify_generating_set") {
  auto f3 = make_field_q(3);
  auto x = enumerate_toric_set(cycle_graph(4), f3);
  SUBCASE("toric relations alone miss the quadric") {
    auto report = verify_generating_set(toric_relations(4, 3), x);
    CHECK_FALSE(report.generates);
    // deficit is exactly at degree 2
    for (const auto& row : report.table) {
      if (row.d == 2) CHECK(row.dim_jd < row.dim_ixd);
      if (row.d < 2) CHECK(row.dim_jd == row.dim_ixd);
    }
  }
  SUBCASE("the full cycle set verifies") {
    auto report = verify_generating_set(even_cycle_generators(2, 3).all(), x);
    CHECK(report.generates);
    CHECK(report.vanish_ok);
    CHECK(report.regularity_bound == 2);  // reg(C4, q=3) = 1
    REQUIRE(report.support_bound.has_value());
    CHECK(*report.support_bound == 2);
    CHECK(report.verified_up_to == 2);
  }
  SUBCASE("non-vanishing generators are reported with offender indices") {
    auto gens = even_cycle_generators(2, 3).all();
    gens.push_back(make_binomial({1, 0, 0, 0}, {0, 1, 0, 0}));
    try {
      verify_generating_set(gens, x);
      FAIL("expected GeneratorDoesNotVanish");
    } catch (const GeneratorDoesNotVanish& e) {
      REQUIRE(e.offenders.size() == 1);
      CHECK(e.offenders[0] == gens.size() - 1);
    }
  }
  SUBCASE("explicit degree bound is honored") {
    auto report = verify_generating_set(even_cycle_generators(2, 3).all(), x, 4);
    CHECK(report.verified_up_to == 4);
    CHECK(report.generates);
  }
}

TEST_CASE("minimalize") {
  auto f3 = make_field_q(3);
  auto x = enumerate_toric_set(cycle_graph(4), f3);
  SUBCASE("duplicates are removed") {
    auto gens = even_cycle_generators(2, 3).all();
    gens.push_back(gens.front());
    auto result = minimalize(gens, x);
    CHECK(result.redundant.size() == 1);
    CHECK(result.kept.size() == gens.size() - 1);
  }
  SUBCASE("the alternating binomial at r >= 2 is redundant at q = 4") {
    auto f4 = make_field_q(4);
    auto x4 = enumerate_toric_set(cycle_graph(4), f4);
    auto full = even_cycle_generators(2, 4).all();
    auto result = minimalize(full, x4);
    REQUIRE(result.redundant.size() == 1);
    // the dropped element is f_lambda^2 = (t1 t3)^2 - (t2 t4)^2
    CHECK(full[result.redundant[0]] == make_binomial({2, 0, 2, 0}, {0, 2, 0, 2}));
    // the kept set still verifies
    CHECK(verify_generating_set(result.kept, x4).generates);
  }
  SUBCASE("a non-generating set is rejected") {
    CHECK_THROWS_AS(minimalize(toric_relations(4, 3), x, Caps{}), VerificationError);
  }
}

TEST_CASE("containment: the span of vanishing binomials never exceeds the ideal") {
  auto f3 = make_field_q(3);
  auto x = enumerate_toric_set(cycle_graph(6), f3);
  auto profile = hilbert_profile(x);
  auto gens = even_cycle_generators(3, 3).all();
  for (int d = 0; d <= 4; ++d) {
    const long long jd = ideal_dim_at_degree(gens, d, 6);
    const long long h = d < (int)profile.values.size() ? profile.values[d] : x.size();
    CHECK(jd <= monomial_count(6, d) - h);
  }
}

TEST_CASE("binomial text format round-trips") {
  auto gens = even_cycle_generators(2, 4).all();
  auto parsed = parse_binomials(format_binomials(gens));
  CHECK(parsed == gens);
  CHECK_THROWS_AS(parse_binomials("1 0 1 0\n"), ParseError);       // missing bar
  CHECK_THROWS_AS(parse_binomials("1 0 | 0 1 0\n"), ParseError);   // uneven sides
  CHECK_THROWS_AS(parse_binomials("1 0 | 0 x\n"), ParseError);
  auto with_comments = parse_binomials("# header\n1 0 | 0 1\n\n2 0 | 0 2\n");
  CHECK(with_comments.size() == 2);
}

TEST_CASE("pretty printing") {
  CHECK(pretty_binomial(make_binomial({1, 0, 2, 0}, {0, 1, 0, 1})) ==
        "t1*t3^2 - t2*t4");
  CHECK(pretty_binomial(make_binomial({0, 0}, {0, 0})) == "1 - 1");
}

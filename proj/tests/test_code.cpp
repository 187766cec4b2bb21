#include "toric/code.hpp"

#include <set>

#include "doctest.h"
#include "toric/errors.hpp"
#include "toric/linalg.hpp"
#include "toric/suite.hpp"

using namespace toric;

namespace {

// Reference rank over GF(q): textbook in-place elimination on a full dense
// matrix, independent of the incremental RowBasis used by the library.
long long dense_rank(const Field& f, std::vector<std::vector<std::uint16_t>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint16_t inv = f.rinv(m[rank][col]);
    for (auto& v : m[rank]) v = f.rmul(v, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const std::uint16_t c = m[r][col];
      for (std::size_t j = 0; j < cols; ++j)
        m[r][j] = f.rsub(m[r][j], f.rmul(c, m[rank][j]));
    }
    ++rank;
  }
  return (long long)rank;
}

}  // namespace

TEST_CASE("monomial order and basis") {
  CHECK(grevlex_compare({2, 0}, {1, 1}) > 0);   // t1^2 > t1 t2
  CHECK(grevlex_compare({1, 0}, {0, 2}) < 0);   // degree dominates
  CHECK(grevlex_compare({1, 0, 1}, {0, 2, 0}) < 0);  // t2^2 > t1 t3
  CHECK(monomial_count(4, 2) == 10);
  auto basis = monomial_basis(3, 2);
  REQUIRE((long long)basis.size() == monomial_count(3, 2));
  for (std::size_t i = 0; i + 1 < basis.size(); ++i)
    CHECK(grevlex_compare(basis[i], basis[i + 1]) > 0);
  CHECK(basis.front() == Exponents{2, 0, 0});
}

TEST_CASE("evaluation matrix basics") {
  auto f3 = make_field_q(3);
  auto t1 = projective_torus(2, f3);
  auto m0 = evaluation_matrix(t1, 0);
  REQUIRE(m0.size() == 1);
  CHECK(m0[0] == std::vector<std::uint16_t>{1, 1});
  auto m1 = evaluation_matrix(t1, 1);
  REQUIRE(m1.size() == 2);
  CHECK(m1[0] == std::vector<std::uint16_t>{1, 1});  // t1 row
  CHECK(m1[1] == std::vector<std::uint16_t>{1, 2});  // t2 row
}

TEST_CASE("hilbert function = rank; cross-checked against dense elimination") {
  auto f3 = make_field_q(3);
  auto x = enumerate_toric_set(cycle_graph(4), f3);
  CHECK(hilbert_function(x, 0) == 1);
  const long long h1 = dense_rank(*f3, evaluation_matrix(x, 1));
  CHECK(h1 == 4);  // frozen from the independent elimination oracle
  CHECK(hilbert_function(x, 1) == h1);

  auto t2 = projective_torus(3, f3);
  CHECK(hilbert_function(t2, 2) == 4);  // = |T^2| at the regularity
  for (int d = 0; d <= 4; ++d)
    CHECK(hilbert_function(t2, d) == dense_rank(*f3, evaluation_matrix(t2, d)));
}

TEST_CASE("hilbert profile and regularity") {
  for (auto [s, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 3}, {3, 4}, {4, 3}}) {
    auto t = projective_torus(s, make_field_q(q));
    auto profile = hilbert_profile(t);
    REQUIRE(profile.regularity.has_value());
    CHECK(*profile.regularity == torus_regularity(s, q));
    CHECK(profile.values.back() == t.size());
    CHECK(profile.degree == t.size());
  }
  auto c4 = enumerate_toric_set(cycle_graph(4), make_field_q(3));
  CHECK(*hilbert_profile(c4).regularity == 1);
  auto c6 = enumerate_toric_set(cycle_graph(6), make_field_q(3));
  CHECK(*hilbert_profile(c6).regularity == 2);

  // truncation leaves the regularity unset
  auto partial = hilbert_profile(c6, 1);
  CHECK_FALSE(partial.regularity.has_value());
  CHECK(partial.values.size() == 2);
}

TEST_CASE("hilbert profile is monotone and stabilizes within |X|-1") {
  for (int q : {3, 4}) {
    for (const Graph& g : {cycle_graph(4), with_pendant_path(cycle_graph(4), 0, 1),
                           two_triangles_graph()}) {
      auto x = enumerate_toric_set(g, make_field_q(q));
      auto profile = hilbert_profile(x);
      REQUIRE(profile.regularity.has_value());
      CHECK(*profile.regularity <= x.size() - 1);
      CHECK(profile.values[0] == 1);
      for (std::size_t i = 1; i < profile.values.size(); ++i)
        CHECK(profile.values[i - 1] <= profile.values[i]);
    }
  }
}

TEST_CASE("code parameters and minimum distance") {
  auto f3 = make_field_q(3);
  SUBCASE("degree 0 is the repetition code") {
    auto x = enumerate_toric_set(cycle_graph(6), f3);
    auto params = code_params(x, 0, true);
    CHECK(params.dimension == 1);
    CHECK(params.min_distance == x.size());
  }
  SUBCASE("past the regularity the distance is 1") {
    auto x = enumerate_toric_set(cycle_graph(4), f3);  // reg = 1
    for (int d = 1; d <= 2; ++d) {
      auto params = code_params(x, d, true);
      CHECK(params.dimension == params.length);
      CHECK(params.min_distance == 1);
    }
  }
  SUBCASE("torus distance matches the closed form") {
    auto t = projective_torus(3, f3);
    auto params = code_params(t, 1, true);
    CHECK(params.min_distance == 2);  // (q-1)^{s-2} (q-2) = 2*1
    CHECK(params.min_distance == torus_min_distance(3, 3, 1));
  }
  SUBCASE("search cap") {
    auto t = projective_torus(3, make_field_q(4));
    Caps caps;
    caps.dist_cap = 10;
    CHECK_THROWS_AS(code_params(t, 1, true, caps), SearchTooLarge);
  }
}

TEST_CASE("Singleton bound on computed parameters") {
  for (auto [s, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {3, 4}}) {
    auto t = projective_torus(s, make_field_q(q));
    for (int d = 0; d <= torus_regularity(s, q); ++d) {
      auto params = code_params(t, d, true);
      REQUIRE(params.min_distance.has_value());
      CHECK(*params.min_distance <= params.length - params.dimension + 1);
    }
  }
}

TEST_CASE("torus closed forms") {
  SUBCASE("dimension formula") {
    CHECK(torus_dimension(3, 3, 0) == 1);
    CHECK(torus_dimension(3, 3, 2) == 4);
    for (int s : {2, 3, 4})
      for (int q : {3, 4, 5})
        for (int d = (int)torus_regularity(s, q); d <= torus_regularity(s, q) + 3; ++d) {
          long long full = 1;
          for (int i = 0; i < s - 1; ++i) full *= q - 1;
          CHECK(torus_dimension(s, q, d) == full);
        }
  }
  SUBCASE("distance formula examples and range checks") {
    CHECK(torus_min_distance(3, 4, 1) == 6);
    CHECK(torus_min_distance(3, 3, 1) == 2);
    CHECK_THROWS_AS(torus_min_distance(2, 5, 3), OutOfRange);  // d = reg
    CHECK_THROWS_AS(torus_min_distance(3, 3, 0), OutOfRange);
    CHECK(torus_min_distance(2, 5, 2) == 2);  // q-1-l with k=0, l=2
  }
  SUBCASE("series coefficients agree with the dimension formula") {
    for (int s : {2, 3, 4})
      for (int q : {3, 4, 5}) {
        const int up_to = (int)torus_regularity(s, q) + 2;
        auto coeffs = torus_hilbert_series_coeffs(s, q, up_to);
        CHECK(coeffs[0] == 1);
        for (int d = 0; d <= up_to; ++d) CHECK(coeffs[d] == torus_dimension(s, q, d));
      }
    auto c = torus_hilbert_series_coeffs(2, 3, 5);
    CHECK(c == std::vector<long long>{1, 2, 2, 2, 2, 2});
  }
}

TEST_CASE("matrix cap raises MatrixTooLarge with the partial profile") {
  auto t = projective_torus(4, make_field_q(5));
  CHECK_THROWS_AS(hilbert_function(t, 3, 100), MatrixTooLarge);
  try {
    hilbert_profile(t, std::nullopt, 400);
    FAIL("expected MatrixTooLarge");
  } catch (const MatrixTooLarge& e) {
    CHECK(!e.partial_values.empty());  // low degrees fit under the tiny cap
  }
}

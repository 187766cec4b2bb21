#include "toric/toric_set.hpp"

#include <set>

#include "doctest.h"
#include "toric/errors.hpp"
#include "toric/suite.hpp"

using namespace toric;

TEST_CASE("point counts match the published anchors") {
  auto f3 = make_field_q(3);
  CHECK(enumerate_toric_set(cycle_graph(3), f3).size() == 4);   // (q-1)^{n-1}
  CHECK(enumerate_toric_set(cycle_graph(4), f3).size() == 4);   // (q-1)^{n-2}

  const Graph ts = disjoint_union(cycle_graph(3), cycle_graph(4));
  CHECK(enumerate_toric_set(ts, make_field_q(5)).size() == 1024);
  CHECK(enumerate_toric_set(ts, make_field_q(4)).size() == 243);
  CHECK(length_formula(ts, 5) == 1024);
  CHECK(length_formula(ts, 4) == 243);
}

TEST_CASE("points are normalized, deduplicated and sorted") {
  auto x = enumerate_toric_set(cycle_graph(4), make_field_q(3));
  std::set<std::vector<std::uint16_t>> seen;
  for (const auto& pt : x.points) {
    CHECK(pt[0] == 1);
    for (auto c : pt) CHECK(c != 0);
    CHECK(seen.insert(pt).second);
  }
  CHECK(std::is_sorted(x.points.begin(), x.points.end()));
}

TEST_CASE("projective torus sizes and explicit small case") {
  CHECK(projective_torus(2, make_field_q(3)).size() == 2);
  CHECK(projective_torus(3, make_field_q(4)).size() == 9);
  auto t = projective_torus(2, make_field_q(5));
  std::vector<std::vector<std::uint16_t>> want = {{1, 1}, {1, 2}, {1, 3}, {1, 4}};
  CHECK(t.points == want);
  CHECK_THROWS_AS(projective_torus(1, make_field_q(3)), InputError);
}

TEST_CASE("length formula agrees with enumeration across the corpus") {
  for (const auto& [name, g] : length_corpus()) {
    for (int q : {3, 4}) {
      auto x = enumerate_toric_set(g, make_field_q(q));
      CHECK_MESSAGE((unsigned long long)x.size() == length_formula(g, q),
                    name, " at q=", q);
    }
  }
}

TEST_CASE("connected-graph special cases of the formula") {
  // non-bipartite: (q-1)^{n-1}; bipartite: (q-1)^{n-2}
  CHECK(length_formula(cycle_graph(5), 4) == 81);      // 3^4
  CHECK(length_formula(cycle_graph(6), 4) == 81);      // 3^4
  CHECK(length_formula(path_graph(4), 5) == 16);       // tree: 4^2
  CHECK(length_formula(complete_graph(4), 3) == 8);    // 2^3
}

TEST_CASE("kernel orders per component") {
  auto tri = components(cycle_graph(3))[0];
  CHECK(kernel_order(tri, 5) == 2);
  CHECK(kernel_order(tri, 4) == 3);
  auto sq = components(cycle_graph(4))[0];
  CHECK(kernel_order(sq, 5) == 4);
  CHECK(kernel_order(sq, 3) == 2);
}

TEST_CASE("the toric set is a group after renormalization") {
  for (int q : {3, 4, 5}) {
    auto f = make_field_q(q);
    auto x = enumerate_toric_set(disjoint_union(cycle_graph(3), path_graph(3)), f);
    std::set<std::vector<std::uint16_t>> pts(x.points.begin(), x.points.end());
    for (const auto& a : x.points)
      for (const auto& b : x.points) {
        std::vector<std::uint16_t> prod(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) prod[i] = f->rmul(a[i], b[i]);
        auto scale = f->rinv(prod[0]);
        for (auto& c : prod) c = f->rmul(c, scale);
        CHECK(pts.count(prod) == 1);
      }
  }
}

TEST_CASE("connected non-bipartite graph with n = s fills the torus") {
  for (int q : {3, 4, 5}) {
    auto f = make_field_q(q);
    auto x = enumerate_toric_set(cycle_graph(3), f);
    auto t = projective_torus(3, f);
    CHECK(x.points == t.points);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_toric_set(cycle_graph(4), make_field_q(5), 10),
                  EnumerationTooLarge);
  CHECK_THROWS_AS(projective_torus(8, make_field_q(5), 1000), EnumerationTooLarge);
}

TEST_CASE("csv export lists one point per row") {
  auto t = projective_torus(2, make_field_q(3));
  CHECK(to_csv(t) == "1,1\n1,2\n");
}

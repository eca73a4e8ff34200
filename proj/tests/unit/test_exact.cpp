#include <doctest.h>

#include <algorithm>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "steinitz/exact.hpp"

using namespace steinitz;
using testing::P;

TEST_CASE("parse_rat canonicalizes") {
  CHECK(to_string(parse_rat("2/4")) == "1/2");
  CHECK(to_string(parse_rat("-6/3")) == "-2");
  CHECK(to_string(parse_rat("0/7")) == "0");
  CHECK(parse_rat("0/7").get_den() == 1);
  CHECK(parse_rat("17") == Rat(17));
}

TEST_CASE("parse_rat rejects malformed input") {
  for (const char* bad : {"1/0", "", "abc", "1/", "/2", "1.5", "--1", "1/2/3"}) {
    CAPTURE(bad);
    try {
      parse_rat(bad);
      FAIL("accepted");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("malformed rational") != std::string::npos);
    }
  }
}

TEST_CASE("arithmetic stays in lowest terms") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    Rat a = testing::random_rat(rng, 9), b = testing::random_rat(rng, 9);
    for (Rat r : {Rat(a + b), Rat(a - b), Rat(a * b)}) {
      CHECK(r.get_den() > 0);
      CHECK(gcd(mpz_class(abs(r.get_num())), r.get_den()) == 1);
    }
  }
}

TEST_CASE("rank examples") {
  std::vector<Point> id{P({1, 0}), P({0, 1})};
  std::vector<Point> prop{P({1, 2}), P({2, 4})};
  CHECK(rank(id) == 2);
  CHECK(rank(prop) == 1);
  std::vector<Point> none;
  CHECK(rank(none) == 0);
}

TEST_CASE("rank agrees with an independent elimination") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    std::vector<Point> rows;
    for (int r = 0; r < 5; ++r) {
      Point p(3);
      for (std::size_t c = 0; c < 3; ++c) p[c] = testing::random_rat(rng, 3);
      rows.push_back(p);
    }
    // Force some rank deficiency now and then.
    if (i % 3 == 0) rows[4] = rows[0] + Rat(2) * rows[1];
    if (i % 5 == 0) rows[2] = rows[3] = rows[4] = rows[0];
    CHECK(rank(rows) == oracle::rank(rows));
    CHECK(rank(RMatrix::from_rows(rows)) == oracle::rank(rows));
  }
}

TEST_CASE("rank is invariant under positive row scaling and permutation") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto rows = testing::random_points(rng, 4, 3, 2);
    if (i % 2) rows[3] = rows[1] - rows[2];
    auto r0 = rank(rows);
    for (auto& p : rows) p *= Rat(static_cast<long>(rng() % 5) + 1, 3);
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(rank(rows) == r0);
  }
}

TEST_CASE("nullspace and orthogonal complement") {
  auto m = RMatrix::from_rows(std::vector<Point>{P({1, 1, 0}), P({0, 1, 1})});
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(dot(ns[0], P({1, 1, 0})) == 0);
  CHECK(dot(ns[0], P({0, 1, 1})) == 0);
  auto oc = orthogonal_complement(std::vector<Point>{P({1, 0, 0})}, 3);
  CHECK(oc.size() == 2);
  for (const auto& v : oc) CHECK(v[0] == 0);
}

TEST_CASE("in_linear_hull examples") {
  CHECK_FALSE(in_linear_hull(P({1, 1}), std::vector<Point>{P({1, 0})}));
  CHECK(in_linear_hull(P({2, 0}), std::vector<Point>{P({1, 0})}));
  CHECK(in_linear_hull(P({1, 1, 1}), std::vector<Point>{P({1, 0, 0}), P({0, 1, 1})}));
  CHECK(in_linear_hull(P({0, 0}), std::vector<Point>{}));
  CHECK_FALSE(in_linear_hull(P({1, 0}), std::vector<Point>{}));
}

TEST_CASE("solve_combination") {
  std::vector<Point> cols{P({1, 0, 0}), P({0, 1, 1})};
  auto x = solve_combination(cols, P({1, 1, 1}));
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve_combination(cols, P({0, 1, 0})));
}

TEST_CASE("lp_feasibility examples") {
  std::vector<Point> a{P({1, 0}), P({0, 1})};
  auto r = lp_feasibility(a, P({2, 3}));
  REQUIRE(std::holds_alternative<Feasible>(r));
  CHECK(std::get<Feasible>(r).coefficients == std::vector<Rat>{2, 3});

  auto n = lp_feasibility(a, P({-1, 0}));
  REQUIRE(std::holds_alternative<Infeasible>(n));
  CHECK(std::get<Infeasible>(n).witness == P({-1, 0}));

  std::vector<Point> b{P({1, 0}), P({0, 1}), P({1, 1})};
  auto f = lp_feasibility(b, P({3, 1}));
  REQUIRE(std::holds_alternative<Feasible>(f));
  const auto& c = std::get<Feasible>(f).coefficients;
  CHECK(std::count_if(c.begin(), c.end(), [](const Rat& x) { return x != 0; }) <= 2);
  Point sum(2);
  for (std::size_t j = 0; j < b.size(); ++j) sum += c[j] * b[j];
  CHECK(sum == P({3, 1}));
}

TEST_CASE("lp_feasibility certificates always verify and agree with the oracle") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 400; ++i) {
    std::size_t d = 2 + static_cast<std::size_t>(i) % 3;
    auto a = testing::random_points(rng, 1 + rng() % 6, d, 2);
    Point v = testing::random_point(rng, d, 3, false);
    auto r = lp_feasibility(a, v);
    CHECK(std::holds_alternative<Feasible>(r) == oracle::in_cone(v, a));
    if (auto* f = std::get_if<Feasible>(&r)) {
      Point sum(d);
      std::vector<Point> support;
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(f->coefficients[j] >= 0);
        sum += f->coefficients[j] * a[j];
        if (f->coefficients[j] > 0) support.push_back(a[j]);
      }
      CHECK(sum == v);
      CHECK(support.size() <= d);
      CHECK(oracle::rank(support) == support.size());
    } else {
      const Point& w = std::get<Infeasible>(r).witness;
      CHECK(dot(w, v) > 0);
      for (const auto& p : a) CHECK(dot(w, p) <= 0);
    }
  }
}

TEST_CASE("dimension mismatches are rejected") {
  std::vector<Point> a{P({1, 0}), P({0, 1, 0})};
  CHECK_THROWS_AS(lp_feasibility(a, P({1, 1})), DimensionMismatch);
}

TEST_CASE("primitive rays") {
  CHECK(primitive_ray(Point{Rat(2, 3), Rat(-4, 3)}) == P({1, -2}));
  CHECK(same_ray(P({2, 4}), P({1, 2})));
  CHECK_FALSE(same_ray(P({-1, -2}), P({1, 2})));
}

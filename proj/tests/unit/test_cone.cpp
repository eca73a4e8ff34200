#include <doctest.h>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "steinitz/cone.hpp"

using namespace steinitz;
using testing::P;

namespace {

std::vector<Point> pts(std::initializer_list<Point> l) { return l; }

}  // namespace

TEST_CASE("pos_membership examples") {
  auto m = pos_membership(P({1, 1}), pts({P({1, 0}), P({0, 1})}));
  REQUIRE(std::holds_alternative<ConicCertificate>(m));
  const auto& c = std::get<ConicCertificate>(m);
  CHECK(c.coefficients == std::vector<Rat>{1, 1});
  CHECK(verify(c, pts({P({1, 0}), P({0, 1})})));

  auto n = pos_membership(P({0, -1}), pts({P({1, 0}), P({0, 1}), P({1, 1})}));
  REQUIRE(std::holds_alternative<FarkasWitness>(n));
  CHECK(std::get<FarkasWitness>(n).w == P({0, -1}));
}

TEST_CASE("pos_membership on a target built as a known combination") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    std::vector<Point> a;
    for (int k = 0; k < 6; ++k) {
      Point p(3);
      for (std::size_t j = 0; j < 3; ++j) p[j] = testing::random_rat(rng, 4);
      if (p.is_zero()) p[0] = 1;
      a.push_back(p);
    }
    Point v(3);
    for (const auto& p : a) v += Rat(static_cast<long>(rng() % 3)) * p;
    if (v.is_zero()) continue;
    auto m = pos_membership(v, a);
    REQUIRE(std::holds_alternative<ConicCertificate>(m));
    CHECK(verify(std::get<ConicCertificate>(m), a));
  }
}

TEST_CASE("pos_membership preconditions") {
  CHECK_THROWS_AS(pos_membership(P({0, 0}), pts({P({1, 0})})), std::invalid_argument);
  CHECK_THROWS_AS(pos_membership(P({1, 0}), std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("pos_membership is invariant under positive scaling") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto a = testing::random_points(rng, 1 + rng() % 4, 2, 2);
    Point v = testing::random_point(rng, 2, 2);
    bool in = std::holds_alternative<ConicCertificate>(pos_membership(v, a));
    for (auto& p : a) p *= Rat(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 3) + 1);
    v *= Rat(5, 3);
    CHECK(std::holds_alternative<ConicCertificate>(pos_membership(v, a)) == in);
  }
}

TEST_CASE("spans_space examples") {
  auto sb = pts({P({1, 0}), P({0, 1}), P({-1, 0}), P({0, -1})});
  auto r = spans_space(sb);
  REQUIRE(std::holds_alternative<SpanCertificate>(r));
  CHECK(std::get<SpanCertificate>(r).directions.size() == 4);
  CHECK(verify(std::get<SpanCertificate>(r), sb));

  auto two = pts({P({1, 0}), P({0, 1})});
  auto f = spans_space(two);
  REQUIRE(std::holds_alternative<FarkasWitness>(f));
  CHECK(std::get<FarkasWitness>(f).w == P({-1, -1}));
  CHECK(verify_nonspanning(std::get<FarkasWitness>(f), two));

  CHECK(std::holds_alternative<SpanCertificate>(spans_space(pts({P({1, 0}), P({0, 1}), P({-1, -1})}))));
}

TEST_CASE("spans_space agrees with the facet-normal oracle on small planar sets") {
  // Every set of at most five points with coordinates in {-2..2} would be
  // ~10^8 sets; sample uniformly instead and cover all of size <= 2 exactly.
  std::vector<Point> grid;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      if (x || y) grid.push_back(P({x, y}));
  for (std::size_t k = 1; k <= 2; ++k)
    oracle::combinations(grid.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Point> t;
      for (auto i : idx) t.push_back(grid[i]);
      CHECK_FALSE(spans(t, 2));
      return false;
    });
  std::mt19937_64 rng(13);
  for (int i = 0; i < 3000; ++i) {
    std::vector<Point> t;
    std::size_t n = 3 + rng() % 3;
    for (std::size_t k = 0; k < n; ++k) t.push_back(grid[rng() % grid.size()]);
    auto r = spans_space(t, 2);
    bool s = std::holds_alternative<SpanCertificate>(r);
    CHECK(s == oracle::spans(t, 2));
    if (s) {
      CHECK(verify(std::get<SpanCertificate>(r), t));
    } else {
      CHECK(verify_nonspanning(std::get<FarkasWitness>(r), t));
    }
  }
}

TEST_CASE("spanning needs at least d+1 points") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    std::size_t d = 1 + rng() % 4;
    auto t = testing::random_points(rng, 1 + rng() % (d + 3), d, 2);
    if (spans(t, d)) CHECK(t.size() >= d + 1);
    CHECK(spans(t, d) == oracle::spans(t, d));
  }
}

TEST_CASE("nearest_cone_point examples") {
  auto a = nearest_cone_point(P({1, 1}), pts({P({1, 0}), P({0, 1})}));
  CHECK(a.point == P({1, 1}));
  CHECK(a.sqdist == 0);
  auto b = nearest_cone_point(P({-1, 0}), pts({P({0, 1})}));
  CHECK(b.point == P({0, 0}));
  CHECK(b.sqdist == 1);
  CHECK(b.support.empty());
  auto c = nearest_cone_point(P({1, 1}), pts({P({1, 0})}));
  CHECK(c.point == P({1, 0}));
  CHECK(c.sqdist == 1);
}

TEST_CASE("nearest_cone_point optimality conditions") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    std::size_t d = 2 + rng() % 3;
    auto t = testing::random_points(rng, 1 + rng() % d, d, 3);
    Point v = testing::random_point(rng, d, 3);
    auto n = nearest_cone_point(v, t);
    Point r = v - n.point;
    CHECK(dot(r, n.point) == 0);
    for (const auto& g : t) CHECK(dot(r, g) <= 0);
    CHECK(n.sqdist == squared_norm(r));
    CHECK(n.sqdist <= squared_norm(v));
    for (const auto& g : t) CHECK(n.sqdist <= squared_norm(v - g));
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b) CHECK(n.sqdist <= squared_norm(v - t[a] - t[b]));
    Point sum(d);
    for (std::size_t k = 0; k < n.support.size(); ++k) {
      CHECK(n.coefficients[k] > 0);
      sum += n.coefficients[k] * t[n.support[k]];
    }
    CHECK(sum == n.point);
  }
}

TEST_CASE("separating_witness examples") {
  CHECK(separating_witness(P({-1, 0}), P({0, 0})).w == P({-1, 0}));
  CHECK(separating_witness(P({1, 1}), P({1, 0})).w == P({0, 1}));
  CHECK(separating_witness(P({0, -2}), P({0, 0})).w == P({0, -2}));
}

TEST_CASE("verify rejects tampered certificates") {
  auto sb = pts({P({1, 0}), P({0, 1}), P({-1, 0}), P({0, -1})});
  auto cert = std::get<SpanCertificate>(spans_space(sb));
  cert.directions[0].coefficients[0] += 1;
  CHECK_FALSE(verify(cert, sb));
  FarkasWitness w{P({1, 1})};
  CHECK_FALSE(verify_nonspanning(w, sb));
}

#include <doctest.h>

#include <map>
#include <set>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "steinitz/colorful.hpp"
#include "steinitz/oracle.hpp"

using namespace steinitz;
using testing::P;

namespace {

std::vector<Point> signed_basis(std::size_t d) {
  std::vector<Point> x;
  for (std::size_t i = 0; i < d; ++i) {
    x.push_back(Point::unit(d, i, 1));
    x.push_back(Point::unit(d, i, -1));
  }
  return x;
}

std::vector<Point> simplex(std::size_t d) {
  std::vector<Point> f;
  Point last(d);
  for (std::size_t i = 0; i < d; ++i) {
    f.push_back(Point::unit(d, i));
    last[i] = -1;
  }
  f.push_back(last);
  return f;
}

std::vector<Point> negate(std::vector<Point> x) {
  for (auto& p : x) p = -p;
  return x;
}

std::set<Point> rays(const std::vector<Point>& x) {
  std::set<Point> s;
  for (const auto& p : x) s.insert(primitive_ray(p));
  return s;
}

void check_small(const ColourSystem& sys, const SmallTransversal& s) {
  CHECK(s.transversal.well_formed(sys));
  CHECK(s.transversal.size() <= 2 * sys.dim() - 1);
  CHECK(verify(s.certificate, s.transversal.points(sys)));
  CHECK(oracle::spans(s.transversal.points(sys), sys.dim()));
}

SmallTransversal small_of(const ColourSystem& sys) {
  auto r = find_small_transversal(sys);
  REQUIRE(std::holds_alternative<SmallTransversal>(r));
  auto s = std::get<SmallTransversal>(r);
  check_small(sys, s);
  return s;
}

}  // namespace

TEST_CASE("colour system validation") {
  CHECK_THROWS_AS(ColourSystem(2, {{P({1, 0})}}), std::invalid_argument);
  CHECK_THROWS_AS(ColourSystem(1, {{P({1})}, {}}), std::invalid_argument);
  try {
    ColourSystem(1, {{P({1}), P({-1}), P({0})}, {P({1})}});
    FAIL("accepted zero point");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()) == "zero point at set 1 index 3");
  }
  CHECK_THROWS_AS(ColourSystem(2, {{P({1, 0})}, {P({1})}, {P({1, 0})}, {P({1, 0})}}), DimensionMismatch);
}

TEST_CASE("colorful_transversal on BCase and PCase") {
  ColourSystem b(2, std::vector<std::vector<Point>>(4, signed_basis(2)));
  auto r = colorful_transversal(b);
  CHECK(r.transversal.is_full(b));
  CHECK(rays(r.transversal.points(b)) == rays(signed_basis(2)));

  auto f = simplex(2);
  ColourSystem p(2, {f, f, negate(f), negate(f)});
  auto s = colorful_transversal(p);
  CHECK(s.transversal.size() == 4);
  CHECK(oracle::spans(s.transversal.points(p), 2));
}

TEST_CASE("colorful_transversal on random systems") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    std::vector<std::vector<Point>> sets;
    for (int c = 0; c < 6; ++c) sets.push_back(random_spanning_set(3, 5, rng, 3));
    ColourSystem sys(3, sets);
    auto r = colorful_transversal(sys);
    CHECK(r.transversal.is_full(sys));
    CHECK(r.transversal.well_formed(sys));
    CHECK(verify(r.certificate, r.transversal.points(sys)));
  }
}

TEST_CASE("colorful_transversal rejects a non-spanning colour") {
  auto x = signed_basis(2);
  ColourSystem sys(2, {x, x, {P({1, 0}), P({0, 1})}, x});
  try {
    colorful_transversal(sys);
    FAIL("no throw");
  } catch (const NotSpanning& e) {
    REQUIRE(e.colour);
    CHECK(*e.colour == 2);
  }
}

TEST_CASE("p_set examples and scan oracle") {
  ColourSystem b(2, std::vector<std::vector<Point>>(4, signed_basis(2)));
  CHECK(p_set(P({1, 0}), b).members == std::vector<std::size_t>{0, 1, 2, 3});
  auto f = simplex(2);
  ColourSystem p(2, {f, f, negate(f), negate(f)});
  CHECK(p_set(f[0], p).members == std::vector<std::size_t>{2, 3});

  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::vector<Point>> sets;
    for (int c = 0; c < 4; ++c) sets.push_back(random_spanning_set(2, 4, rng, 1));
    ColourSystem sys(2, sets);
    Point v = sets[rng() % 4][0];
    std::vector<std::size_t> scan;
    for (std::size_t c = 0; c < 4; ++c) {
      bool has = false;
      for (const auto& q : sets[c]) has = has || same_ray(q, -v);
      if (has) scan.push_back(c);
    }
    CHECK(p_set(v, sys).members == scan);
  }
}

TEST_CASE("positive_circuit examples") {
  std::vector<Point> a{P({1, 0}), P({0, 1}), P({-1, -1}), P({1, 1})};
  auto c = positive_circuit(a);
  CHECK(c.indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(c.coefficients == std::vector<Rat>{1, 1, 1});

  auto b = positive_circuit(signed_basis(2));
  CHECK(b.points == std::vector<Point>{P({1, 0}), P({-1, 0})});
  CHECK(b.coefficients.size() == 2);

  auto s = positive_circuit(simplex(2));
  CHECK(s.indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("positive circuits are minimal positive dependences") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    std::size_t d = 2 + rng() % 3;
    auto a = random_spanning_set(d, d + 1 + rng() % d, rng, 2);
    auto c = positive_circuit(a);
    const std::size_t k = c.points.size();
    CHECK(oracle::rank(c.points) + 1 == k);
    Point sum(d);
    for (std::size_t m = 0; m < k; ++m) {
      CHECK(c.coefficients[m] > 0);
      CHECK(c.coefficients[m].get_den() == 1);
      CHECK(c.points[m] == a[c.indices[m]]);
      sum += c.coefficients[m] * c.points[m];
    }
    CHECK(sum.is_zero());
    CHECK(is_positive_circuit(c.points));
    // Dropping any element leaves an independent set: no dependence remains.
    for (std::size_t m = 0; m < k; ++m) {
      auto rest = c.points;
      rest.erase(rest.begin() + static_cast<long>(m));
      CHECK(oracle::rank(rest) == rest.size());
      CHECK_FALSE(is_positive_circuit(rest));
    }
  }
}

TEST_CASE("hall_sdr examples") {
  std::vector<std::vector<std::size_t>> fam{{0, 1}, {1, 2}, {0, 2}};
  auto r = hall_sdr(fam, 3);
  REQUIRE(r.representatives);
  std::set<std::size_t> used(r.representatives->begin(), r.representatives->end());
  CHECK(used.size() == 3);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(std::count(fam[k].begin(), fam[k].end(), (*r.representatives)[k]) == 1);

  std::vector<std::vector<std::size_t>> bad{{0}, {0}};
  auto n = hall_sdr(bad, 1);
  CHECK_FALSE(n.representatives);
  CHECK(n.violating == std::vector<std::size_t>{0, 1});

  // d+1 sets of size d inside a d-element union.
  std::vector<std::vector<std::size_t>> tight{{0, 1, 2}, {0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  auto t = hall_sdr(tight, 6);
  CHECK_FALSE(t.representatives);
  CHECK(t.violating.size() == 4);
}

TEST_CASE("hall_sdr agrees with brute force") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng() % 4, u = 1 + rng() % 4;
    std::vector<std::vector<std::size_t>> fam(n);
    for (auto& s : fam)
      for (std::size_t e = 0; e < u; ++e)
        if (rng() % 2) s.push_back(e);
    // Brute force: try every assignment.
    bool exists = false;
    std::vector<std::size_t> pick(n, 0);
    std::function<void(std::size_t, std::set<std::size_t>&)> rec = [&](std::size_t k, std::set<std::size_t>& used) {
      if (exists) return;
      if (k == n) {
        exists = true;
        return;
      }
      for (auto e : fam[k])
        if (!used.count(e)) {
          used.insert(e);
          rec(k + 1, used);
          used.erase(e);
        }
    };
    std::set<std::size_t> used;
    rec(0, used);
    auto r = hall_sdr(fam, u);
    CHECK(r.representatives.has_value() == exists);
    if (!r.representatives) {
      std::set<std::size_t> uni;
      for (auto k : r.violating) uni.insert(fam[k].begin(), fam[k].end());
      CHECK(uni.size() < r.violating.size());
    }
  }
}

TEST_CASE("project_complement examples") {
  std::vector<Point> l1{P({1, 0})};
  auto a = project_complement(std::vector<Point>{P({3, 2})}, l1, 2);
  REQUIRE(a.images.size() == 1);
  CHECK(a.images[0] == Point{Rat(2)});
  CHECK(a.frame[0] == P({0, 1}));

  std::vector<Point> l2{P({1, 1})};
  auto b = project_complement(std::vector<Point>{P({1, 0}), P({2, 2})}, l2, 2);
  CHECK(b.frame[0] == P({1, -1}));
  CHECK(b.images[0] == Point{Rat(1, 2)});
  CHECK_FALSE(b.zero_image[0]);
  CHECK(b.zero_image[1]);
}

TEST_CASE("classify examples") {
  ColourSystem b(2, std::vector<std::vector<Point>>(4, signed_basis(2)));
  CHECK(classification_name(classify(b)) == "BCase");
  auto f = simplex(2);
  ColourSystem p(2, {f, f, negate(f), negate(f)});
  auto pc = classify(p);
  REQUIRE(std::holds_alternative<PCase>(pc));
  CHECK(std::get<PCase>(pc).plus_colours == std::vector<std::size_t>{0, 1});
  CHECK(std::get<PCase>(pc).minus_colours == std::vector<std::size_t>{2, 3});

  auto x = signed_basis(2);
  auto x1 = x;
  x1.push_back(P({1, 1}));
  ColourSystem n(2, {x1, x, x, x});
  auto nc = classify(n);
  REQUIRE(std::holds_alternative<Neither>(nc));
  CHECK(std::get<Neither>(nc).witness.size() <= 3);
  CHECK(oracle::min_spanning_partial(n.sets(), 2) <= 3);
}

TEST_CASE("find_small_transversal examples") {
  ColourSystem b(2, std::vector<std::vector<Point>>(4, signed_basis(2)));
  CHECK(std::holds_alternative<BCase>(find_small_transversal(b)));
  auto f = simplex(2);
  ColourSystem p(2, {f, f, negate(f), negate(f)});
  CHECK(std::holds_alternative<PCase>(find_small_transversal(p)));
  std::vector<Point> x{P({1, 0}), P({0, 1}), P({-1, -1}), P({-1, 1})};
  ColourSystem s(2, {x, x, x, x});
  auto r = small_of(s);
  CHECK(r.transversal.size() <= 3);
  CHECK(oracle::min_spanning_partial(s.sets(), 2) == 3);
}

TEST_CASE("PCase detection up to positions and linear maps") {
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      GenerateParams gp;
      gp.seed = seed;
      gp.transform = true;
      auto sys = generate(InstanceKind::PCase, d, gp);
      auto sets = sys.sets();
      std::mt19937_64 rng(seed);
      std::shuffle(sets.begin(), sets.end(), rng);
      for (auto& s : sets) std::shuffle(s.begin(), s.end(), rng);
      ColourSystem shuffled(d, sets);
      auto c = classify(shuffled);
      if (d == 1) {
        CHECK_FALSE(std::holds_alternative<Neither>(c));
      } else {
        CHECK(std::holds_alternative<PCase>(c));
      }
    }
}

TEST_CASE("antipode sets partition the colours in structural systems without antipodal pairs") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      GenerateParams gp;
      gp.seed = seed;
      gp.transform = seed > 0;
      auto sys = generate(InstanceKind::PCase, d, gp);
      for (const auto& v : sys.union_points()) {
        auto a = p_set(v, sys).members, b = p_set(-v, sys).members;
        std::set<std::size_t> all(a.begin(), a.end());
        all.insert(b.begin(), b.end());
        CHECK(a.size() + b.size() == 2 * d);
        CHECK(all.size() == 2 * d);
      }
    }
}

TEST_CASE("branch constructions in dimension three") {
  auto f = simplex(3);
  auto nf = negate(f);

  SUBCASE("circuit of size at most d") {
    // y = (-1,-1,0) adds the circuit {y, e1, e2}; -y sits first in X6 so
    // the host's lexicographic circuit search meets the small one.
    auto x = f;
    x.push_back(P({-1, -1, 0}));
    auto nx = nf;
    nx.push_back(P({1, 1, 0}));
    auto nx6 = nx;
    std::rotate(nx6.rbegin(), nx6.rbegin() + 1, nx6.rend());
    ColourSystem sys(3, {x, x, x, nx, nx, nx6});
    auto s = small_of(sys);
    MESSAGE("branch " << to_string(s.branch));
    CHECK(s.branch == Branch::CircuitSubspace);
  }

  SUBCASE("antipodal pair recursion") {
    auto x = signed_basis(3);
    auto a = x, b = x;
    a.push_back(P({1, 1, 1}));
    b.push_back(P({-1, -1, -1}));
    ColourSystem sys(3, {a, a, a, b, b, b});
    auto s = small_of(sys);
    MESSAGE("branch " << to_string(s.branch));
    CHECK((s.branch == Branch::AntipodalRecursion || s.branch == Branch::AntipodalLift));
  }

  SUBCASE("antipode count") {
    auto x = signed_basis(3);
    auto a = x;
    a.push_back(P({1, 2, 3}));
    ColourSystem sys(3, {a, x, x, x, x, x});
    auto s = small_of(sys);
    CHECK(s.branch == Branch::AntipodeCount);
  }
}

TEST_CASE("classify agrees with the oracle on perturbed structural systems in d=3") {
  std::mt19937_64 rng(45);
  std::map<Branch, int> hits;
  for (int i = 0; i < 120; ++i) {
    GenerateParams gp;
    gp.seed = static_cast<std::uint64_t>(i);
    gp.transform = i % 2;
    auto base = generate(i % 3 ? InstanceKind::PCase : InstanceKind::BCase, 3, gp);
    auto sets = base.sets();
    // Add one or two points to random colours, sometimes an existing
    // antipode, sometimes a fresh direction.
    for (int k = 0; k < 1 + i % 2; ++k) {
      auto& s = sets[rng() % sets.size()];
      Point extra = (rng() % 2) ? -sets[rng() % sets.size()][0] : testing::random_point(rng, 3, 2);
      s.push_back(extra);
    }
    ColourSystem sys(3, sets);
    auto c = classify(sys);
    std::size_t m = oracle::min_spanning_partial(sys.sets(), 3);
    CHECK(std::holds_alternative<Neither>(c) == (m <= 5));
    if (auto* n = std::get_if<Neither>(&c)) {
      CHECK(n->witness.size() <= 5);
      CHECK(oracle::spans(n->witness.points(sys), 3));
      ++hits[n->branch];
    }
  }
  for (const auto& [b, n] : hits) MESSAGE(to_string(b) << ": " << n);
}

TEST_CASE("classify agrees with the oracle on random systems in d=3") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenerateParams gp;
    gp.seed = seed;
    gp.set_size = 4;
    gp.coordinate_bound = 1;
    auto sys = generate(InstanceKind::Random, 3, gp);
    auto c = classify(sys);
    REQUIRE(std::holds_alternative<Neither>(c));
    CHECK(oracle::min_spanning_partial(sys.sets(), 3) <= 5);
    CHECK(oracle::spans(std::get<Neither>(c).witness.points(sys), 3));
  }
}

TEST_CASE("trim_spanning keeps spanning and removes redundancy") {
  auto x = signed_basis(2);
  x.push_back(P({-1, -1}));
  ColourSystem s(2, {x, x, x, x});
  Transversal t{{{0, 0}, {1, 2}, {2, 4}, {3, 1}}};
  REQUIRE(spans(t.points(s), 2));
  auto trimmed = trim_spanning(s, t);
  CHECK(trimmed.size() == 3);
  CHECK(spans(trimmed.points(s), 2));
}

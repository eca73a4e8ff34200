#pragma once

#include <random>
#include <vector>

#include "steinitz/exact.hpp"

namespace testing {

using steinitz::Point;
using steinitz::Rat;

inline Point P(std::initializer_list<long> xs) {
  Point p(xs.size());
  std::size_t i = 0;
  for (long x : xs) p[i++] = Rat(x);
  return p;
}

inline Point random_point(std::mt19937_64& rng, std::size_t d, int bound, bool nonzero = true) {
  for (;;) {
    Point p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = Rat(static_cast<long>(rng() % (2 * bound + 1)) - bound);
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline Rat random_rat(std::mt19937_64& rng, int bound) {
  long num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  long den = static_cast<long>(rng() % bound) + 1;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, std::size_t d, int bound) {
  std::vector<Point> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_point(rng, d, bound));
  return v;
}

}  // namespace testing

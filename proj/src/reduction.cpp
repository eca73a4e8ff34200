#include "steinitz/reduction.hpp"

#include <algorithm>
#include <map>

#include "combinatorics.hpp"
#include "steinitz/caratheodory.hpp"

namespace steinitz {

namespace {

std::vector<Point> distinct_rays(std::span<const Point> x) {
  std::vector<Point> rays;
  for (const auto& p : x) {
    Point r = primitive_ray(p);
    if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(std::move(r));
  }
  return rays;
}

std::vector<Point> pick(std::span<const Point> x, const std::vector<std::size_t>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(x[i]);
  return out;
}

// Normal spaces of the maximal small subsets: v is in lin S iff v is
// orthogonal to the whole complement of S.
std::vector<std::vector<Point>> small_hull_normals(std::span<const Point> x, std::size_t dim) {
  auto rays = distinct_rays(x);
  std::size_t k = std::min(dim == 0 ? 0 : dim - 1, rays.size());
  std::vector<std::vector<Point>> normals;
  detail::for_each_combination(rays.size(), k, [&](const std::vector<std::size_t>& idx) {
    normals.push_back(orthogonal_complement(pick(rays, idx), dim));
    return false;
  });
  return normals;
}

bool avoids(const Point& v, const std::vector<std::vector<Point>>& normals) {
  for (const auto& ns : normals) {
    bool inside = std::all_of(ns.begin(), ns.end(), [&](const Point& n) { return sgn(dot(n, v)) == 0; });
    if (inside) return false;
  }
  return true;
}

}  // namespace

Point generic_direction(std::span<const Point> x) {
  if (x.empty()) throw std::invalid_argument("generic_direction: empty set needs an explicit dimension");
  return generic_direction(x, x.front().dim());
}

Point generic_direction(std::span<const Point> x, std::size_t dim) {
  require_dim(x, dim, "generic_direction");
  for (const auto& p : x)
    if (p.is_zero()) throw std::invalid_argument("generic_direction: zero point");
  auto normals = small_hull_normals(x, dim);
  // Each small hull is a proper subspace, which meets the moment curve in at
  // most d-1 parameter values, so this loop ends.
  for (long t = 1;; ++t) {
    Point v(dim);
    Rat power = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = power;
      power *= t;
    }
    if (avoids(v, normals)) return v;
  }
}

bool is_generic_direction(const Point& v, std::span<const Point> x) {
  if (v.is_zero()) return false;
  const std::size_t d = v.dim();
  const std::size_t k = std::min(d - 1, x.size());
  return !detail::for_each_combination(x.size(), k, [&](const std::vector<std::size_t>& idx) {
    return in_linear_hull(v, pick(x, idx));
  });
}

Reduction steinitz_reduce(std::span<const Point> x) {
  if (x.empty()) throw std::invalid_argument("steinitz_reduce: empty set");
  const std::size_t d = x.front().dim();
  auto span_check = spans_space(x, d);
  if (auto* w = std::get_if<FarkasWitness>(&span_check)) throw NotSpanning(*w);

  Point v = generic_direction(x, d);
  auto plus = cone_caratheodory(v, x);
  auto minus = cone_caratheodory(-v, x);
  std::vector<std::size_t> subset = plus.subset;
  subset.insert(subset.end(), minus.subset.begin(), minus.subset.end());
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());

  auto cert = spans_space(pick(x, subset), d);
  if (!std::holds_alternative<SpanCertificate>(cert))
    throw std::logic_error("steinitz_reduce: two-sided Caratheodory support does not span");
  return {std::move(subset), std::get<SpanCertificate>(std::move(cert))};
}

std::optional<BasisCaseWitness> basis_case(std::span<const Point> x) {
  if (x.empty()) return std::nullopt;
  const std::size_t d = x.front().dim();
  std::map<Point, std::size_t> first_index;
  std::vector<Point> order;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Point r = primitive_ray(x[i]);
    if (first_index.emplace(r, i).second) order.push_back(r);
  }
  if (order.size() != 2 * d) return std::nullopt;
  BasisCaseWitness out;
  std::vector<Point> reps;
  for (const auto& r : order) {
    if (!first_index.count(-r)) return std::nullopt;
    if (std::find(reps.begin(), reps.end(), -r) != reps.end()) continue;
    reps.push_back(r);
    out.basis.push_back(first_index.at(r));
  }
  if (reps.size() != d || rank(reps) != d) return std::nullopt;
  return out;
}

Refinement refine_below_2d(std::span<const Point> x) {
  Reduction first = steinitz_reduce(x);
  const std::size_t d = x.front().dim();
  if (first.subset.size() + 1 <= 2 * d) return first;

  std::optional<Reduction> found;
  detail::for_each_combination(x.size(), 2 * d - 1, [&](const std::vector<std::size_t>& idx) {
    auto pts = pick(x, idx);
    if (!spans(pts, d)) return false;
    found = Reduction{idx, std::get<SpanCertificate>(spans_space(pts, d))};
    return true;
  });
  if (found) return *std::move(found);
  if (auto b = basis_case(x)) return *b;
  throw std::logic_error("refine_below_2d: no spanning subset of size 2d-1 outside the basis case");
}

}  // namespace steinitz

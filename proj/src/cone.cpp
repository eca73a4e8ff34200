#include "steinitz/cone.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace steinitz {

Point span_direction(std::size_t dim, std::size_t k) {
  return k < dim ? Point::unit(dim, k, 1) : Point::unit(dim, k - dim, -1);
}

Membership pos_membership(const Point& v, std::span<const Point> a) {
  if (a.empty()) throw std::invalid_argument("pos_membership: empty generator list");
  if (v.is_zero()) throw std::invalid_argument("pos_membership: zero target");
  require_dim(a, v.dim(), "pos_membership");
  auto lp = lp_feasibility(a, v);
  if (auto* no = std::get_if<Infeasible>(&lp)) return FarkasWitness{no->witness};
  const auto& lambda = std::get<Feasible>(lp).coefficients;
  ConicCertificate cert;
  cert.target = v;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (sgn(lambda[j]) > 0) {
      cert.generator_indices.push_back(j);
      cert.coefficients.push_back(lambda[j]);
    }
  }
  return cert;
}

namespace {

Point negated_sum(std::span<const Point> t, std::size_t dim) {
  Point s(dim);
  for (const auto& x : t) s -= x;
  return s;
}

// pos t = R^d  iff  rank t = d and -(sum of t) is in pos t: the second
// condition is the same as a strictly positive linear dependence on all of t.
FarkasWitness nonspanning_witness(std::span<const Point> t, std::size_t dim) {
  if (rank(t) < dim) return FarkasWitness{primitive_ray(orthogonal_complement(t, dim).front())};
  auto lp = lp_feasibility(t, negated_sum(t, dim));
  return FarkasWitness{std::get<Infeasible>(lp).witness};
}

}  // namespace

SpanResult spans_space(std::span<const Point> t) {
  if (t.empty()) throw std::invalid_argument("spans_space: empty set");
  return spans_space(t, t.front().dim());
}

SpanResult spans_space(std::span<const Point> t, std::size_t dim) {
  require_dim(t, dim, "spans_space");
  if (t.empty()) {
    if (dim == 0) return SpanCertificate{};
    return FarkasWitness{Point::unit(dim, 0)};
  }
  SpanCertificate cert;
  for (std::size_t k = 0; k < 2 * dim; ++k) {
    Point e = span_direction(dim, k);
    auto m = pos_membership(e, t);
    if (std::holds_alternative<FarkasWitness>(m)) return nonspanning_witness(t, dim);
    cert.directions.push_back(std::get<ConicCertificate>(std::move(m)));
  }
  return cert;
}

bool spans(std::span<const Point> t, std::size_t dim) {
  if (t.size() < dim + 1 || rank(t) < dim) return false;
  return std::holds_alternative<Feasible>(lp_feasibility(t, negated_sum(t, dim)));
}

NearestConePoint nearest_cone_point(const Point& v, std::span<const Point> t) {
  require_dim(t, v.dim(), "nearest_cone_point");
  if (t.size() > v.dim()) throw std::invalid_argument("nearest_cone_point: more generators than dimensions");

  // The projection onto a closed convex cone is unique. A candidate support S
  // is linearly independent, the least-squares coefficients on S are strictly
  // positive, and the residual has nonpositive inner product with every
  // generator. Preorder DFS visits index sets lexicographically.
  std::vector<std::size_t> current;
  std::optional<NearestConePoint> found;

  auto evaluate = [&]() -> std::optional<NearestConePoint> {
    const std::size_t k = current.size();
    std::vector<Rat> mu;
    if (k > 0) {
      RMatrix gram(k, k + 1);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(t[current[i]], t[current[j]]);
        gram(i, k) = dot(t[current[i]], v);
      }
      row_reduce(gram);
      for (std::size_t i = 0; i < k; ++i) {
        if (sgn(gram(i, k)) <= 0) return std::nullopt;
        mu.push_back(gram(i, k));
      }
    }
    Point p(v.dim());
    for (std::size_t i = 0; i < k; ++i) p += mu[i] * t[current[i]];
    Point residual = v - p;
    for (const auto& g : t)
      if (sgn(dot(residual, g)) > 0) return std::nullopt;
    return NearestConePoint{p, current, mu, squared_norm(residual)};
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t next) {
    if (found) return;
    if (auto cand = evaluate()) {
      found = std::move(cand);
      return;
    }
    for (std::size_t j = next; j < t.size() && !found; ++j) {
      current.push_back(j);
      std::vector<Point> cols;
      for (auto idx : current) cols.push_back(t[idx]);
      if (rank(cols) == cols.size()) dfs(j + 1);
      current.pop_back();
    }
  };
  dfs(0);
  if (!found) throw std::logic_error("nearest_cone_point: no support satisfied the optimality conditions");
  return *std::move(found);
}

FarkasWitness separating_witness(const Point& v, const Point& p) {
  if (v == p) throw std::invalid_argument("separating_witness: point lies in the cone");
  return FarkasWitness{v - p};
}

bool verify(const ConicCertificate& cert, std::span<const Point> points) {
  if (cert.generator_indices.size() != cert.coefficients.size()) return false;
  Point sum(cert.target.dim());
  std::vector<bool> seen(points.size(), false);
  for (std::size_t k = 0; k < cert.generator_indices.size(); ++k) {
    auto idx = cert.generator_indices[k];
    if (idx >= points.size() || seen[idx] || sgn(cert.coefficients[k]) < 0) return false;
    if (points[idx].dim() != cert.target.dim()) return false;
    seen[idx] = true;
    sum += cert.coefficients[k] * points[idx];
  }
  return sum == cert.target;
}

bool verify(const SpanCertificate& cert, std::span<const Point> points) {
  if (points.empty()) return false;
  const std::size_t dim = points.front().dim();
  if (cert.directions.size() != 2 * dim) return false;
  for (std::size_t k = 0; k < 2 * dim; ++k) {
    if (!(cert.directions[k].target == span_direction(dim, k))) return false;
    if (!verify(cert.directions[k], points)) return false;
  }
  return true;
}

bool verify(const FarkasWitness& wit, std::span<const Point> points, const Point& target) {
  if (wit.w.dim() != target.dim()) return false;
  for (const auto& a : points)
    if (a.dim() != wit.w.dim() || sgn(dot(wit.w, a)) > 0) return false;
  return sgn(dot(wit.w, target)) > 0;
}

bool verify_nonspanning(const FarkasWitness& wit, std::span<const Point> points) {
  return !wit.w.is_zero() && verify(wit, points, wit.w);
}

}  // namespace steinitz

// Conic predicates over finite generator lists, with certificates that can be
// re-checked by plain substitution.
#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "steinitz/exact.hpp"

namespace steinitz {

/// target = sum_k coefficients[k] * points[generator_indices[k]], all
/// coefficients >= 0, indices distinct.
struct ConicCertificate {
  std::vector<std::size_t> generator_indices;
  std::vector<Rat> coefficients;
  Point target;
};

/// <w, a> <= 0 for every generator a of the refuted set, and <w, target> > 0
/// for the target being refuted.
struct FarkasWitness {
  Point w;
};

/// One conic certificate per direction, ordered +e_1..+e_d, -e_1..-e_d.
struct SpanCertificate {
  std::vector<ConicCertificate> directions;
};

using Membership = std::variant<ConicCertificate, FarkasWitness>;
using SpanResult = std::variant<SpanCertificate, FarkasWitness>;

/// Standard direction k of the span certificate ordering.
Point span_direction(std::size_t dim, std::size_t k);

/// Membership of v in pos(a). A Member certificate lists only the strictly
/// positive coefficients, and those sit on linearly independent generators.
/// Throws std::invalid_argument on v = 0 or empty a, DimensionMismatch.
Membership pos_membership(const Point& v, std::span<const Point> a);

/// Decides pos(t) = R^d through the 2d directions +-e_i. On failure the
/// witness w is nonzero with <w, x> <= 0 for all x in t.
SpanResult spans_space(std::span<const Point> t);
SpanResult spans_space(std::span<const Point> t, std::size_t dim);

/// Boolean form of spans_space, without building a certificate.
bool spans(std::span<const Point> t, std::size_t dim);

struct NearestConePoint {
  Point point;
  /// Inclusion-minimal, linearly independent support; `point` lies in the
  /// relative interior of its positive hull.
  std::vector<std::size_t> support;
  std::vector<Rat> coefficients;
  Rat sqdist;
};

/// Euclidean projection of v onto pos(t), |t| <= dim. Ties among supports go
/// to the lexicographically smallest index set.
NearestConePoint nearest_cone_point(const Point& v, std::span<const Point> t);

/// w = v - p for a nearest-point pair with p != v.
FarkasWitness separating_witness(const Point& v, const Point& p);

bool verify(const ConicCertificate& cert, std::span<const Point> points);
bool verify(const SpanCertificate& cert, std::span<const Point> points);
/// Checks a witness against a concrete target.
bool verify(const FarkasWitness& wit, std::span<const Point> points, const Point& target);
/// Checks a witness refuting pos(points) = R^d.
bool verify_nonspanning(const FarkasWitness& wit, std::span<const Point> points);

}  // namespace steinitz

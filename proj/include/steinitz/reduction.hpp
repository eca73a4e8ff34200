// Steinitz reduction of a single spanning set: pick a direction in general
// position, take Caratheodory supports for it and its negation, and look for
// a smaller spanning subset outside the basis case.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "steinitz/cone.hpp"

namespace steinitz {

/// pos X != R^d (or pos X_colour != R^d when `colour` is set).
class NotSpanning : public std::runtime_error {
 public:
  explicit NotSpanning(FarkasWitness w, std::optional<std::size_t> colour = std::nullopt)
      : std::runtime_error(colour ? "set " + std::to_string(*colour + 1) + " does not span"
                                  : std::string("set does not span")),
        witness(std::move(w)),
        colour(colour) {}
  FarkasWitness witness;
  std::optional<std::size_t> colour;
};

/// v = (1, t, ..., t^{d-1}) for the least t >= 1 such that v lies in no linear
/// hull of d-1 or fewer points of X. Needs dim when X is empty.
Point generic_direction(std::span<const Point> x);
Point generic_direction(std::span<const Point> x, std::size_t dim);

/// true iff v is outside lin S for every S subset of X with |S| <= d-1.
bool is_generic_direction(const Point& v, std::span<const Point> x);

struct Reduction {
  std::vector<std::size_t> subset;  ///< sorted indices into X
  SpanCertificate certificate;      ///< over the points of `subset`, in order
};

/// Y subset of X, |Y| <= 2d, pos Y = R^d. Throws NotSpanning.
Reduction steinitz_reduce(std::span<const Point> x);

/// X is {+-e_1, ..., +-e_d} as a set of rays; `basis` holds the first member
/// of each antipodal pair, as indices into X.
struct BasisCaseWitness {
  std::vector<std::size_t> basis;
};

using Refinement = std::variant<Reduction, BasisCaseWitness>;

/// A spanning subset of size <= 2d-1, or the proof that none exists.
Refinement refine_below_2d(std::span<const Point> x);

/// Structural test: the distinct rays of X number 2d, are closed under
/// negation, and one representative per antipodal pair has rank d.
std::optional<BasisCaseWitness> basis_case(std::span<const Point> x);

}  // namespace steinitz

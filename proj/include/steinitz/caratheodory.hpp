// Cone Caratheodory reduction and its colourful version (pivoting on the
// distance from the target to the cone of the current transversal).
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "steinitz/cone.hpp"

namespace steinitz {

/// v is not in pos A; carries the separating witness.
class NotInCone : public std::runtime_error {
 public:
  explicit NotInCone(FarkasWitness w)
      : std::runtime_error("target is not in the positive hull"), witness(std::move(w)) {}
  FarkasWitness witness;
};

/// v is not in pos A_i for colour `colour` (0-based).
class PreconditionFailed : public std::runtime_error {
 public:
  PreconditionFailed(std::size_t colour, FarkasWitness w)
      : std::runtime_error("target is not in the positive hull of set " + std::to_string(colour + 1)),
        colour(colour),
        witness(std::move(w)) {}
  std::size_t colour;
  FarkasWitness witness;
};

struct CaratheodoryResult {
  /// Indices into A; equal to certificate.generator_indices.
  std::vector<std::size_t> subset;
  ConicCertificate certificate;
};

/// B subset of A with |B| <= d, linearly independent, v strictly positive on B.
CaratheodoryResult cone_caratheodory(const Point& v, std::span<const Point> a);

struct PivotStep {
  std::size_t colour;
  std::size_t entering;  ///< element index within that colour's set
  Rat sqdist;            ///< squared distance after the swap
};

struct PivotTrace {
  Rat initial_sqdist;
  std::vector<PivotStep> steps;
};

struct ColourfulCaratheodoryResult {
  /// picks[c] is the element chosen from sets[c].
  std::vector<std::size_t> picks;
  /// Generator indices refer to positions in `picks` (i.e. colours).
  ConicCertificate certificate;
  PivotTrace trace;
};

/// One point per set with v in their positive hull. Each pivot strictly
/// decreases the squared distance from v to the cone of the transversal.
/// Throws PreconditionFailed if v is outside some pos A_i.
ColourfulCaratheodoryResult colorful_cone_caratheodory(const Point& v,
                                                       std::span<const std::vector<Point>> sets);

}  // namespace steinitz

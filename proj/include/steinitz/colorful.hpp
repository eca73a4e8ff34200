// Colour systems X_1..X_{2d}: spanning transversals, P-sets, positive
// circuits, distinct representatives, projections, and the classification of
// systems that need all 2d colours.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "steinitz/caratheodory.hpp"
#include "steinitz/cone.hpp"
#include "steinitz/reduction.hpp"

namespace steinitz {

/// Ordered family of 2*dim nonempty sets of nonzero points in R^dim.
class ColourSystem {
 public:
  /// Throws std::invalid_argument on a wrong set count, an empty set or a
  /// zero point, and DimensionMismatch on a point of the wrong dimension.
  ColourSystem(std::size_t dim, std::vector<std::vector<Point>> sets);

  std::size_t dim() const { return dim_; }
  std::size_t colours() const { return sets_.size(); }
  const std::vector<Point>& set(std::size_t c) const { return sets_[c]; }
  const std::vector<std::vector<Point>>& sets() const { return sets_; }

  /// All points, colour by colour.
  std::vector<Point> union_points() const;

  /// Throws NotSpanning (with the colour) for the first X_i with pos X_i != R^d.
  void require_spanning() const;

  friend bool operator==(const ColourSystem&, const ColourSystem&) = default;

 private:
  std::size_t dim_;
  std::vector<std::vector<Point>> sets_;
};

struct Pick {
  std::size_t colour;
  std::size_t element;
  friend bool operator==(const Pick&, const Pick&) = default;
};

/// One element from each of a set of distinct colours, sorted by colour.
struct Transversal {
  std::vector<Pick> picks;

  std::size_t size() const { return picks.size(); }
  bool is_full(const ColourSystem& sys) const { return picks.size() == sys.colours(); }
  std::vector<Point> points(const ColourSystem& sys) const;
  /// Distinct valid colours and valid element indices.
  bool well_formed(const ColourSystem& sys) const;
};

struct TransversalWithCertificate {
  Transversal transversal;
  SpanCertificate certificate;  ///< over transversal.points(sys)
};

/// Full transversal with pos T = R^d: a generic v, colourful Caratheodory for
/// v on the first d colours and for -v on the last d. Throws NotSpanning.
TransversalWithCertificate colorful_transversal(const ColourSystem& sys);

struct ColourfulTransversalTrace {
  PivotTrace first_half;   ///< v on colours 1..d
  PivotTrace second_half;  ///< -v on colours d+1..2d; step colours are absolute
};

TransversalWithCertificate colorful_transversal(const ColourSystem& sys, ColourfulTransversalTrace* trace);

struct PSetResult {
  Point v;
  std::vector<std::size_t> members;  ///< colours j with -v in X_j (as rays)
};

PSetResult p_set(const Point& v, const ColourSystem& sys);

struct PositiveCircuit {
  std::vector<std::size_t> indices;  ///< into the ground list
  std::vector<Point> points;
  std::vector<Rat> coefficients;  ///< strictly positive, primitive integral
};

/// true iff `points` is a positive circuit: rank = |points| - 1 and the
/// one-dimensional dependence space has a strictly positive vector.
bool is_positive_circuit(std::span<const Point> points);

/// Lexicographically first minimal positively dependent subset of A.
/// Throws NotSpanning when pos A != R^d.
PositiveCircuit positive_circuit(std::span<const Point> a);

/// Same search without the spanning precondition; nullopt if A has no
/// positive dependence.
std::optional<PositiveCircuit> find_positive_circuit(std::span<const Point> a);

struct HallResult {
  /// representatives[j] in family[j], pairwise distinct, when a matching
  /// exists; otherwise empty and `violating` lists family indices whose union
  /// is smaller than their number.
  std::optional<std::vector<std::size_t>> representatives;
  std::vector<std::size_t> violating;
};

HallResult hall_sdr(std::span<const std::vector<std::size_t>> family, std::size_t universe_size);

struct Projection {
  /// Pairwise orthogonal primitive integral vectors spanning L^perp.
  std::vector<Point> frame;
  /// images[i][k] is the coefficient of frame[k] in the projection of
  /// points[i]; zero images are kept but flagged.
  std::vector<Point> images;
  std::vector<bool> zero_image;
};

/// Orthogonal projection onto the complement of lin(l_basis). Throws
/// std::invalid_argument if l_basis is linearly dependent.
Projection project_complement(std::span<const Point> points, std::span<const Point> l_basis, std::size_t dim);

struct BCase {
  std::vector<Point> basis;
};

struct PCase {
  std::vector<Point> f;                     ///< d+1 points, a positive basis
  std::vector<Rat> circuit;                 ///< sum circuit[k] * f[k] = 0
  std::vector<std::size_t> plus_colours;    ///< colours equal to F
  std::vector<std::size_t> minus_colours;   ///< colours equal to -F
};

/// Structural tests straight from the definitions (sets compared as rays).
std::optional<BCase> detect_bcase(const ColourSystem& sys);
std::optional<PCase> detect_pcase(const ColourSystem& sys);

/// Which part of the construction produced a small transversal.
enum class Branch {
  Exhaustive,         ///< d <= 2 base case
  AntipodeCount,      ///< some x in X_i with |P(x) \ {i}| < d
  CircuitSubspace,    ///< Case I, circuit of size k <= d
  CircuitFull,        ///< Case I, circuit of size d+1 with a full SDR
  AntipodalRecursion, ///< Case II, recursion on the projection found one
  AntipodalLift,      ///< Case II, lifting a spanning projected transversal
  Fallback,           ///< bounded exhaustive search after the above
};

std::string to_string(Branch b);

struct SmallTransversal {
  Transversal transversal;
  SpanCertificate certificate;
  Branch branch;
};

/// Internal consistency failure in the recursive construction.
class RecursionInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SearchOptions {
  /// Caps the exhaustive searches used at d <= 2 and as a fallback.
  std::uint64_t budget = 10'000'000;
};

using SmallTransversalResult = std::variant<SmallTransversal, BCase, PCase>;

/// A spanning partial transversal with at most 2d-1 picks, or the structural
/// case that rules one out. Throws NotSpanning.
SmallTransversalResult find_small_transversal(const ColourSystem& sys, const SearchOptions& opts = {});

struct Neither {
  Transversal witness;
  SpanCertificate certificate;
  Branch branch;
};

using Classification = std::variant<BCase, PCase, Neither>;

Classification classify(const ColourSystem& sys, const SearchOptions& opts = {});

std::string classification_name(const Classification& c);

/// Removes picks while the rest still spans, lowest colour first.
Transversal trim_spanning(const ColourSystem& sys, Transversal t);

}  // namespace steinitz

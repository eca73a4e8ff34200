// Brute-force ground truth over (partial) transversals, plus instance
// generators.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "steinitz/colorful.hpp"

namespace steinitz {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  /// Maximum number of (partial) transversals examined.
  std::uint64_t budget = 10'000'000;
};

struct EnumerationReport {
  std::uint64_t total_full_transversals = 0;
  std::uint64_t spanning_full_count = 0;
  std::optional<std::size_t> min_spanning_partial_size;
  std::optional<Transversal> witness;
};

/// Number of full transversals T with pos T = R^d.
std::uint64_t count_spanning_transversals(const ColourSystem& sys, const OracleOptions& opts = {});

/// Every spanning full transversal, in lexicographic order of element picks.
std::vector<Transversal> spanning_full_transversals(const ColourSystem& sys, const OracleOptions& opts = {});

/// Smallest k such that some k-transversal spans. Throws NotSpanning if the
/// system itself does not span.
std::size_t min_spanning_partial_size(const ColourSystem& sys, const OracleOptions& opts = {});

/// First spanning partial transversal with at most max_size picks, searching
/// by size, then colour subset, then element tuple (all lexicographic).
std::optional<Transversal> smallest_spanning_partial(const ColourSystem& sys, std::size_t max_size,
                                                     const OracleOptions& opts = {});

/// Count, minimum and a minimum witness in one report.
EnumerationReport enumerate(const ColourSystem& sys, const OracleOptions& opts = {});

enum class InstanceKind { BCase, PCase, Random };

InstanceKind parse_instance_kind(const std::string& name);
std::string to_string(InstanceKind k);

struct GenerateParams {
  std::size_t set_size = 0;  ///< Random only; 0 means d + 2
  std::uint64_t seed = 0;
  int coordinate_bound = 3;  ///< Random coordinates lie in [-bound, bound]
  bool transform = false;    ///< apply a seeded unimodular map (BCase/PCase)
  std::uint64_t max_attempts = 100'000;
};

ColourSystem generate(InstanceKind kind, std::size_t dim, const GenerateParams& params = {});

/// Seeded spanning set of `size` distinct rays with integer coordinates.
/// Throws BudgetExceeded after max_attempts rejected draws.
std::vector<Point> random_spanning_set(std::size_t dim, std::size_t size, std::mt19937_64& rng, int bound,
                                       std::uint64_t max_attempts = 100'000);

/// Integer matrix with determinant 1, as rows.
std::vector<Point> random_unimodular(std::size_t dim, std::mt19937_64& rng);

Point apply_rows(const std::vector<Point>& rows, const Point& x);

}  // namespace steinitz

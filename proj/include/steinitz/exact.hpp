// Exact rational linear algebra: scalars, vectors, matrices, elimination and
// a phase-1 simplex that either finds a nonnegative combination or returns a
// Farkas witness.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace steinitz {

/// Arbitrary-precision rational. GMP keeps every arithmetic result in lowest
/// terms with a positive denominator; values built from text go through
/// parse_rat, which canonicalizes.
using Rat = mpq_class;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument
/// with message "malformed rational ..." on anything else, including q = 0.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

int sign(const Rat& r);

/// A d-dimensional rational vector. Points used as generators stand for the
/// ray they span, so only their direction up to positive scaling matters.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim) {}
  explicit Point(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rat> coords) : coords_(coords) {}

  static Point unit(std::size_t dim, std::size_t axis, int sign = 1);

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  Point operator-() const;
  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(const Rat& s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const Rat& s, Point a) { return a *= s; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rat> coords_;
};

Rat dot(const Point& a, const Point& b);
Rat squared_norm(const Point& a);

/// Primitive integer vector pointing the same way as p (gcd of entries 1).
/// Two generators are the same ray iff their primitive forms are equal.
Point primitive_ray(const Point& p);
bool same_ray(const Point& a, const Point& b);

/// Coordinates joined by single spaces.
std::string to_string(const Point& p);

/// Throws DimensionMismatch unless every point has dimension `dim`.
void require_dim(std::span<const Point> points, std::size_t dim, std::string_view what);

/// Dense rational matrix stored by rows.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RMatrix from_rows(std::span<const Point> rows);
  static RMatrix from_columns(std::span<const Point> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Point row(std::size_t r) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RMatrix& m);

std::size_t rank(const RMatrix& m);
std::size_t rank(std::span<const Point> rows);

/// Basis of {x : M x = 0}, one vector per free column of the RREF.
std::vector<Point> nullspace(const RMatrix& m);

/// Basis of the vectors orthogonal to every point in `points` (ambient dim d).
std::vector<Point> orthogonal_complement(std::span<const Point> points, std::size_t dim);

/// true iff v lies in the linear hull of S (lin {} = {0}).
bool in_linear_hull(const Point& v, std::span<const Point> s);

/// Some x with sum_j x_j * cols[j] = b, or nullopt if the system is
/// inconsistent. Free variables are set to zero.
std::optional<std::vector<Rat>> solve_combination(std::span<const Point> cols, const Point& b);

/// v = sum_j coefficients[j] * generators[j] with coefficients >= 0. The
/// positive entries sit on linearly independent generators.
struct Feasible {
  std::vector<Rat> coefficients;
};

/// <w, a> <= 0 for every generator a and <w, v> > 0. w is primitive integral.
struct Infeasible {
  Point witness;
};

using LpResult = std::variant<Feasible, Infeasible>;

/// Decides v in pos(generators) with a phase-1 simplex (sum of artificials,
/// Bland's rule). Throws DimensionMismatch.
LpResult lp_feasibility(std::span<const Point> generators, const Point& v);

}  // namespace steinitz

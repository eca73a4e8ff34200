#include "steinitz/exact.hpp"

#include <algorithm>
#include <cctype>

namespace steinitz {

Rat parse_rat(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den) || std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Rat r(std::string(text), 10);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

int sign(const Rat& r) { return sgn(r); }

Point Point::unit(std::size_t dim, std::size_t axis, int s) {
  Point p(dim);
  p[axis] = s;
  return p;
}

bool Point::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& r) { return sgn(r) == 0; });
}

Point Point::operator-() const {
  Point out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

Point& Point::operator+=(const Point& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Point& Point::operator*=(const Rat& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Rat dot(const Point& a, const Point& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rat squared_norm(const Point& a) { return dot(a, a); }

Point primitive_ray(const Point& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p) lcm_den = lcm(lcm_den, c.get_den());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  ints.reserve(p.dim());
  for (const auto& c : p) {
    mpz_class v = c.get_num() * (lcm_den / c.get_den());
    g = gcd(g, v);
    ints.push_back(std::move(v));
  }
  Point out(p.dim());
  if (g == 0) return out;
  for (std::size_t i = 0; i < p.dim(); ++i) out[i] = Rat(ints[i] / g);
  return out;
}

bool same_ray(const Point& a, const Point& b) { return primitive_ray(a) == primitive_ray(b); }

std::string to_string(const Point& p) {
  std::string s;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ' ';
    s += to_string(p[i]);
  }
  return s;
}

void require_dim(std::span<const Point> points, std::size_t dim, std::string_view what) {
  for (const auto& p : points) {
    if (p.dim() != dim) {
      throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(dim) + ", got " +
                              std::to_string(p.dim()));
    }
  }
}

RMatrix RMatrix::from_rows(std::span<const Point> rows) {
  if (rows.empty()) return {};
  RMatrix m(rows.size(), rows.front().dim());
  require_dim(rows, m.cols_, "matrix row");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  return m;
}

RMatrix RMatrix::from_columns(std::span<const Point> cols) {
  if (cols.empty()) return {};
  RMatrix m(cols.front().dim(), cols.size());
  require_dim(cols, m.rows_, "matrix column");
  for (std::size_t c = 0; c < m.cols_; ++c)
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  return m;
}

Point RMatrix::row(std::size_t r) const {
  Point p(cols_);
  for (std::size_t c = 0; c < cols_; ++c) p[c] = (*this)(r, c);
  return p;
}

std::vector<std::size_t> row_reduce(RMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    std::size_t sel = prow;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != prow)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(prow, c));
    Rat inv = 1 / m(prow, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(prow, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || sgn(m(r, col)) == 0) continue;
      Rat f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(prow, c);
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

std::size_t rank(const RMatrix& m) {
  RMatrix work = m;
  return row_reduce(work).size();
}

std::size_t rank(std::span<const Point> rows) { return rank(RMatrix::from_rows(rows)); }

std::vector<Point> nullspace(const RMatrix& m) {
  RMatrix work = m;
  auto pivots = row_reduce(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Point> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Point x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -work(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Point> orthogonal_complement(std::span<const Point> points, std::size_t dim) {
  require_dim(points, dim, "orthogonal_complement");
  if (points.empty()) {
    std::vector<Point> all;
    for (std::size_t i = 0; i < dim; ++i) all.push_back(Point::unit(dim, i));
    return all;
  }
  return nullspace(RMatrix::from_rows(points));
}

bool in_linear_hull(const Point& v, std::span<const Point> s) {
  require_dim(s, v.dim(), "in_linear_hull");
  if (v.is_zero()) return true;
  if (s.empty()) return false;
  std::vector<Point> rows(s.begin(), s.end());
  std::size_t base = rank(rows);
  rows.push_back(v);
  return rank(rows) == base;
}

std::optional<std::vector<Rat>> solve_combination(std::span<const Point> cols, const Point& b) {
  require_dim(cols, b.dim(), "solve_combination");
  const std::size_t m = b.dim();
  const std::size_t n = cols.size();
  RMatrix aug(m, n + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = cols[c][r];
    aug(r, n) = b[r];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<Rat> x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
  return x;
}

namespace {

// Dense phase-1 tableau for  S A lambda + a = S v,  lambda, a >= 0, where S
// flips rows with negative right-hand side. Columns 0..n-1 are the
// generators, n..n+m-1 the artificials.
class PhaseOne {
 public:
  PhaseOne(std::span<const Point> gens, const Point& v)
      : m_(v.dim()), n_(gens.size()), tab_(m_, n_ + m_), rhs_(m_), flip_(m_, 1), basis_(m_) {
    for (std::size_t r = 0; r < m_; ++r) {
      if (sgn(v[r]) < 0) flip_[r] = -1;
      rhs_[r] = flip_[r] * v[r];
      for (std::size_t c = 0; c < n_; ++c) tab_(r, c) = flip_[r] * gens[c][r];
      tab_(r, n_ + r) = 1;
      basis_[r] = n_ + r;
    }
  }

  void solve() {
    for (;;) {
      auto entering = entering_column();
      if (!entering) return;
      auto leaving = leaving_row(*entering);
      // Phase-1 is bounded below by zero, so a ratio row always exists.
      pivot(*leaving, *entering);
    }
  }

  Rat objective() const {
    Rat z = 0;
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] >= n_) z += rhs_[r];
    return z;
  }

  std::vector<Rat> primal() const {
    std::vector<Rat> lambda(n_);
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) lambda[basis_[r]] = rhs_[r];
    return lambda;
  }

  // y = c_B^T B^{-1}; the artificial block of the tableau holds B^{-1}.
  Point dual_in_original_signs() const {
    Point w(m_);
    for (std::size_t k = 0; k < m_; ++k) {
      Rat y = 0;
      for (std::size_t r = 0; r < m_; ++r)
        if (basis_[r] >= n_) y += tab_(r, n_ + k);
      w[k] = flip_[k] * y;
    }
    return w;
  }

 private:
  Rat reduced_cost(std::size_t col) const {
    Rat r = col >= n_ ? 1 : 0;
    for (std::size_t row = 0; row < m_; ++row)
      if (basis_[row] >= n_) r -= tab_(row, col);
    return r;
  }

  std::optional<std::size_t> entering_column() const {
    std::vector<bool> in_basis(n_ + m_, false);
    for (auto b : basis_) in_basis[b] = true;
    for (std::size_t c = 0; c < n_ + m_; ++c)
      if (!in_basis[c] && sgn(reduced_cost(c)) < 0) return c;
    return std::nullopt;
  }

  std::optional<std::size_t> leaving_row(std::size_t col) const {
    std::optional<std::size_t> best;
    Rat best_ratio;
    for (std::size_t r = 0; r < m_; ++r) {
      if (sgn(tab_(r, col)) <= 0) continue;
      Rat ratio = rhs_[r] / tab_(r, col);
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t prow, std::size_t pcol) {
    const std::size_t width = n_ + m_;
    Rat inv = 1 / tab_(prow, pcol);
    for (std::size_t c = 0; c < width; ++c) tab_(prow, c) *= inv;
    rhs_[prow] *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == prow || sgn(tab_(r, pcol)) == 0) continue;
      Rat f = tab_(r, pcol);
      for (std::size_t c = 0; c < width; ++c) tab_(r, c) -= f * tab_(prow, c);
      rhs_[r] -= f * rhs_[prow];
    }
    basis_[prow] = pcol;
  }

  std::size_t m_;
  std::size_t n_;
  RMatrix tab_;
  std::vector<Rat> rhs_;
  std::vector<int> flip_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_feasibility(std::span<const Point> generators, const Point& v) {
  require_dim(generators, v.dim(), "lp_feasibility");
  PhaseOne lp(generators, v);
  lp.solve();
  if (sgn(lp.objective()) == 0) return Feasible{lp.primal()};
  return Infeasible{primitive_ray(lp.dual_in_original_signs())};
}

}  // namespace steinitz

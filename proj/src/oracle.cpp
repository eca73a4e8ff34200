#include "steinitz/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "combinatorics.hpp"

namespace steinitz {

namespace {

// Spanning depends only on the set of distinct rays, so results are cached
// per set of ray ids within one system.
class SpanCache {
 public:
  explicit SpanCache(const ColourSystem& sys) : dim_(sys.dim()) {
    std::map<Point, std::size_t> ids;
    ray_.resize(sys.colours());
    for (std::size_t c = 0; c < sys.colours(); ++c) {
      for (const auto& p : sys.set(c)) {
        Point r = primitive_ray(p);
        auto [it, inserted] = ids.emplace(r, rays_.size());
        if (inserted) rays_.push_back(std::move(r));
        ray_[c].push_back(it->second);
      }
    }
    if (rays_.size() <= 20) dense_.assign(std::size_t{1} << rays_.size(), -1);
  }

  std::size_t ray(std::size_t colour, std::size_t element) const { return ray_[colour][element]; }

  bool spans_picks(const std::vector<Pick>& picks) {
    if (rays_.size() > 64) {
      std::vector<std::size_t> ids;
      for (const auto& p : picks) ids.push_back(ray(p.colour, p.element));
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      return evaluate(ids);
    }
    std::uint64_t mask = 0;
    for (const auto& p : picks) mask |= std::uint64_t{1} << ray(p.colour, p.element);
    if (!dense_.empty()) {
      auto& slot = dense_[mask];
      if (slot < 0) slot = evaluate_mask(mask) ? 1 : 0;
      return slot == 1;
    }
    auto it = sparse_.find(mask);
    if (it != sparse_.end()) return it->second;
    bool r = evaluate_mask(mask);
    sparse_.emplace(mask, r);
    return r;
  }

 private:
  bool evaluate_mask(std::uint64_t mask) const {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (mask >> i & 1) ids.push_back(i);
    return evaluate(ids);
  }

  bool evaluate(const std::vector<std::size_t>& ids) const {
    if (ids.size() < dim_ + 1) return false;
    std::vector<Point> pts;
    for (auto i : ids) pts.push_back(rays_[i]);
    return spans(pts, dim_);
  }

  std::size_t dim_;
  std::vector<Point> rays_;
  std::vector<std::vector<std::size_t>> ray_;
  std::vector<signed char> dense_;
  std::unordered_map<std::uint64_t, bool> sparse_;
};

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void charge() {
    if (++used_ > limit_) throw BudgetExceeded("enumeration budget of " + std::to_string(limit_) + " exceeded");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Odometer over element choices for the given colours; fn returns true to stop.
template <class Fn>
bool for_each_pick_tuple(const ColourSystem& sys, const std::vector<std::size_t>& colours, Fn&& fn) {
  std::vector<Pick> picks;
  for (auto c : colours) picks.push_back({c, 0});
  if (picks.empty()) return fn(picks);
  for (;;) {
    if (fn(static_cast<const std::vector<Pick>&>(picks))) return true;
    std::size_t i = picks.size();
    while (i > 0) {
      --i;
      if (++picks[i].element < sys.set(picks[i].colour).size()) break;
      picks[i].element = 0;
      if (i == 0) return false;
    }
  }
}

std::uint64_t full_product(const ColourSystem& sys) {
  std::uint64_t total = 1;
  for (const auto& s : sys.sets()) {
    if (total > UINT64_MAX / std::max<std::size_t>(s.size(), 1)) return UINT64_MAX;
    total *= s.size();
  }
  return total;
}

std::vector<std::size_t> all_colours(const ColourSystem& sys) {
  std::vector<std::size_t> c(sys.colours());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
  return c;
}

template <class Fn>
void visit_spanning_full(const ColourSystem& sys, const OracleOptions& opts, Fn&& fn) {
  if (full_product(sys) > opts.budget)
    throw BudgetExceeded("full transversal count exceeds budget of " + std::to_string(opts.budget));
  SpanCache cache(sys);
  for_each_pick_tuple(sys, all_colours(sys), [&](const std::vector<Pick>& picks) {
    if (cache.spans_picks(picks)) fn(picks);
    return false;
  });
}

}  // namespace

std::uint64_t count_spanning_transversals(const ColourSystem& sys, const OracleOptions& opts) {
  std::uint64_t count = 0;
  visit_spanning_full(sys, opts, [&](const std::vector<Pick>&) { ++count; });
  return count;
}

std::vector<Transversal> spanning_full_transversals(const ColourSystem& sys, const OracleOptions& opts) {
  std::vector<Transversal> out;
  visit_spanning_full(sys, opts, [&](const std::vector<Pick>& picks) { out.push_back(Transversal{picks}); });
  return out;
}

std::optional<Transversal> smallest_spanning_partial(const ColourSystem& sys, std::size_t max_size,
                                                     const OracleOptions& opts) {
  SpanCache cache(sys);
  Budget budget(opts.budget);
  std::optional<Transversal> found;
  const std::size_t top = std::min(max_size, sys.colours());
  for (std::size_t k = sys.dim() + 1; k <= top && !found; ++k) {
    detail::for_each_combination(sys.colours(), k, [&](const std::vector<std::size_t>& colours) {
      return for_each_pick_tuple(sys, colours, [&](const std::vector<Pick>& picks) {
        budget.charge();
        if (!cache.spans_picks(picks)) return false;
        found = Transversal{picks};
        return true;
      });
    });
  }
  return found;
}

std::size_t min_spanning_partial_size(const ColourSystem& sys, const OracleOptions& opts) {
  sys.require_spanning();
  auto t = smallest_spanning_partial(sys, sys.colours(), opts);
  if (!t) throw std::logic_error("min_spanning_partial_size: spanning system without spanning transversal");
  return t->size();
}

EnumerationReport enumerate(const ColourSystem& sys, const OracleOptions& opts) {
  EnumerationReport r;
  r.total_full_transversals = full_product(sys);
  r.spanning_full_count = count_spanning_transversals(sys, opts);
  r.witness = smallest_spanning_partial(sys, sys.colours(), opts);
  if (r.witness) r.min_spanning_partial_size = r.witness->size();
  return r;
}

InstanceKind parse_instance_kind(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (n == "bcase") return InstanceKind::BCase;
  if (n == "pcase") return InstanceKind::PCase;
  if (n == "random") return InstanceKind::Random;
  throw std::invalid_argument("unknown instance kind '" + name + "' (expected bcase, pcase or random)");
}

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::BCase: return "bcase";
    case InstanceKind::PCase: return "pcase";
    case InstanceKind::Random: return "random";
  }
  return "?";
}

namespace {

// std::uniform_int_distribution differs between standard libraries; this
// keeps seeded output identical everywhere.
long draw(std::mt19937_64& rng, long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

}  // namespace

std::vector<Point> random_unimodular(std::size_t dim, std::mt19937_64& rng) {
  std::vector<Point> m;
  for (std::size_t i = 0; i < dim; ++i) m.push_back(Point::unit(dim, i));
  if (dim < 2) return m;
  for (std::size_t step = 0; step < 3 * dim; ++step) {
    auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(dim) - 1));
    auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(dim) - 2));
    if (j >= i) ++j;
    long f = draw(rng, -2, 1);
    if (f >= 0) ++f;
    m[i] += Rat(f) * m[j];
  }
  return m;
}

Point apply_rows(const std::vector<Point>& rows, const Point& x) {
  Point y(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) y[i] = dot(rows[i], x);
  return y;
}

std::vector<Point> random_spanning_set(std::size_t dim, std::size_t size, std::mt19937_64& rng, int bound,
                                       std::uint64_t max_attempts) {
  if (size < dim + 1) throw std::invalid_argument("random_spanning_set: size must be at least d+1");
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Point> pts;
    std::vector<Point> rays;
    std::uint64_t draws = 0;
    while (pts.size() < size && draws++ < 100 * size) {
      Point p(dim);
      for (std::size_t i = 0; i < dim; ++i) p[i] = draw(rng, -bound, bound);
      if (p.is_zero()) continue;
      Point r = primitive_ray(p);
      if (std::find(rays.begin(), rays.end(), r) != rays.end()) continue;
      rays.push_back(std::move(r));
      pts.push_back(std::move(p));
    }
    if (pts.size() == size && spans(pts, dim)) return pts;
  }
  throw BudgetExceeded("random_spanning_set: no spanning set after " + std::to_string(max_attempts) + " attempts");
}

ColourSystem generate(InstanceKind kind, std::size_t dim, const GenerateParams& params) {
  if (dim < 1) throw std::invalid_argument("generate: dimension must be at least 1");
  std::mt19937_64 rng(params.seed);
  std::vector<std::vector<Point>> sets;
  auto transformed = [&](std::vector<Point> pts) {
    if (!params.transform) return pts;
    auto m = random_unimodular(dim, rng);
    for (auto& p : pts) p = apply_rows(m, p);
    return pts;
  };

  switch (kind) {
    case InstanceKind::BCase: {
      std::vector<Point> x;
      for (std::size_t i = 0; i < dim; ++i) {
        x.push_back(Point::unit(dim, i, 1));
        x.push_back(Point::unit(dim, i, -1));
      }
      x = transformed(std::move(x));
      sets.assign(2 * dim, x);
      break;
    }
    case InstanceKind::PCase: {
      std::vector<Point> f;
      Point last(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        f.push_back(Point::unit(dim, i));
        last[i] = -1;
      }
      f.push_back(last);
      f = transformed(std::move(f));
      std::vector<Point> neg;
      for (const auto& p : f) neg.push_back(-p);
      for (std::size_t c = 0; c < dim; ++c) sets.push_back(f);
      for (std::size_t c = 0; c < dim; ++c) sets.push_back(neg);
      break;
    }
    case InstanceKind::Random: {
      if (dim == 1) throw std::invalid_argument("generate: every spanning system in dimension 1 is a basis case");
      std::size_t size = params.set_size ? params.set_size : dim + 2;
      if (size < dim + 1) throw std::invalid_argument("generate: random set size must be at least d+1");
      for (std::uint64_t attempt = 0; attempt < params.max_attempts; ++attempt) {
        sets.clear();
        for (std::size_t c = 0; c < 2 * dim; ++c)
          sets.push_back(random_spanning_set(dim, size, rng, params.coordinate_bound, params.max_attempts));
        ColourSystem sys(dim, sets);
        if (!detect_bcase(sys) && !detect_pcase(sys)) return sys;
      }
      throw BudgetExceeded("generate: only structural systems drawn");
    }
  }
  return ColourSystem(dim, std::move(sets));
}

}  // namespace steinitz

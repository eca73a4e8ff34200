#include "steinitz/colorful.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "steinitz/oracle.hpp"

namespace steinitz {

ColourSystem::ColourSystem(std::size_t dim, std::vector<std::vector<Point>> sets)
    : dim_(dim), sets_(std::move(sets)) {
  if (dim_ == 0) throw std::invalid_argument("colour system: dimension must be at least 1");
  if (sets_.size() != 2 * dim_)
    throw std::invalid_argument("colour system: expected " + std::to_string(2 * dim_) + " sets, got " +
                                std::to_string(sets_.size()));
  for (std::size_t c = 0; c < sets_.size(); ++c) {
    if (sets_[c].empty()) throw std::invalid_argument("colour system: set " + std::to_string(c + 1) + " is empty");
    require_dim(sets_[c], dim_, "colour system");
    for (std::size_t e = 0; e < sets_[c].size(); ++e)
      if (sets_[c][e].is_zero())
        throw std::invalid_argument("zero point at set " + std::to_string(c + 1) + " index " + std::to_string(e + 1));
  }
}

std::vector<Point> ColourSystem::union_points() const {
  std::vector<Point> all;
  for (const auto& s : sets_) all.insert(all.end(), s.begin(), s.end());
  return all;
}

void ColourSystem::require_spanning() const {
  for (std::size_t c = 0; c < sets_.size(); ++c) {
    if (spans(sets_[c], dim_)) continue;
    auto r = spans_space(sets_[c], dim_);
    throw NotSpanning(std::get<FarkasWitness>(r), c);
  }
}

std::vector<Point> Transversal::points(const ColourSystem& sys) const {
  std::vector<Point> out;
  out.reserve(picks.size());
  for (const auto& p : picks) out.push_back(sys.set(p.colour)[p.element]);
  return out;
}

bool Transversal::well_formed(const ColourSystem& sys) const {
  std::set<std::size_t> seen;
  for (const auto& p : picks) {
    if (p.colour >= sys.colours() || p.element >= sys.set(p.colour).size()) return false;
    if (!seen.insert(p.colour).second) return false;
  }
  return true;
}

namespace {

std::set<Point> ray_set(std::span<const Point> pts) {
  std::set<Point> s;
  for (const auto& p : pts) s.insert(primitive_ray(p));
  return s;
}

std::set<Point> negated(const std::set<Point>& s) {
  std::set<Point> out;
  for (const auto& p : s) out.insert(-p);
  return out;
}

std::optional<std::size_t> find_ray(std::span<const Point> pts, const Point& ray) {
  Point r = primitive_ray(ray);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (primitive_ray(pts[i]) == r) return i;
  return std::nullopt;
}

void sort_by_colour(Transversal& t) {
  std::sort(t.picks.begin(), t.picks.end(), [](const Pick& a, const Pick& b) { return a.colour < b.colour; });
}

}  // namespace

TransversalWithCertificate colorful_transversal(const ColourSystem& sys) { return colorful_transversal(sys, nullptr); }

TransversalWithCertificate colorful_transversal(const ColourSystem& sys, ColourfulTransversalTrace* trace) {
  sys.require_spanning();
  const std::size_t d = sys.dim();
  auto all = sys.union_points();
  Point v = generic_direction(all, d);

  std::vector<std::vector<Point>> first(sys.sets().begin(), sys.sets().begin() + static_cast<long>(d));
  std::vector<std::vector<Point>> second(sys.sets().begin() + static_cast<long>(d), sys.sets().end());
  auto lo = colorful_cone_caratheodory(v, first);
  auto hi = colorful_cone_caratheodory(-v, second);
  if (trace) {
    trace->first_half = lo.trace;
    trace->second_half = hi.trace;
    for (auto& step : trace->second_half.steps) step.colour += d;
  }

  Transversal t;
  for (std::size_t c = 0; c < d; ++c) t.picks.push_back({c, lo.picks[c]});
  for (std::size_t c = 0; c < d; ++c) t.picks.push_back({d + c, hi.picks[c]});
  auto cert = spans_space(t.points(sys), d);
  if (!std::holds_alternative<SpanCertificate>(cert))
    throw std::logic_error("colorful_transversal: constructed transversal does not span");
  return {std::move(t), std::get<SpanCertificate>(std::move(cert))};
}

PSetResult p_set(const Point& v, const ColourSystem& sys) {
  if (v.is_zero()) throw std::invalid_argument("p_set: zero vector");
  if (v.dim() != sys.dim()) throw DimensionMismatch("p_set: dimension mismatch");
  PSetResult r{v, {}};
  Point target = primitive_ray(-v);
  for (std::size_t c = 0; c < sys.colours(); ++c) {
    const auto& s = sys.set(c);
    if (std::any_of(s.begin(), s.end(), [&](const Point& p) { return primitive_ray(p) == target; }))
      r.members.push_back(c);
  }
  return r;
}

namespace {

// Strictly one-signed generator of the dependence space, if the points form
// a positive circuit.
std::optional<std::vector<Rat>> circuit_coefficients(std::span<const Point> pts) {
  if (pts.size() < 2) return std::nullopt;
  const std::size_t dim = pts.front().dim();
  require_dim(pts, dim, "positive circuit");
  auto null = nullspace(RMatrix::from_columns(pts));
  if (null.size() != 1) return std::nullopt;
  Point lambda = primitive_ray(null.front());
  int s = sign(lambda[0]);
  if (s == 0) return std::nullopt;
  for (const auto& c : lambda)
    if (sign(c) != s) return std::nullopt;
  if (s < 0) lambda = -lambda;
  return lambda.coords();
}

}  // namespace

bool is_positive_circuit(std::span<const Point> points) { return circuit_coefficients(points).has_value(); }

std::optional<PositiveCircuit> find_positive_circuit(std::span<const Point> a) {
  // Every proper subset of a positive circuit is linearly independent, so the
  // preorder walk only extends independent sets.
  std::vector<std::size_t> current;
  std::vector<Point> pts;
  std::optional<PositiveCircuit> found;
  std::function<void(std::size_t)> dfs = [&](std::size_t next) {
    for (std::size_t j = next; j < a.size() && !found; ++j) {
      current.push_back(j);
      pts.push_back(a[j]);
      if (rank(pts) == pts.size()) {
        dfs(j + 1);
      } else if (auto lambda = circuit_coefficients(pts)) {
        found = PositiveCircuit{current, pts, *lambda};
      }
      current.pop_back();
      pts.pop_back();
    }
  };
  dfs(0);
  return found;
}

PositiveCircuit positive_circuit(std::span<const Point> a) {
  if (a.empty()) throw std::invalid_argument("positive_circuit: empty set");
  auto r = spans_space(a, a.front().dim());
  if (auto* w = std::get_if<FarkasWitness>(&r)) throw NotSpanning(*w);
  auto c = find_positive_circuit(a);
  if (!c) throw std::logic_error("positive_circuit: spanning set without positive dependence");
  return *std::move(c);
}

HallResult hall_sdr(std::span<const std::vector<std::size_t>> family, std::size_t universe_size) {
  for (const auto& s : family)
    for (auto e : s)
      if (e >= universe_size) throw std::invalid_argument("hall_sdr: element outside the universe");

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(universe_size, none);  // element -> set
  std::vector<bool> seen_elem;
  std::vector<std::size_t> reached;

  std::function<bool(std::size_t)> augment = [&](std::size_t set) -> bool {
    reached.push_back(set);
    for (auto e : family[set]) {
      if (seen_elem[e]) continue;
      seen_elem[e] = true;
      if (owner[e] == none || augment(owner[e])) {
        owner[e] = set;
        return true;
      }
    }
    return false;
  };

  for (std::size_t j = 0; j < family.size(); ++j) {
    seen_elem.assign(universe_size, false);
    reached.clear();
    if (!augment(j)) {
      std::sort(reached.begin(), reached.end());
      reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
      return {std::nullopt, reached};
    }
  }
  std::vector<std::size_t> reps(family.size());
  for (std::size_t e = 0; e < universe_size; ++e)
    if (owner[e] != none) reps[owner[e]] = e;
  return {reps, {}};
}

Projection project_complement(std::span<const Point> points, std::span<const Point> l_basis, std::size_t dim) {
  require_dim(points, dim, "project_complement");
  require_dim(l_basis, dim, "project_complement");
  if (!l_basis.empty() && rank(l_basis) != l_basis.size())
    throw std::invalid_argument("project_complement: subspace basis is linearly dependent");

  std::vector<Point> ortho;
  auto residual = [&](Point x) {
    for (const auto& q : ortho) x -= (dot(x, q) / squared_norm(q)) * q;
    return x;
  };
  for (const auto& b : l_basis) ortho.push_back(residual(b));
  Projection out;
  for (std::size_t i = 0; i < dim; ++i) {
    Point u = residual(Point::unit(dim, i));
    if (u.is_zero()) continue;
    u = primitive_ray(u);
    ortho.push_back(u);
    out.frame.push_back(std::move(u));
  }
  for (const auto& x : points) {
    Point img(out.frame.size());
    for (std::size_t k = 0; k < out.frame.size(); ++k) img[k] = dot(x, out.frame[k]) / squared_norm(out.frame[k]);
    out.zero_image.push_back(img.is_zero());
    out.images.push_back(std::move(img));
  }
  return out;
}

std::optional<BCase> detect_bcase(const ColourSystem& sys) {
  auto witness = basis_case(sys.set(0));
  if (!witness) return std::nullopt;
  auto rays = ray_set(sys.set(0));
  for (std::size_t c = 1; c < sys.colours(); ++c)
    if (ray_set(sys.set(c)) != rays) return std::nullopt;
  BCase out;
  for (auto i : witness->basis) out.basis.push_back(sys.set(0)[i]);
  return out;
}

std::optional<PCase> detect_pcase(const ColourSystem& sys) {
  const std::size_t d = sys.dim();
  const auto& first = sys.set(0);
  // F in order of first appearance in X_1, one point per ray.
  std::vector<Point> f;
  std::set<Point> f_rays;
  for (const auto& p : first)
    if (f_rays.insert(primitive_ray(p)).second) f.push_back(p);
  if (f.size() != d + 1) return std::nullopt;
  auto lambda = circuit_coefficients(f);
  if (!lambda || rank(f) != d) return std::nullopt;

  auto neg = negated(f_rays);
  PCase out{f, *lambda, {}, {}};
  if (neg == f_rays) {
    // Only in d = 1, where F = -F = {+1, -1}.
    for (std::size_t c = 0; c < sys.colours(); ++c)
      if (ray_set(sys.set(c)) != f_rays) return std::nullopt;
    out.plus_colours = {0};
    out.minus_colours = {1};
    return out;
  }
  for (std::size_t c = 0; c < sys.colours(); ++c) {
    auto rays = ray_set(sys.set(c));
    if (rays == f_rays) {
      out.plus_colours.push_back(c);
    } else if (rays == neg) {
      out.minus_colours.push_back(c);
    } else {
      return std::nullopt;
    }
  }
  if (out.plus_colours.size() != d || out.minus_colours.size() != d) return std::nullopt;
  return out;
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Exhaustive: return "exhaustive";
    case Branch::AntipodeCount: return "antipode-count";
    case Branch::CircuitSubspace: return "circuit-subspace";
    case Branch::CircuitFull: return "circuit-full";
    case Branch::AntipodalRecursion: return "antipodal-recursion";
    case Branch::AntipodalLift: return "antipodal-lift";
    case Branch::Fallback: return "fallback";
  }
  return "?";
}

Transversal trim_spanning(const ColourSystem& sys, Transversal t) {
  const std::size_t d = sys.dim();
  for (std::size_t k = 0; k < t.picks.size();) {
    Transversal fewer = t;
    fewer.picks.erase(fewer.picks.begin() + static_cast<long>(k));
    if (spans(fewer.points(sys), d)) {
      t = std::move(fewer);
    } else {
      ++k;
    }
  }
  return t;
}

namespace {

// A colour system built from projected sets, remembering which original
// element each projected point came from.
struct ProjectedSystem {
  std::vector<std::size_t> colours;                // original colour of each sub colour
  std::vector<std::vector<std::size_t>> origin;    // sub element -> original element
  std::optional<ColourSystem> system;
};

ProjectedSystem project_colours(const ColourSystem& sys, const std::vector<std::size_t>& colours,
                                std::span<const Point> l_basis) {
  ProjectedSystem out;
  out.colours = colours;
  std::vector<std::vector<Point>> sets;
  std::size_t sub_dim = 0;
  for (auto c : colours) {
    auto proj = project_complement(sys.set(c), l_basis, sys.dim());
    sub_dim = proj.frame.size();
    std::vector<Point> pts;
    std::vector<std::size_t> from;
    for (std::size_t e = 0; e < proj.images.size(); ++e) {
      if (proj.zero_image[e]) continue;
      pts.push_back(primitive_ray(proj.images[e]));
      from.push_back(e);
    }
    sets.push_back(std::move(pts));
    out.origin.push_back(std::move(from));
  }
  for (std::size_t k = 0; k < sets.size(); ++k)
    if (sets[k].empty() || !spans(sets[k], sub_dim))
      throw RecursionInvariantViolation("projected set " + std::to_string(colours[k] + 1) +
                                        " does not span the complement");
  out.system.emplace(sub_dim, std::move(sets));
  return out;
}

Transversal lift(const ProjectedSystem& ps, const Transversal& sub) {
  Transversal t;
  for (const auto& p : sub.picks) t.picks.push_back({ps.colours[p.colour], ps.origin[p.colour][p.element]});
  return t;
}

class SmallTransversalSearch {
 public:
  explicit SmallTransversalSearch(const SearchOptions& opts) : opts_(opts) {}

  SmallTransversalResult run(const ColourSystem& sys) {
    if (auto b = detect_bcase(sys)) return *b;
    if (auto p = detect_pcase(sys)) return *p;
    const std::size_t d = sys.dim();
    if (d <= 2) {
      if (auto s = exhaustive(sys, Branch::Exhaustive)) return *s;
      throw RecursionInvariantViolation("no spanning (2d-1)-transversal although the system is not structural");
    }
    if (auto s = antipode_count(sys)) return *s;

    bool antipodal = false;
    for (std::size_t i = 0; i < sys.colours() && !antipodal; ++i)
      for (const auto& x : sys.set(i))
        if (find_ray(sys.set(i), -x)) antipodal = true;

    if (antipodal) {
      for (std::size_t i = 0; i < sys.colours(); ++i) {
        for (std::size_t e = 0; e < sys.set(i).size(); ++e) {
          const Point& v = sys.set(i)[e];
          if (!find_ray(sys.set(i), -v)) continue;
          for (std::size_t j = 0; j < sys.colours(); ++j) {
            if (j == i || !find_ray(sys.set(j), v) || !find_ray(sys.set(j), -v)) continue;
            if (auto s = antipodal_pair(sys, i, j, v)) return *s;
          }
        }
      }
    } else {
      std::vector<std::size_t> hosts{sys.colours() - 1};
      for (std::size_t c = 0; c + 1 < sys.colours(); ++c) hosts.push_back(c);
      for (auto host : hosts)
        if (auto s = circuit(sys, host)) return *s;
    }

    if (auto s = exhaustive(sys, Branch::Fallback)) return *s;
    throw RecursionInvariantViolation("no spanning (2d-1)-transversal although the system is not structural");
  }

 private:
  SmallTransversal finish(const ColourSystem& sys, Transversal t, Branch branch) const {
    sort_by_colour(t);
    if (!t.well_formed(sys) || !spans(t.points(sys), sys.dim()))
      throw RecursionInvariantViolation("constructed transversal (" + to_string(branch) + ") does not span");
    t = trim_spanning(sys, std::move(t));
    if (t.size() + 1 > 2 * sys.dim())
      throw RecursionInvariantViolation("constructed transversal (" + to_string(branch) + ") is not small");
    auto cert = std::get<SpanCertificate>(spans_space(t.points(sys), sys.dim()));
    return {std::move(t), std::move(cert), branch};
  }

  std::optional<SmallTransversal> exhaustive(const ColourSystem& sys, Branch branch) const {
    auto t = smallest_spanning_partial(sys, 2 * sys.dim() - 1, OracleOptions{opts_.budget});
    if (!t) return std::nullopt;
    return finish(sys, *t, branch);
  }

  // Some x in X_i whose antipode lies in fewer than d other colours: take d
  // independent points including x on a colour set I containing those
  // colours, aim -v (v inside their cone) at the other d colours, and drop a
  // point from the resulting spanning 2d-transversal.
  std::optional<SmallTransversal> antipode_count(const ColourSystem& sys) const {
    const std::size_t d = sys.dim();
    for (std::size_t i = 0; i < sys.colours(); ++i) {
      for (std::size_t e = 0; e < sys.set(i).size(); ++e) {
        const Point& x = sys.set(i)[e];
        std::vector<std::size_t> others;
        for (auto c : p_set(x, sys).members)
          if (c != i) others.push_back(c);
        if (others.size() >= d) continue;

        std::vector<std::size_t> chosen{i};
        chosen.insert(chosen.end(), others.begin(), others.end());
        for (std::size_t c = 0; chosen.size() < d; ++c)
          if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);

        Transversal t;
        t.picks.push_back({i, e});
        std::vector<Point> basis{x};
        for (std::size_t k = 1; k < chosen.size(); ++k) {
          const auto& s = sys.set(chosen[k]);
          std::optional<std::size_t> pick;
          for (std::size_t el = 0; el < s.size() && !pick; ++el)
            if (!in_linear_hull(s[el], basis)) pick = el;
          if (!pick) throw RecursionInvariantViolation("spanning set inside a proper subspace");
          t.picks.push_back({chosen[k], *pick});
          basis.push_back(s[*pick]);
        }
        Point v(d);
        for (const auto& b : basis) v += b;

        std::vector<std::size_t> rest;
        std::vector<std::vector<Point>> rest_sets;
        for (std::size_t c = 0; c < sys.colours(); ++c) {
          if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
          rest.push_back(c);
          rest_sets.push_back(sys.set(c));
        }
        auto cc = colorful_cone_caratheodory(-v, rest_sets);
        for (std::size_t k = 0; k < rest.size(); ++k) t.picks.push_back({rest[k], cc.picks[k]});
        return finish(sys, std::move(t), Branch::AntipodeCount);
      }
    }
    return std::nullopt;
  }

  // v and -v both in X_i and X_j: project the other 2d-2 colours along v and
  // recurse in the hyperplane H = v^perp.
  std::optional<SmallTransversal> antipodal_pair(const ColourSystem& sys, std::size_t i, std::size_t j,
                                                 const Point& v) {
    const std::size_t d = sys.dim();
    std::vector<std::size_t> colours;
    for (std::size_t c = 0; c < sys.colours(); ++c)
      if (c != i && c != j) colours.push_back(c);
    std::vector<Point> line{v};
    auto ps = project_colours(sys, colours, line);
    const ColourSystem& sub = *ps.system;
    const std::size_t plus_v = *find_ray(sys.set(i), v);
    const std::size_t minus_v = *find_ray(sys.set(i), -v);

    auto result = run(sub);
    if (auto* small = std::get_if<SmallTransversal>(&result)) {
      Transversal t = lift(ps, small->transversal);
      t.picks.push_back({i, plus_v});
      t.picks.push_back({j, *find_ray(sys.set(j), -v)});
      return finish(sys, std::move(t), Branch::AntipodalRecursion);
    }

    // The projection needs all 2d-2 colours. A spanning projected
    // transversal lifts to T; T with v or -v spans unless pos T is a
    // hyperplane, and then every lift of each z_k is unique.
    auto extend = [&](const Transversal& lifted) -> std::optional<SmallTransversal> {
      for (auto el : {plus_v, minus_v}) {
        Transversal t = lifted;
        t.picks.push_back({i, el});
        if (spans(t.points(sys), d)) return finish(sys, std::move(t), Branch::AntipodalLift);
      }
      return std::nullopt;
    };
    for (const auto& z : spanning_full_transversals(sub, OracleOptions{opts_.budget})) {
      Transversal lifted = lift(ps, z);
      if (auto s = extend(lifted)) return s;
      bool alternative = false;
      for (std::size_t k = 0; k < z.picks.size(); ++k) {
        const auto& zset = sub.set(z.picks[k].colour);
        const Point& ray = zset[z.picks[k].element];
        for (std::size_t el = 0; el < zset.size(); ++el) {
          if (el == z.picks[k].element || !(zset[el] == ray)) continue;
          alternative = true;
          Transversal alt = lifted;
          alt.picks[k].element = ps.origin[z.picks[k].colour][el];
          if (auto s = extend(alt)) return s;
        }
      }
      if (alternative)
        throw RecursionInvariantViolation("projected transversal has a non-unique lift in the flat case");
    }
    return std::nullopt;
  }

  // No set contains an antipodal pair: a positive circuit of the host colour
  // spans a subspace L; distinct representatives of the P-sets supply its
  // negation, and a colourful transversal of the projections to L^perp
  // completes it.
  std::optional<SmallTransversal> circuit(const ColourSystem& sys, std::size_t host) const {
    const std::size_t d = sys.dim();
    auto circ = find_positive_circuit(sys.set(host));
    if (!circ) throw RecursionInvariantViolation("spanning set without a positive circuit");
    const std::size_t k = circ->points.size();
    if (k < 3) return std::nullopt;

    std::vector<std::vector<std::size_t>> family;
    for (const auto& a : circ->points) family.push_back(p_set(a, sys).members);
    auto hall = hall_sdr(family, sys.colours());

    Transversal t;
    if (hall.representatives) {
      const auto& reps = *hall.representatives;
      for (std::size_t m = 0; m < k; ++m)
        t.picks.push_back({reps[m], *find_ray(sys.set(reps[m]), -circ->points[m])});
    }

    if (k == d + 1) {
      if (!hall.representatives) return std::nullopt;
      return finish(sys, std::move(t), Branch::CircuitFull);
    }
    if (!hall.representatives) throw RecursionInvariantViolation("Hall condition fails for a circuit of size <= d");

    std::vector<Point> l_basis(circ->points.begin(), circ->points.end() - 1);
    std::vector<std::size_t> colours;
    for (std::size_t c = 0; c < sys.colours() && colours.size() < 2 * (d - k + 1); ++c)
      if (std::find(hall.representatives->begin(), hall.representatives->end(), c) == hall.representatives->end())
        colours.push_back(c);
    auto ps = project_colours(sys, colours, l_basis);
    auto sub = colorful_transversal(*ps.system);
    for (const auto& p : lift(ps, sub.transversal).picks) t.picks.push_back(p);
    return finish(sys, std::move(t), Branch::CircuitSubspace);
  }

  SearchOptions opts_;
};

}  // namespace

SmallTransversalResult find_small_transversal(const ColourSystem& sys, const SearchOptions& opts) {
  sys.require_spanning();
  return SmallTransversalSearch(opts).run(sys);
}

Classification classify(const ColourSystem& sys, const SearchOptions& opts) {
  auto r = find_small_transversal(sys, opts);
  if (auto* b = std::get_if<BCase>(&r)) return *b;
  if (auto* p = std::get_if<PCase>(&r)) return *p;
  auto& s = std::get<SmallTransversal>(r);
  return Neither{std::move(s.transversal), std::move(s.certificate), s.branch};
}

std::string classification_name(const Classification& c) {
  if (std::holds_alternative<BCase>(c)) return "BCase";
  if (std::holds_alternative<PCase>(c)) return "PCase";
  return "Neither";
}

}  // namespace steinitz

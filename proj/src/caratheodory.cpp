#include "steinitz/caratheodory.hpp"

#include <algorithm>

namespace steinitz {

CaratheodoryResult cone_caratheodory(const Point& v, std::span<const Point> a) {
  if (v.is_zero()) throw std::invalid_argument("cone_caratheodory: zero target");
  require_dim(a, v.dim(), "cone_caratheodory");
  // A generator on the ray of v is the smallest possible support.
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (same_ray(a[j], v)) {
      Rat scale = 0;
      for (std::size_t i = 0; i < v.dim(); ++i)
        if (sgn(a[j][i]) != 0) {
          scale = v[i] / a[j][i];
          break;
        }
      return {{j}, ConicCertificate{{j}, {scale}, v}};
    }
  }
  auto m = pos_membership(v, a);
  if (auto* w = std::get_if<FarkasWitness>(&m)) throw NotInCone(*w);
  auto cert = std::get<ConicCertificate>(std::move(m));
  return {cert.generator_indices, std::move(cert)};
}

ColourfulCaratheodoryResult colorful_cone_caratheodory(const Point& v,
                                                       std::span<const std::vector<Point>> sets) {
  if (v.is_zero()) throw std::invalid_argument("colorful_cone_caratheodory: zero target");
  const std::size_t d = v.dim();
  if (sets.size() != d)
    throw std::invalid_argument("colorful_cone_caratheodory: expected " + std::to_string(d) + " sets");
  for (std::size_t c = 0; c < d; ++c) {
    if (sets[c].empty()) throw std::invalid_argument("colorful_cone_caratheodory: empty set");
    require_dim(sets[c], d, "colorful_cone_caratheodory");
    auto m = pos_membership(v, sets[c]);
    if (auto* w = std::get_if<FarkasWitness>(&m)) throw PreconditionFailed(c, *w);
  }

  ColourfulCaratheodoryResult out;
  out.picks.assign(d, 0);
  auto current_points = [&] {
    std::vector<Point> t;
    for (std::size_t c = 0; c < d; ++c) t.push_back(sets[c][out.picks[c]]);
    return t;
  };

  std::size_t budget = 1;
  for (const auto& s : sets) budget = budget > (1u << 30) ? budget : budget * s.size();

  auto near = nearest_cone_point(v, current_points());
  out.trace.initial_sqdist = near.sqdist;
  while (sgn(near.sqdist) > 0) {
    if (out.trace.steps.size() > budget)
      throw std::logic_error("colorful_cone_caratheodory: pivot did not terminate");
    Point w = separating_witness(v, near.point).w;
    std::size_t colour = 0;
    for (std::size_t c = 0; c < d; ++c) {
      if (std::find(near.support.begin(), near.support.end(), c) == near.support.end()) {
        colour = c;
        break;
      }
    }
    const auto& set = sets[colour];
    std::size_t entering = set.size();
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (sgn(dot(w, set[j])) > 0) {
        entering = j;
        break;
      }
    }
    if (entering == set.size()) throw std::logic_error("colorful_cone_caratheodory: no improving point");
    out.picks[colour] = entering;
    auto next = nearest_cone_point(v, current_points());
    if (!(next.sqdist < near.sqdist)) throw std::logic_error("colorful_cone_caratheodory: distance did not decrease");
    out.trace.steps.push_back({colour, entering, next.sqdist});
    near = std::move(next);
  }
  out.certificate = ConicCertificate{near.support, near.coefficients, v};
  return out;
}

}  // namespace steinitz

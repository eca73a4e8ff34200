#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steinitz/colorful.hpp"
#include "steinitz/io.hpp"
#include "steinitz/oracle.hpp"
#include "steinitz/reduction.hpp"

namespace py = pybind11;
using namespace steinitz;

namespace {

py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

// Anything Fraction() accepts: int, str "p/q", Fraction. Floats are refused
// so that no binary rounding sneaks in.
Rat to_rat(py::handle h) {
  if (py::isinstance<py::float_>(h)) throw py::type_error("coordinates must be exact (int, str or Fraction)");
  return parse_rat(py::str(fraction_type()(h)).cast<std::string>());
}

py::object from_rat(const Rat& r) { return fraction_type()(to_string(r)); }

Point to_point(py::handle h) {
  std::vector<Rat> c;
  for (auto x : h) c.push_back(to_rat(x));
  return Point(std::move(c));
}

py::list from_point(const Point& p) {
  py::list out;
  for (const auto& x : p) out.append(from_rat(x));
  return out;
}

std::vector<Point> to_points(py::handle h) {
  std::vector<Point> out;
  for (auto p : h) out.push_back(to_point(p));
  return out;
}

py::list from_points(const std::vector<Point>& ps) {
  py::list out;
  for (const auto& p : ps) out.append(from_point(p));
  return out;
}

std::size_t dim_of(const std::vector<Point>& x) {
  if (x.empty()) throw py::value_error("empty point list");
  return x.front().dim();
}

ColourSystem to_system(py::handle sets) {
  std::vector<std::vector<Point>> s;
  for (auto x : sets) s.push_back(to_points(x));
  if (s.empty() || s.front().empty()) throw py::value_error("empty colour system");
  const std::size_t d = s.front().front().dim();
  return ColourSystem(d, std::move(s));
}

py::list from_sets(const std::vector<std::vector<Point>>& sets) {
  py::list out;
  for (const auto& s : sets) out.append(from_points(s));
  return out;
}

py::list from_transversal(const Transversal& t) {
  py::list out;
  for (const auto& p : t.picks) out.append(py::make_tuple(p.colour, p.element));
  return out;
}

Transversal to_transversal(py::handle h) {
  Transversal t;
  for (auto p : h) {
    auto tup = p.cast<std::pair<std::size_t, std::size_t>>();
    t.picks.push_back({tup.first, tup.second});
  }
  return t;
}

py::dict from_classification(const ColourSystem& sys, const Classification& c) {
  py::dict out;
  out["kind"] = classification_name(c);
  out["certificate"] = certify_classification(sys, c);
  if (auto* b = std::get_if<BCase>(&c)) {
    out["basis"] = from_points(b->basis);
  } else if (auto* p = std::get_if<PCase>(&c)) {
    out["f"] = from_points(p->f);
    py::list lam;
    for (const auto& x : p->circuit) lam.append(from_rat(x));
    out["circuit"] = lam;
    out["plus_colours"] = p->plus_colours;
    out["minus_colours"] = p->minus_colours;
  } else {
    const auto& n = std::get<Neither>(c);
    out["transversal"] = from_transversal(n.witness);
    out["branch"] = to_string(n.branch);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spanning, Steinitz reduction and colourful transversals over the rationals.";

  py::register_exception<NotSpanning>(m, "NotSpanning", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "spans", [](py::handle pts) {
        auto x = to_points(pts);
        return spans(x, dim_of(x));
      },
      py::arg("points"), "True iff the positive hull of the points is the whole space.");

  m.def(
      "nonspanning_witness", [](py::handle pts) -> py::object {
        auto x = to_points(pts);
        auto r = spans_space(x, dim_of(x));
        if (auto* w = std::get_if<FarkasWitness>(&r)) return from_point(w->w);
        return py::none();
      },
      py::arg("points"), "A nonzero w with <w, x> <= 0 for every point, or None when the points span.");

  m.def(
      "certify_spanning", [](py::handle pts) {
        auto x = to_points(pts);
        return certify_spanning(x, spans_space(x, dim_of(x)));
      },
      py::arg("points"));

  m.def(
      "in_cone", [](py::handle v, py::handle pts) -> py::object {
        auto x = to_points(pts);
        auto r = pos_membership(to_point(v), x);
        if (auto* c = std::get_if<ConicCertificate>(&r)) {
          py::dict out;
          for (std::size_t k = 0; k < c->generator_indices.size(); ++k)
            out[py::int_(c->generator_indices[k])] = from_rat(c->coefficients[k]);
          return out;
        }
        return py::none();
      },
      py::arg("v"), py::arg("points"), "Map index -> positive coefficient expressing v, or None.");

  m.def(
      "steinitz_reduce", [](py::handle pts) { return steinitz_reduce(to_points(pts)).subset; }, py::arg("points"),
      "Indices of a spanning subset of size at most 2d.");

  m.def(
      "refine_below_2d", [](py::handle pts) -> py::tuple {
        auto r = refine_below_2d(to_points(pts));
        if (auto* red = std::get_if<Reduction>(&r)) return py::make_tuple(std::string("reduction"), red->subset);
        return py::make_tuple(std::string("basis"), std::get<BasisCaseWitness>(r).basis);
      },
      py::arg("points"), "('reduction', indices) of size <= 2d-1, or ('basis', indices) in the signed basis case.");

  m.def(
      "colorful_transversal", [](py::handle sets) {
        return from_transversal(colorful_transversal(to_system(sets)).transversal);
      },
      py::arg("sets"), "Spanning full transversal as (colour, element) pairs, 0-based.");

  m.def(
      "classify", [](py::handle sets, std::uint64_t budget) {
        auto sys = to_system(sets);
        SearchOptions opts;
        opts.budget = budget;
        return from_classification(sys, classify(sys, opts));
      },
      py::arg("sets"), py::arg("budget") = SearchOptions{}.budget);

  m.def(
      "count_spanning_transversals", [](py::handle sets, std::uint64_t budget) {
        return count_spanning_transversals(to_system(sets), OracleOptions{budget});
      },
      py::arg("sets"), py::arg("budget") = OracleOptions{}.budget);

  m.def(
      "min_spanning_partial_size", [](py::handle sets, std::uint64_t budget) {
        return min_spanning_partial_size(to_system(sets), OracleOptions{budget});
      },
      py::arg("sets"), py::arg("budget") = OracleOptions{}.budget);

  m.def(
      "transversal_spans", [](py::handle sets, py::handle picks) {
        auto sys = to_system(sets);
        auto t = to_transversal(picks);
        if (!t.well_formed(sys)) throw py::value_error("malformed transversal");
        return spans(t.points(sys), sys.dim());
      },
      py::arg("sets"), py::arg("picks"));

  m.def(
      "generate", [](const std::string& kind, std::size_t dim, std::uint64_t seed, std::size_t size, int bound,
                     bool transform) {
        GenerateParams gp;
        gp.seed = seed;
        gp.set_size = size;
        gp.coordinate_bound = bound;
        gp.transform = transform;
        return from_sets(generate(parse_instance_kind(kind), dim, gp).sets());
      },
      py::arg("kind"), py::arg("dim"), py::arg("seed") = 0, py::arg("size") = 0, py::arg("bound") = 3,
      py::arg("transform") = false, "kind is 'BCase', 'PCase' or 'Random'.");

  m.def(
      "parse_instance", [](const std::string& text) { return from_sets(parse_instance(text).sets); },
      py::arg("text"));

  m.def(
      "emit_instance", [](py::handle sets) {
        std::vector<std::vector<Point>> s;
        for (auto x : sets) s.push_back(to_points(x));
        if (s.empty() || s.front().empty()) throw py::value_error("empty instance");
        InstanceFile inst;
        inst.dim = s.front().front().dim();
        inst.labels.assign(s.size(), "");
        inst.sets = std::move(s);
        return emit_instance(inst);
      },
      py::arg("sets"));

  m.def(
      "certify_transversal", [](py::handle sets) {
        auto sys = to_system(sets);
        auto r = colorful_transversal(sys);
        return certify_transversal(sys, r.transversal, r.certificate);
      },
      py::arg("sets"));
}

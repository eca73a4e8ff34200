#include "steinitz/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace steinitz {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string join_ids(const std::vector<std::size_t>& ids) {
  std::string s;
  for (auto id : ids) s += ' ' + std::to_string(id);
  return s;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  InstanceFile inst;
  bool have_dim = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    auto toks = tokens(line);

    if (!have_dim) {
      if (toks.size() != 2 || toks[0] != "dim") throw ParseError(lineno, "expected 'dim <d>' header");
      try {
        std::size_t used = 0;
        long d = std::stol(toks[1], &used);
        if (used != toks[1].size() || d < 1) throw std::invalid_argument("bad");
        inst.dim = static_cast<std::size_t>(d);
      } catch (const std::exception&) {
        throw ParseError(lineno, "dimension must be a positive integer");
      }
      have_dim = true;
      continue;
    }
    if (toks[0] == "set") {
      inst.sets.emplace_back();
      inst.labels.emplace_back(trim(line.substr(3)));
      continue;
    }
    if (inst.sets.empty()) throw ParseError(lineno, "point before the first 'set' line");
    if (toks.size() != inst.dim)
      throw ParseError(lineno, "dimension mismatch: point has " + std::to_string(toks.size()) +
                                   " coordinates, expected " + std::to_string(inst.dim));
    Point p(inst.dim);
    for (std::size_t i = 0; i < toks.size(); ++i) {
      try {
        p[i] = parse_rat(toks[i]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    }
    if (p.is_zero())
      throw ParseError(lineno, "zero point at set " + std::to_string(inst.sets.size()) + " index " +
                                   std::to_string(inst.sets.back().size() + 1));
    inst.sets.back().push_back(std::move(p));
  }
  if (!have_dim) throw ParseError(0, "missing 'dim <d>' header");
  for (std::size_t s = 0; s < inst.sets.size(); ++s)
    if (inst.sets[s].empty()) throw ParseError(0, "set " + std::to_string(s + 1) + " is empty");
  if (inst.sets.size() != 1 && inst.sets.size() != 2 * inst.dim)
    throw ParseError(0, "wrong set count: " + std::to_string(inst.sets.size()) + " sets, expected 1 or " +
                            std::to_string(2 * inst.dim));
  return inst;
}

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string emit_instance(const InstanceFile& inst) {
  std::string out = "dim " + std::to_string(inst.dim) + "\n";
  for (std::size_t s = 0; s < inst.sets.size(); ++s) {
    out += "set";
    if (s < inst.labels.size() && !inst.labels[s].empty()) out += " " + inst.labels[s];
    out += "\n";
    for (const auto& p : inst.sets[s]) out += to_string(p) + "\n";
  }
  return out;
}

InstanceFile to_instance(const ColourSystem& sys) {
  return InstanceFile{sys.dim(), sys.sets(), std::vector<std::string>(sys.colours())};
}

ColourSystem to_system(const InstanceFile& inst) {
  if (!inst.is_colour_system())
    throw std::invalid_argument("instance holds " + std::to_string(inst.sets.size()) + " set(s), a colour system needs " +
                                std::to_string(2 * inst.dim));
  return ColourSystem(inst.dim, inst.sets);
}

CertificateWriter::CertificateWriter(std::size_t dim) : dim_(dim) {}

std::size_t CertificateWriter::add_point(const Point& p) {
  points_ += "point " + std::to_string(next_id_) + " " + to_string(p) + "\n";
  return next_id_++;
}

std::vector<std::size_t> CertificateWriter::add_points(std::span<const Point> pts) {
  std::vector<std::size_t> ids;
  for (const auto& p : pts) ids.push_back(add_point(p));
  return ids;
}

void CertificateWriter::comment(const std::string& text) { body_ += "# " + text + "\n"; }

void CertificateWriter::span(const std::vector<std::size_t>& ids, const SpanCertificate& cert) {
  body_ += "span" + join_ids(ids) + "\n";
  for (std::size_t k = 0; k < cert.directions.size(); ++k) {
    const auto& c = cert.directions[k];
    std::size_t axis = k % dim_ + 1;
    body_ += "dir " + std::string(k < dim_ ? "+" : "-") + std::to_string(axis);
    for (std::size_t j = 0; j < c.generator_indices.size(); ++j)
      body_ += " " + std::to_string(ids[c.generator_indices[j]]) + ":" + to_string(c.coefficients[j]);
    body_ += "\n";
  }
  body_ += "end\n";
}

void CertificateWriter::nospan(const std::vector<std::size_t>& ids, const FarkasWitness& w) {
  body_ += "nospan" + join_ids(ids) + "\nw = " + to_string(w.w) + "\nend\n";
}

void CertificateWriter::member(const std::vector<std::size_t>& ids, const ConicCertificate& cert) {
  body_ += "member" + join_ids(ids) + "\ntarget = " + to_string(cert.target) + "\ncombo";
  for (std::size_t j = 0; j < cert.generator_indices.size(); ++j)
    body_ += " " + std::to_string(ids[cert.generator_indices[j]]) + ":" + to_string(cert.coefficients[j]);
  body_ += "\nend\n";
}

void CertificateWriter::nonmember(const std::vector<std::size_t>& ids, const Point& target, const FarkasWitness& w) {
  body_ += "nonmember" + join_ids(ids) + "\ntarget = " + to_string(target) + "\nw = " + to_string(w.w) + "\nend\n";
}

void CertificateWriter::circuit(const std::vector<std::size_t>& ids, const std::vector<Rat>& coefficients) {
  body_ += "circuit" + join_ids(ids) + "\nlambda";
  for (const auto& c : coefficients) body_ += " " + to_string(c);
  body_ += "\nend\n";
}

void CertificateWriter::pick(std::size_t colour, std::size_t element, std::size_t id) {
  body_ += "pick " + std::to_string(colour) + " " + std::to_string(element) + " " + std::to_string(id) + "\n";
}

void CertificateWriter::transversal(const std::vector<std::size_t>& ids) { body_ += "transversal" + join_ids(ids) + "\n"; }

void CertificateWriter::bcase(const std::vector<std::size_t>& basis_ids) {
  body_ += "bcase" + join_ids(basis_ids) + "\nend\n";
}

void CertificateWriter::pcase(const std::vector<std::size_t>& f_ids, const std::vector<Rat>& circuit,
                              const std::vector<std::size_t>& plus_colours,
                              const std::vector<std::size_t>& minus_colours) {
  body_ += "pcase" + join_ids(f_ids) + "\nlambda";
  for (const auto& c : circuit) body_ += " " + to_string(c);
  body_ += "\nplus" + join_ids(plus_colours) + "\nminus" + join_ids(minus_colours) + "\nend\n";
}

std::string CertificateWriter::str() const {
  return "steinitz-certificate 1\ndim " + std::to_string(dim_) + "\n" + points_ + body_;
}

namespace {

std::vector<std::size_t> add_set(CertificateWriter& w, std::span<const Point> x, std::size_t colour) {
  std::vector<std::size_t> ids;
  for (std::size_t e = 0; e < x.size(); ++e) {
    ids.push_back(w.add_point(x[e]));
    w.pick(colour + 1, e + 1, ids.back());
  }
  return ids;
}

std::size_t dim_of(std::span<const Point> x) {
  if (x.empty()) throw std::invalid_argument("certificate: empty point set");
  return x.front().dim();
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto c : v) out.push_back(c + 1);
  return out;
}

}  // namespace

std::string certify_spanning(std::span<const Point> x, const SpanResult& r) {
  CertificateWriter w(dim_of(x));
  auto ids = add_set(w, x, 0);
  if (auto* c = std::get_if<SpanCertificate>(&r)) {
    w.span(ids, *c);
  } else {
    w.nospan(ids, std::get<FarkasWitness>(r));
  }
  return w.str();
}

std::string certify_spanning_sets(const std::vector<std::vector<Point>>& sets, const std::vector<SpanResult>& results) {
  if (sets.empty() || sets.size() != results.size()) throw std::invalid_argument("certificate: one result per set");
  CertificateWriter w(dim_of(sets.front()));
  for (std::size_t c = 0; c < sets.size(); ++c) {
    auto ids = add_set(w, sets[c], c);
    if (auto* s = std::get_if<SpanCertificate>(&results[c])) {
      w.span(ids, *s);
    } else {
      w.nospan(ids, std::get<FarkasWitness>(results[c]));
    }
  }
  return w.str();
}

std::string certify_reduction(std::span<const Point> x, const Reduction& r) {
  CertificateWriter w(dim_of(x));
  auto ids = add_set(w, x, 0);
  std::vector<std::size_t> sub;
  for (auto i : r.subset) sub.push_back(ids[i]);
  w.span(sub, r.certificate);
  return w.str();
}

std::string certify_refinement(std::span<const Point> x, const Refinement& r) {
  if (auto* red = std::get_if<Reduction>(&r)) return certify_reduction(x, *red);
  CertificateWriter w(dim_of(x));
  auto ids = add_set(w, x, 0);
  std::vector<std::size_t> basis;
  for (auto i : std::get<BasisCaseWitness>(r).basis) basis.push_back(ids[i]);
  w.bcase(basis);
  return w.str();
}

std::string certify_transversal(const ColourSystem& sys, const Transversal& t, const SpanCertificate& cert) {
  CertificateWriter w(sys.dim());
  std::vector<std::size_t> ids;
  for (const auto& p : t.picks) {
    ids.push_back(w.add_point(sys.set(p.colour)[p.element]));
    w.pick(p.colour + 1, p.element + 1, ids.back());
  }
  w.transversal(ids);
  w.span(ids, cert);
  return w.str();
}

std::string certify_classification(const ColourSystem& sys, const Classification& c) {
  if (auto* n = std::get_if<Neither>(&c)) return certify_transversal(sys, n->witness, n->certificate);
  CertificateWriter w(sys.dim());
  if (auto* b = std::get_if<BCase>(&c)) {
    w.bcase(w.add_points(b->basis));
  } else {
    const auto& p = std::get<PCase>(c);
    auto ids = w.add_points(p.f);
    w.pcase(ids, p.circuit, one_based(p.plus_colours), one_based(p.minus_colours));
  }
  return w.str();
}

std::string certify_circuit(std::span<const Point> a, const PositiveCircuit& c) {
  CertificateWriter w(dim_of(a));
  auto ids = add_set(w, a, 0);
  std::vector<std::size_t> sub;
  for (auto i : c.indices) sub.push_back(ids[i]);
  w.circuit(sub, c.coefficients);
  return w.str();
}

std::string certify_membership(std::span<const Point> a, const Point& v, const Membership& m) {
  CertificateWriter w(dim_of(a));
  auto ids = add_set(w, a, 0);
  if (auto* c = std::get_if<ConicCertificate>(&m)) {
    w.member(ids, *c);
  } else {
    w.nonmember(ids, v, std::get<FarkasWitness>(m));
  }
  return w.str();
}

namespace {

const char* kPalette[] = {"#1f4e9e", "#c0392b", "#2e8b57", "#d35400", "#7d3c98", "#117a8b", "#b7950b", "#5d6d7e"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string plot_svg(const InstanceFile& inst, const std::optional<Transversal>& highlight) {
  if (inst.dim != 2) throw std::invalid_argument("plot: only planar (dim 2) instances can be drawn");
  const double size = 400, centre = size / 2, radius = 170;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" + fmt(size + 20 * inst.sets.size()) +
                    "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size + 20 * inst.sets.size()) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<line x1=\"0\" y1=\"" + fmt(centre) + "\" x2=\"" + fmt(size) + "\" y2=\"" + fmt(centre) +
         "\" stroke=\"#dddddd\"/>\n";
  svg += "<line x1=\"" + fmt(centre) + "\" y1=\"0\" x2=\"" + fmt(centre) + "\" y2=\"" + fmt(size) +
         "\" stroke=\"#dddddd\"/>\n";
  const std::size_t n = inst.sets.size();
  for (std::size_t s = 0; s < n; ++s) {
    const char* colour = kPalette[s % (sizeof kPalette / sizeof *kPalette)];
    // Sets sharing a ray stay visible because each set gets its own length.
    double len = radius * (1.0 - 0.6 * static_cast<double>(s) / static_cast<double>(n));
    for (std::size_t e = 0; e < inst.sets[s].size(); ++e) {
      const auto& p = inst.sets[s][e];
      double x = p[0].get_d(), y = p[1].get_d();
      double norm = std::hypot(x, y);
      double ex = centre + len * x / norm, ey = centre - len * y / norm;
      bool bold = false;
      if (highlight)
        for (const auto& pk : highlight->picks) bold = bold || (pk.colour == s && pk.element == e);
      svg += "<line x1=\"" + fmt(centre) + "\" y1=\"" + fmt(centre) + "\" x2=\"" + fmt(ex) + "\" y2=\"" + fmt(ey) +
             "\" stroke=\"" + colour + "\" stroke-width=\"" + (bold ? "4" : "1.5") + "\"/>\n";
      svg += "<circle cx=\"" + fmt(ex) + "\" cy=\"" + fmt(ey) + "\" r=\"" + (bold ? "5" : "3") + "\" fill=\"" +
             colour + "\"/>\n";
    }
    std::string label = s < inst.labels.size() && !inst.labels[s].empty() ? inst.labels[s] : "X" + std::to_string(s + 1);
    svg += "<text x=\"10\" y=\"" + fmt(size + 15 + 20 * static_cast<double>(s)) + "\" fill=\"" + colour +
           "\" font-family=\"sans-serif\" font-size=\"13\">" + label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace steinitz

#include "certcheck.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace certcheck {

namespace {

using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;
using Vec = std::vector<Q>;

struct Failure {
  std::size_t line;
  std::string message;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) { throw Failure{line, msg}; }

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    for (char& ch : raw)
      if (ch == ',') ch = ' ';
    std::istringstream ws(raw);
    Line l{number, {}};
    for (std::string w; ws >> w;) l.words.push_back(w);
    if (!l.words.empty()) out.push_back(std::move(l));
  }
  return out;
}

bool is_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Q rational(const std::string& s, std::size_t line) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+') fail(line, "bad rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Z d(den);
  if (d == 0) fail(line, "zero denominator in '" + s + "'");
  return Q(Z(num), d);
}

std::size_t index(const std::string& s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    fail(line, "bad index '" + s + "'");
  std::size_t v = std::stoul(s);
  if (v == 0) fail(line, "indices are 1-based");
  return v;
}

Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& q) { return q == 0; });
}

std::size_t rank_of(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  std::size_t n = rows[0].size(), r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Q f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

bool same_ray(const Vec& p, const Vec& q) {
  std::size_t k = 0;
  while (k < q.size() && q[k] == 0) ++k;
  if (k == q.size() || p[k] == 0) return false;
  Q t = p[k] / q[k];
  if (t <= 0) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != t * q[i]) return false;
  return true;
}

Vec negate(Vec v) {
  for (auto& x : v) x = -x;
  return v;
}

// Every point of `set` lies on a ray of `rays` and every ray is hit.
bool same_rays(const std::vector<Vec>& set, const std::vector<Vec>& rays) {
  std::vector<bool> hit(rays.size(), false);
  for (const auto& p : set) {
    bool found = false;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (same_ray(p, rays[r])) hit[r] = found = true;
    if (!found) return false;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

struct Instance {
  std::size_t dim = 0;
  std::vector<std::vector<Vec>> sets;
};

Instance parse_instance(std::string_view text) {
  Instance inst;
  for (const auto& l : split_lines(text)) {
    if (inst.dim == 0) {
      if (l.words.size() != 2 || l.words[0] != "dim") fail(l.number, "instance: expected 'dim <d>'");
      inst.dim = index(l.words[1], l.number);
    } else if (l.words[0] == "set") {
      inst.sets.emplace_back();
    } else {
      if (inst.sets.empty() || l.words.size() != inst.dim) fail(l.number, "instance: bad point line");
      Vec p;
      for (const auto& w : l.words) p.push_back(rational(w, l.number));
      inst.sets.back().push_back(std::move(p));
    }
  }
  if (inst.dim == 0) fail(0, "instance: missing dim header");
  return inst;
}

class Checker {
 public:
  Checker(std::vector<Line> lines, std::optional<Instance> inst) : lines_(std::move(lines)), inst_(std::move(inst)) {}

  std::size_t run() {
    header();
    while (pos_ < lines_.size()) {
      const Line& l = lines_[pos_++];
      const std::string& kw = l.words[0];
      if (kw == "point") point(l);
      else if (kw == "pick") pick(l);
      else if (kw == "transversal") transversal(l);
      else if (kw == "span") span(l);
      else if (kw == "nospan") nospan(l);
      else if (kw == "member") member(l);
      else if (kw == "nonmember") nonmember(l);
      else if (kw == "circuit") circuit(l);
      else if (kw == "bcase") bcase(l);
      else if (kw == "pcase") pcase(l);
      else fail(l.number, "unknown keyword '" + kw + "'");
    }
    if (claims_ == 0) fail(0, "certificate contains no claim");
    return claims_;
  }

 private:
  void header() {
    if (lines_.size() < 2) fail(0, "truncated certificate");
    const auto& h = lines_[0];
    if (h.words.size() != 2 || h.words[0] != "steinitz-certificate" || h.words[1] != "1")
      fail(h.number, "expected 'steinitz-certificate 1'");
    const auto& d = lines_[1];
    if (d.words.size() != 2 || d.words[0] != "dim") fail(d.number, "expected 'dim <d>'");
    dim_ = index(d.words[1], d.number);
    if (inst_ && inst_->dim != dim_) fail(d.number, "dimension differs from the instance");
    pos_ = 2;
  }

  Vec vector_from(const Line& l, std::size_t first) {
    if (l.words.size() != first + dim_) fail(l.number, "expected " + std::to_string(dim_) + " coordinates");
    Vec v;
    for (std::size_t i = first; i < l.words.size(); ++i) v.push_back(rational(l.words[i], l.number));
    return v;
  }

  std::vector<std::size_t> ids_from(const Line& l, std::size_t first) {
    std::vector<std::size_t> ids;
    for (std::size_t i = first; i < l.words.size(); ++i) {
      auto id = index(l.words[i], l.number);
      if (!points_.count(id)) fail(l.number, "unknown point id " + std::to_string(id));
      ids.push_back(id);
    }
    return ids;
  }

  const Line& next(const std::string& keyword) {
    if (pos_ >= lines_.size()) fail(0, "unexpected end, wanted '" + keyword + "'");
    const Line& l = lines_[pos_++];
    if (l.words[0] != keyword) fail(l.number, "expected '" + keyword + "'");
    return l;
  }

  // Parses "id:coef" terms, checks ids are in `allowed` and coefs >= 0.
  Vec combination(const Line& l, std::size_t first, const std::vector<std::size_t>& allowed) {
    Vec sum(dim_, Q(0));
    for (std::size_t i = first; i < l.words.size(); ++i) {
      const auto& w = l.words[i];
      auto colon = w.find(':');
      if (colon == std::string::npos) fail(l.number, "expected id:coef, got '" + w + "'");
      auto id = index(w.substr(0, colon), l.number);
      if (std::find(allowed.begin(), allowed.end(), id) == allowed.end())
        fail(l.number, "id " + std::to_string(id) + " is not a generator of this claim");
      Q c = rational(w.substr(colon + 1), l.number);
      if (c < 0) fail(l.number, "negative coefficient");
      const Vec& p = points_.at(id);
      for (std::size_t k = 0; k < dim_; ++k) sum[k] += c * p[k];
    }
    return sum;
  }

  void point(const Line& l) {
    if (l.words.size() < 2) fail(l.number, "bad point line");
    auto id = index(l.words[1], l.number);
    if (points_.count(id)) fail(l.number, "duplicate point id");
    Vec v = vector_from(l, 2);
    if (is_zero(v)) fail(l.number, "zero point");
    points_.emplace(id, std::move(v));
  }

  void pick(const Line& l) {
    if (l.words.size() != 4) fail(l.number, "expected 'pick <colour> <element> <id>'");
    auto colour = index(l.words[1], l.number);
    auto element = index(l.words[2], l.number);
    auto id = ids_from(l, 3).front();
    if (picks_.count(id)) fail(l.number, "point picked twice");
    if (inst_) {
      if (colour > inst_->sets.size() || element > inst_->sets[colour - 1].size())
        fail(l.number, "pick outside the instance");
      if (inst_->sets[colour - 1][element - 1] != points_.at(id)) fail(l.number, "pick differs from the instance point");
    }
    picks_[id] = colour;
  }

  void transversal(const Line& l) {
    std::set<std::size_t> colours;
    for (auto id : ids_from(l, 1)) {
      auto it = picks_.find(id);
      if (it == picks_.end()) fail(l.number, "transversal point without a pick");
      if (!colours.insert(it->second).second) fail(l.number, "two points of the same colour");
    }
    ++claims_;
  }

  void span(const Line& l) {
    auto ids = ids_from(l, 1);
    std::set<std::string> seen;
    for (;;) {
      if (pos_ >= lines_.size()) fail(l.number, "span block without 'end'");
      const Line& d = lines_[pos_++];
      if (d.words[0] == "end") break;
      if (d.words[0] != "dir" || d.words.size() < 2) fail(d.number, "expected 'dir'");
      const std::string& dir = d.words[1];
      if (dir.size() < 2 || (dir[0] != '+' && dir[0] != '-')) fail(d.number, "bad direction '" + dir + "'");
      auto axis = index(dir.substr(1), d.number);
      if (axis > dim_) fail(d.number, "axis out of range");
      if (!seen.insert(dir).second) fail(d.number, "direction repeated");
      Vec target(dim_, Q(0));
      target[axis - 1] = dir[0] == '+' ? 1 : -1;
      if (combination(d, 2, ids) != target) fail(d.number, "combination does not equal " + dir);
    }
    if (seen.size() != 2 * dim_) fail(l.number, "span needs all 2d directions");
    ++claims_;
  }

  void nospan(const Line& l) {
    auto ids = ids_from(l, 1);
    const Line& wl = next("w");
    if (wl.words.size() < 2 || wl.words[1] != "=") fail(wl.number, "expected 'w = ...'");
    Vec w = vector_from(wl, 2);
    if (is_zero(w)) fail(wl.number, "zero witness");
    for (auto id : ids)
      if (dot(w, points_.at(id)) > 0) fail(wl.number, "witness has positive product with point " + std::to_string(id));
    next("end");
    ++claims_;
  }

  Vec assignment(const std::string& name) {
    const Line& t = next(name);
    if (t.words.size() < 2 || t.words[1] != "=") fail(t.number, "expected '" + name + " = ...'");
    return vector_from(t, 2);
  }

  void member(const Line& l) {
    auto ids = ids_from(l, 1);
    Vec target = assignment("target");
    const Line& c = next("combo");
    if (combination(c, 1, ids) != target) fail(c.number, "combination does not equal the target");
    next("end");
    ++claims_;
  }

  void nonmember(const Line& l) {
    auto ids = ids_from(l, 1);
    Vec target = assignment("target");
    Vec w = assignment("w");
    if (dot(w, target) <= 0) fail(l.number, "witness does not separate the target");
    for (auto id : ids)
      if (dot(w, points_.at(id)) > 0) fail(l.number, "witness has positive product with point " + std::to_string(id));
    next("end");
    ++claims_;
  }

  // Strictly positive dependence whose support has nullity one.
  void positive_dependence(const Line& at, const std::vector<std::size_t>& ids, const Line& lam) {
    if (lam.words.size() != ids.size() + 1) fail(lam.number, "one coefficient per point expected");
    Vec sum(dim_, Q(0));
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      Q c = rational(lam.words[i + 1], lam.number);
      if (c <= 0) fail(lam.number, "coefficients must be strictly positive");
      const Vec& p = points_.at(ids[i]);
      for (std::size_t k = 0; k < dim_; ++k) sum[k] += c * p[k];
      rows.push_back(p);
    }
    if (!is_zero(sum)) fail(lam.number, "dependence does not sum to zero");
    if (rank_of(rows) + 1 != ids.size()) fail(at.number, "support is not minimal");
  }

  void circuit(const Line& l) {
    auto ids = ids_from(l, 1);
    positive_dependence(l, ids, next("lambda"));
    next("end");
    ++claims_;
  }

  std::vector<std::size_t> colours(const Line& l) {
    std::vector<std::size_t> c;
    for (std::size_t i = 1; i < l.words.size(); ++i) c.push_back(index(l.words[i], l.number));
    return c;
  }

  void bcase(const Line& l) {
    auto ids = ids_from(l, 1);
    std::vector<Vec> basis;
    for (auto id : ids) basis.push_back(points_.at(id));
    if (basis.size() != dim_ || rank_of(basis) != dim_) fail(l.number, "bcase needs a basis");
    if (inst_) {
      std::vector<Vec> rays = basis;
      for (const auto& b : basis) rays.push_back(negate(b));
      for (std::size_t s = 0; s < inst_->sets.size(); ++s)
        if (!same_rays(inst_->sets[s], rays)) fail(l.number, "set " + std::to_string(s + 1) + " is not {±b}");
      if (inst_->sets.size() != 1 && inst_->sets.size() != 2 * dim_) fail(l.number, "wrong number of sets");
    }
    next("end");
    ++claims_;
  }

  void pcase(const Line& l) {
    auto ids = ids_from(l, 1);
    if (ids.size() != dim_ + 1) fail(l.number, "pcase needs d+1 points");
    positive_dependence(l, ids, next("lambda"));
    std::vector<Vec> f;
    for (auto id : ids) f.push_back(points_.at(id));
    if (rank_of(f) != dim_) fail(l.number, "F does not span");
    const Line& pl = next("plus");
    const Line& ml = next("minus");
    auto plus = colours(pl), minus = colours(ml);
    std::set<std::size_t> all(plus.begin(), plus.end());
    all.insert(minus.begin(), minus.end());
    if (plus.size() != dim_ || minus.size() != dim_ || all.size() != 2 * dim_ || *all.rbegin() != 2 * dim_)
      fail(pl.number, "plus and minus must split colours 1..2d in halves");
    if (inst_) {
      if (inst_->sets.size() != 2 * dim_) fail(l.number, "instance is not a colour system");
      std::vector<Vec> neg;
      for (const auto& p : f) neg.push_back(negate(p));
      for (auto c : plus)
        if (!same_rays(inst_->sets[c - 1], f)) fail(pl.number, "set " + std::to_string(c) + " is not F");
      for (auto c : minus)
        if (!same_rays(inst_->sets[c - 1], neg)) fail(ml.number, "set " + std::to_string(c) + " is not -F");
    }
    next("end");
    ++claims_;
  }

  std::vector<Line> lines_;
  std::optional<Instance> inst_;
  std::size_t pos_ = 0;
  std::size_t dim_ = 0;
  std::size_t claims_ = 0;
  std::map<std::size_t, Vec> points_;
  std::map<std::size_t, std::size_t> picks_;
};

}  // namespace

Report check(std::string_view certificate, std::optional<std::string_view> instance_text) {
  Report r;
  try {
    std::optional<Instance> inst;
    if (instance_text) inst = parse_instance(*instance_text);
    Checker c(split_lines(certificate), std::move(inst));
    r.claims = c.run();
    r.ok = true;
  } catch (const Failure& f) {
    r.line = f.line;
    r.message = f.message;
  }
  return r;
}

}  // namespace certcheck

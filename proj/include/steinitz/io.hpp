// Instance files, textual certificates and SVG plots.
//
// Instance format (one point per line, '#' starts a comment):
//
//   dim 2
//   set optional label
//   1 0
//   -1/2 0
//   set
//   ...
//
// Coordinates are rationals "p/q" or "p", separated by whitespace or
// commas. A file holds either one set (a plain spanning set) or 2*dim sets (a
// colour system).
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "steinitz/colorful.hpp"
#include "steinitz/reduction.hpp"

namespace steinitz {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line(line) {}
  std::size_t line;  ///< 1-based; 0 when the error concerns the whole file
};

struct InstanceFile {
  std::size_t dim = 0;
  std::vector<std::vector<Point>> sets;
  std::vector<std::string> labels;  ///< one per set, possibly empty

  bool is_colour_system() const { return sets.size() == 2 * dim; }
  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

InstanceFile parse_instance(std::string_view text);
InstanceFile read_instance(const std::string& path);
std::string emit_instance(const InstanceFile& inst);

InstanceFile to_instance(const ColourSystem& sys);
/// Throws std::invalid_argument unless the file holds 2*dim sets.
ColourSystem to_system(const InstanceFile& inst);

/// Builds the certificate text. Points get 1-based ids in insertion order;
/// each claim block refers to them by id, so the result can be checked with
/// nothing but rational arithmetic.
class CertificateWriter {
 public:
  explicit CertificateWriter(std::size_t dim);

  std::size_t add_point(const Point& p);
  std::vector<std::size_t> add_points(std::span<const Point> pts);

  void comment(const std::string& text);
  /// cert's generator indices are positions in `ids`.
  void span(const std::vector<std::size_t>& ids, const SpanCertificate& cert);
  void nospan(const std::vector<std::size_t>& ids, const FarkasWitness& w);
  void member(const std::vector<std::size_t>& ids, const ConicCertificate& cert);
  void nonmember(const std::vector<std::size_t>& ids, const Point& target, const FarkasWitness& w);
  void circuit(const std::vector<std::size_t>& ids, const std::vector<Rat>& coefficients);
  /// 1-based colour and element of an instance point given by id.
  void pick(std::size_t colour, std::size_t element, std::size_t id);
  /// Claims the ids were picked from pairwise distinct colours.
  void transversal(const std::vector<std::size_t>& ids);
  void bcase(const std::vector<std::size_t>& basis_ids);
  void pcase(const std::vector<std::size_t>& f_ids, const std::vector<Rat>& circuit,
             const std::vector<std::size_t>& plus_colours, const std::vector<std::size_t>& minus_colours);

  std::string str() const;

 private:
  std::size_t dim_;
  std::string points_;
  std::string body_;
  std::size_t next_id_ = 1;
};

// Ready-made certificates for each result type. Colour and element numbers
// are 1-based in the text.
std::string certify_spanning(std::span<const Point> x, const SpanResult& r);
/// One span or nospan claim per set.
std::string certify_spanning_sets(const std::vector<std::vector<Point>>& sets, const std::vector<SpanResult>& results);
std::string certify_reduction(std::span<const Point> x, const Reduction& r);
std::string certify_refinement(std::span<const Point> x, const Refinement& r);
std::string certify_transversal(const ColourSystem& sys, const Transversal& t, const SpanCertificate& cert);
std::string certify_classification(const ColourSystem& sys, const Classification& c);
std::string certify_circuit(std::span<const Point> a, const PositiveCircuit& c);
std::string certify_membership(std::span<const Point> a, const Point& v, const Membership& m);

/// SVG of the rays of a planar instance, colour-coded per set, with an
/// optional transversal drawn bold.
std::string plot_svg(const InstanceFile& inst, const std::optional<Transversal>& highlight = std::nullopt);

}  // namespace steinitz

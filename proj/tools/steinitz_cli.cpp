// steinitz: command-line front end.
//
// Exit status: 0 affirmative result, 1 negative structural result (for
// example a set that does not span), 2 usage, parse or budget error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "steinitz/caratheodory.hpp"
#include "steinitz/colorful.hpp"
#include "steinitz/io.hpp"
#include "steinitz/oracle.hpp"
#include "steinitz/reduction.hpp"

using namespace steinitz;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Flags {
  std::string file;
  std::string cert;
  std::string out;
  std::string format = "svg";
  std::string kind;
  std::size_t dim = 0;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  int bound = 3;
  bool trace = false;
  bool transform = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

void maybe_cert(const Flags& f, const std::string& text) {
  if (!f.cert.empty()) write_file(f.cert, text);
}

void print_picks(const ColourSystem& sys, const Transversal& t) {
  for (const auto& p : t.picks)
    std::cout << "  colour " << p.colour + 1 << " element " << p.element + 1 << ": "
              << to_string(sys.set(p.colour)[p.element]) << "\n";
}

void print_trace(const char* half, const PivotTrace& tr) {
  std::cout << "start half=" << half << " sqdist=" << to_string(tr.initial_sqdist) << "\n";
  for (const auto& s : tr.steps)
    std::cout << "pivot half=" << half << " colour=" << s.colour + 1 << " enter=" << s.entering + 1
              << " sqdist=" << to_string(s.sqdist) << "\n";
}

int cmd_verify(const Flags& f) {
  auto inst = read_instance(f.file);
  bool all = true;
  std::vector<SpanResult> results;
  for (std::size_t s = 0; s < inst.sets.size(); ++s) {
    auto r = spans_space(inst.sets[s], inst.dim);
    if (auto* w = std::get_if<FarkasWitness>(&r)) {
      all = false;
      std::cout << "set " << s + 1 << ": does not span, w = " << to_string(w->w) << "\n";
    } else {
      std::cout << "set " << s + 1 << ": spans\n";
    }
    results.push_back(std::move(r));
  }
  maybe_cert(f, certify_spanning_sets(inst.sets, results));
  std::cout << (all ? "spanning" : "not spanning") << "\n";
  return all ? kOk : kNegative;
}

void print_set(const std::vector<Point>& x, const std::vector<std::size_t>& idx) {
  for (auto i : idx) std::cout << "  " << i + 1 << ": " << to_string(x[i]) << "\n";
}

int cmd_reduce(const Flags& f, bool refine) {
  auto inst = read_instance(f.file);
  std::string cert;
  for (std::size_t s = 0; s < inst.sets.size(); ++s) {
    const auto& x = inst.sets[s];
    if (inst.sets.size() > 1) std::cout << "set " << s + 1 << "\n";
    try {
      if (!refine) {
        auto r = steinitz_reduce(x);
        std::cout << r.subset.size() << " point(s)\n";
        print_set(x, r.subset);
        if (r.subset.size() == 2 * inst.dim) std::cout << "basis case: |Y| = 2d\n";
        if (s == 0) cert = certify_reduction(x, r);
      } else {
        auto r = refine_below_2d(x);
        if (auto* red = std::get_if<Reduction>(&r)) {
          std::cout << red->subset.size() << " point(s)\n";
          print_set(x, red->subset);
        } else {
          const auto& b = std::get<BasisCaseWitness>(r);
          std::cout << "basis case: X = {±b} for the basis\n";
          print_set(x, b.basis);
        }
        if (s == 0) cert = certify_refinement(x, r);
      }
    } catch (const NotSpanning& e) {
      std::cout << "does not span, w = " << to_string(e.witness.w) << "\n";
      maybe_cert(f, certify_spanning(x, e.witness));
      return kNegative;
    }
  }
  maybe_cert(f, cert);
  return kOk;
}

ColourSystem load_system(const Flags& f, InstanceFile* keep = nullptr) {
  auto inst = read_instance(f.file);
  if (!inst.is_colour_system())
    throw UsageError("'" + f.file + "' holds " + std::to_string(inst.sets.size()) + " set(s); this command needs " +
                     std::to_string(2 * inst.dim));
  if (keep) *keep = inst;
  return to_system(inst);
}

int not_spanning(const NotSpanning& e) {
  std::cout << "set " << (e.colour ? *e.colour + 1 : 0) << " does not span, w = " << to_string(e.witness.w) << "\n";
  return kNegative;
}

int cmd_transversal(const Flags& f) {
  auto sys = load_system(f);
  try {
    ColourfulTransversalTrace tr;
    auto r = colorful_transversal(sys, &tr);
    if (f.trace) {
      print_trace("1", tr.first_half);
      print_trace("2", tr.second_half);
    }
    std::cout << "spanning transversal of size " << r.transversal.size() << "\n";
    print_picks(sys, r.transversal);
    maybe_cert(f, certify_transversal(sys, r.transversal, r.certificate));
  } catch (const NotSpanning& e) {
    return not_spanning(e);
  }
  return kOk;
}

int cmd_classify(const Flags& f) {
  auto sys = load_system(f);
  try {
    auto c = classify(sys, SearchOptions{f.budget});
    std::cout << classification_name(c) << "\n";
    if (auto* n = std::get_if<Neither>(&c)) {
      std::cout << "spanning transversal of size " << n->witness.size() << " (" << to_string(n->branch) << ")\n";
      print_picks(sys, n->witness);
    } else if (auto* b = std::get_if<BCase>(&c)) {
      for (const auto& p : b->basis) std::cout << "  basis " << to_string(p) << "\n";
    } else {
      for (const auto& p : std::get<PCase>(c).f) std::cout << "  F " << to_string(p) << "\n";
    }
    maybe_cert(f, certify_classification(sys, c));
  } catch (const NotSpanning& e) {
    return not_spanning(e);
  }
  return kOk;
}

int cmd_count(const Flags& f) {
  auto sys = load_system(f);
  std::cout << count_spanning_transversals(sys, OracleOptions{f.budget}) << "\n";
  return kOk;
}

int cmd_minsize(const Flags& f) {
  auto sys = load_system(f);
  try {
    sys.require_spanning();
  } catch (const NotSpanning& e) {
    return not_spanning(e);
  }
  auto t = smallest_spanning_partial(sys, sys.colours(), OracleOptions{f.budget});
  std::cout << t->size() << "\n";
  print_picks(sys, *t);
  return kOk;
}

int cmd_generate(const Flags& f) {
  GenerateParams p;
  p.seed = f.seed;
  p.set_size = f.size;
  p.coordinate_bound = f.bound;
  p.transform = f.transform;
  std::string text;
  try {
    text = emit_instance(to_instance(generate(parse_instance_kind(f.kind), f.dim, p)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (f.out.empty()) std::cout << text;
  else write_file(f.out, text);
  return kOk;
}

int cmd_plot(const Flags& f) {
  auto inst = read_instance(f.file);
  if (inst.dim != 2) throw UsageError("plot needs a planar (dim 2) instance");
  std::optional<Transversal> highlight;
  if (inst.is_colour_system()) {
    auto sys = to_system(inst);
    try {
      highlight = colorful_transversal(sys).transversal;
    } catch (const NotSpanning&) {
    }
  }
  std::string text;
  if (f.format == "svg") {
    text = plot_svg(inst, highlight);
  } else {
    text = emit_instance(inst);
    if (highlight)
      for (const auto& p : highlight->picks)
        text += "# picked colour " + std::to_string(p.colour + 1) + " element " + std::to_string(p.element + 1) + "\n";
  }
  if (f.out.empty()) std::cout << text;
  else write_file(f.out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact colorful Steinitz toolkit"};
  app.require_subcommand(1);
  Flags f;

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("file", f.file, "instance file")->required();
    return sc;
  };
  auto* verify = file_cmd("verify", "check that every set spans R^d");
  auto* reduce = file_cmd("reduce", "spanning subset of size at most 2d");
  auto* refine = file_cmd("refine", "spanning subset of size at most 2d-1, or the basis case");
  auto* transversal = file_cmd("transversal", "spanning transversal via colorful Caratheodory");
  auto* classify_cmd = file_cmd("classify", "BCase, PCase, or a spanning (2d-1)-transversal");
  auto* count = file_cmd("count", "number of spanning full transversals");
  auto* minsize = file_cmd("minsize", "smallest spanning partial transversal");
  auto* plot = file_cmd("plot", "draw a planar instance");
  auto* gen = app.add_subcommand("generate", "write a generated colour system");
  gen->add_option("kind", f.kind, "bcase, pcase or random")->required();
  gen->add_option("dim", f.dim, "dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", f.seed, "random seed");
  gen->add_option("--size", f.size, "points per set (random)");
  gen->add_option("--bound", f.bound, "coordinate bound (random)")->check(CLI::PositiveNumber);
  gen->add_flag("--transform", f.transform, "apply a seeded unimodular map");
  gen->add_option("--out", f.out, "output file");

  for (auto* sc : {verify, reduce, refine, transversal, classify_cmd})
    sc->add_option("--cert", f.cert, "write a certificate to FILE");
  for (auto* sc : {classify_cmd, count, minsize}) sc->add_option("--budget", f.budget, "enumeration budget");
  transversal->add_flag("--trace", f.trace, "print the pivot trace");
  plot->add_option("--format", f.format, "svg or text")->check(CLI::IsMember({"svg", "text"}));
  plot->add_option("--out", f.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(f);
    if (*reduce) return cmd_reduce(f, false);
    if (*refine) return cmd_reduce(f, true);
    if (*transversal) return cmd_transversal(f);
    if (*classify_cmd) return cmd_classify(f);
    if (*count) return cmd_count(f);
    if (*minsize) return cmd_minsize(f);
    if (*gen) return cmd_generate(f);
    if (*plot) return cmd_plot(f);
  } catch (const ParseError& e) {
    std::cerr << "steinitz: " << f.file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "steinitz: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "steinitz: " << e.what() << " (raise --budget)\n";
    return kUsage;
  }
  return kUsage;
}

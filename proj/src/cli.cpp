#include "toruscover/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toruscover/cohomology.hpp"
#include "toruscover/klein.hpp"

namespace toruscover::cli {

namespace {

using nlohmann::ordered_json;

const Int kJsonSafeMagnitude = Int(1) << 53;

ordered_json json_int(const Int& v) {
  if (abs(v) <= kJsonSafeMagnitude) return v.convert_to<std::int64_t>();
  return v.str();
}

Int parse_int(const ordered_json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument(std::string(what) + ": expected an integer");
}

ordered_json json_matrix(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const ordered_json& j, const char* what, Index expect_cols = -1) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array of rows");
  const Index rows = static_cast<Index>(j.size());
  Index cols = expect_cols;
  if (rows > 0) {
    if (!j[0].is_array())
      throw std::invalid_argument(std::string(what) + ": rows must be arrays of integers");
    if (cols < 0) cols = static_cast<Index>(j[0].size());
  }
  if (cols < 0) cols = 0;
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw std::invalid_argument(std::string(what) + ": rows must all have length " +
                                  std::to_string(cols));
    for (Index c = 0; c < cols; ++c)
      m(i, c) = parse_int(row[static_cast<std::size_t>(c)], what);
  }
  return m;
}

IntMatrix parse_matrix(const std::string& text, const char* what, Index expect_cols = -1) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": invalid JSON (" + e.what() + ")");
  }
  return matrix_from_json(j, what, expect_cols);
}

Radical parse_radical(const std::string& text, Index vars) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("radical: expected \"a1,...,an:m\", got \"" + text + "\"");
  Radical r;
  try {
    r.index = Int(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("radical: bad index in \"" + text + "\"");
  }
  std::vector<Int> entries;
  std::stringstream ss(text.substr(0, colon));
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      entries.emplace_back(piece);
    } catch (const std::exception&) {
      throw std::invalid_argument("radical: bad exponent in \"" + text + "\"");
    }
  }
  if (static_cast<Index>(entries.size()) != vars)
    throw std::invalid_argument("radical: expected " + std::to_string(vars) +
                                " exponents in \"" + text + "\"");
  r.exponents = IntRowVector(vars);
  for (Index i = 0; i < vars; ++i) r.exponents(i) = entries[static_cast<std::size_t>(i)];
  return r;
}

std::string radical_to_string(const Radical& r) {
  std::string s;
  for (Index i = 0; i < r.exponents.size(); ++i) {
    if (i) s += ',';
    s += r.exponents(i).str();
  }
  s += ':';
  s += r.index.str();
  return s;
}

std::vector<Index> parse_dims(const std::string& text) {
  std::vector<Index> dims;
  if (text.empty()) return dims;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      const long v = std::stol(piece);
      if (v < 0) throw std::invalid_argument("negative");
      dims.push_back(static_cast<Index>(v));
    } catch (const std::exception&) {
      throw std::invalid_argument("dims: expected comma-separated nonnegative integers, got \"" +
                                  text + "\"");
    }
  }
  return dims;
}

LinearFlag parse_flag_steps(const std::string& text, Index n) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("steps: invalid JSON (") + e.what() + ")");
  }
  if (!j.is_array()) throw std::invalid_argument("steps: expected a list of equation systems");
  std::vector<IntMatrix> steps;
  for (const auto& block : j) steps.push_back(matrix_from_json(block, "steps", n));
  return LinearFlag(n, std::move(steps));
}

ordered_json flag_to_json(const LinearFlag& flag) {
  ordered_json steps = ordered_json::array();
  for (const IntMatrix& block : flag.steps()) steps.push_back(json_matrix(block));
  return ordered_json{{"n", flag.n()}, {"steps", std::move(steps)}};
}

ordered_json classify_to_json(const TorusCovering& c) {
  const NormalForm nf = classify(c);
  ordered_json m = ordered_json::array();
  for (const Int& v : nf.m) m.push_back(json_int(v));
  return ordered_json{{"s", nf.s},
                      {"m", std::move(m)},
                      {"r", nf.r},
                      {"min_inducing_dim", min_inducing_dim(c)}};
}

ordered_json class_to_json(const ObstructionClass& oc) {
  ordered_json coefficients = ordered_json::array();
  for (std::size_t idx = 0; idx < oc.cls.coeffs.size(); ++idx) {
    const std::vector<Index> subset = subset_at(oc.cls.n, oc.cls.k, idx);
    coefficients.push_back(
        ordered_json{{"subset", subset}, {"value", json_int(oc.cls.coeffs[idx])}});
  }
  return ordered_json{{"modulus", json_int(oc.modulus)},
                      {"degree", oc.cls.k},
                      {"coefficients", std::move(coefficients)}};
}

ordered_json perm_list_to_json(const std::vector<Permutation>& perms) {
  ordered_json out = ordered_json::array();
  for (const Permutation& p : perms) out.push_back(p.images());
  return out;
}

struct Options {
  bool human = false;
  std::size_t cap = kDefaultGroupCap;
};

void emit(const Options& opt, std::ostream& out, const ordered_json& doc,
          const std::string& human_text) {
  if (opt.human) {
    out << human_text << '\n';
  } else {
    out << doc.dump() << '\n';
  }
}

std::string human_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << "]\n";
  }
  if (m.rows() == 0) os << "  (empty)\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"toruscover: coverings over tori, their minimal inducing dimension,\n"
               "cup-product obstructions, and applications to Klein's resolvent problem"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("TORUSCOVER_CAP")) {
    try {
      opt.cap = static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      // malformed env cap is reported only if no --cap is given
    }
  }
  std::string output_mode = "json";
  app.add_option("--output", output_mode, "Output mode: json (default) or human")
      ->check(CLI::IsMember({"json", "human"}));
  app.add_option("--cap", opt.cap,
                 "Cap for group closure / kernel enumeration (env TORUSCOVER_CAP)");

  std::string matrix_text, kernel_text, kernel2_text, sublattice_text, steps_text, dims_text;
  Index dim = 0, rank_in = 0, degree = 0, vars = 0, flag_n = 0, k_query = 0;
  Index pairing_n = 0, quadruple_n = 0;
  std::vector<std::string> radical_texts;
  std::string action;

  CLI::App* snf = app.add_subcommand("snf", "Smith normal form U*A*V = D");
  snf->add_option("--matrix", matrix_text, "Integer matrix as JSON rows")->required();

  CLI::App* hnf = app.add_subcommand("hnf", "Row-style Hermite normal form H = U*A");
  hnf->add_option("--matrix", matrix_text, "Integer matrix as JSON rows")->required();

  CLI::App* cls = app.add_subcommand("classify", "Normal form of a torus covering");
  cls->add_option("--kernel", kernel_text, "Kernel lattice generators as JSON rows")->required();
  cls->add_option("--dim", dim, "Torus dimension")->required();

  CLI::App* mindim = app.add_subcommand("mindim", "Minimal inducing dimension");
  mindim->add_option("--kernel", kernel_text)->required();
  mindim->add_option("--dim", dim)->required();
  mindim->add_option("--from", k_query, "Also report whether dimension k suffices");

  CLI::App* equiv = app.add_subcommand("equivalent", "Equivalence of two torus coverings");
  equiv->add_option("--kernel1", kernel_text)->required();
  equiv->add_option("--kernel2", kernel2_text)->required();
  equiv->add_option("--dim", dim)->required();

  CLI::App* dom = app.add_subcommand("dominates",
                                     "Does the first connected covering dominate the second");
  dom->add_option("--kernel1", kernel_text)->required();
  dom->add_option("--kernel2", kernel2_text)->required();
  dom->add_option("--dim", dim)->required();

  CLI::App* pull = app.add_subcommand("pullback", "Pull a covering back along a torus cover");
  pull->add_option("--kernel", kernel_text)->required();
  pull->add_option("--dim", dim)->required();
  pull->add_option("--sublattice", sublattice_text, "Full-rank sublattice (pi_1 image)")
      ->required();

  CLI::App* tower = app.add_subcommand("tower-bound", "max(0, k - sum(dims))");
  tower->add_option("--rank", rank_in, "Rank of the base covering's monodromy")->required();
  tower->add_option("--dims", dims_text, "Stage dimensions, comma-separated");

  CLI::App* charcls = app.add_subcommand("charclass", "Cup-product obstruction class");
  charcls->add_option("--kernel", kernel_text)->required();
  charcls->add_option("--dim", dim)->required();

  CLI::App* rad = app.add_subcommand("radical", "Radical systems on the algebraic torus");
  rad->add_option("--vars", vars, "Number of torus variables")->required();
  rad->add_option("--radical", radical_texts, "Radical as \"a1,...,an:m\" (repeatable)");
  rad->add_option("action", action, "kernel | classify | mindim | tower")->required();
  rad->add_option("--dims", dims_text, "Stage dimensions for the tower action");

  CLI::App* flag = app.add_subcommand("flag", "Flag stabilizers and local monodromy rank");
  flag->add_option("--n", flag_n, "Coordinate count for --steps input");
  flag->add_option("--steps", steps_text, "Flag as a JSON list of equation systems");
  flag->add_option("--pairing", pairing_n, "Use the pairing flag for this degree");
  flag->add_option("--quadruple", quadruple_n, "Use the quadruple flag for this degree");
  flag->add_option("action", action, "stabilizer | rank | steps")->required();

  CLI::App* uni = app.add_subcommand("universal", "Lower bound for the universal function");
  uni->add_option("--degree", degree)->required();

  CLI::App* unid = app.add_subcommand(
      "universal-disc", "Lower bound with the square root of the discriminant adjoined");
  unid->add_option("--degree", degree)->required();

  std::vector<const char*> argv;
  argv.push_back("toruscover");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << ordered_json{{"error", "validation"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  opt.human = output_mode == "human";

  try {
    if (snf->parsed()) {
      const IntMatrix a = parse_matrix(matrix_text, "matrix");
      const SmithDecomposition s = smith_normal_form(a);
      ordered_json doc{{"U", json_matrix(s.u)}, {"D", json_matrix(s.d)}, {"V", json_matrix(s.v)}};
      emit(opt, out, doc,
           "U =\n" + human_matrix(s.u) + "D =\n" + human_matrix(s.d) + "V =\n" +
               human_matrix(s.v));
    } else if (hnf->parsed()) {
      const IntMatrix a = parse_matrix(matrix_text, "matrix");
      const HermiteForm h = hermite_normal_form(a);
      ordered_json doc{{"H", json_matrix(h.h)}, {"U", json_matrix(h.u)}};
      emit(opt, out, doc, "H =\n" + human_matrix(h.h) + "U =\n" + human_matrix(h.u));
    } else if (cls->parsed()) {
      const TorusCovering c(dim, Lattice::from_rows(dim, parse_matrix(kernel_text, "kernel", dim)));
      const ordered_json doc = classify_to_json(c);
      std::ostringstream hs;
      hs << "s=" << doc["s"] << " m=" << doc["m"].dump() << " r=" << doc["r"]
         << " min_inducing_dim=" << doc["min_inducing_dim"];
      emit(opt, out, doc, hs.str());
    } else if (mindim->parsed()) {
      const TorusCovering c(dim, Lattice::from_rows(dim, parse_matrix(kernel_text, "kernel", dim)));
      const Index k = min_inducing_dim(c);
      if (mindim->count("--from")) {
        ordered_json doc{{"min_inducing_dim", k}, {"inducible", is_inducible_from(c, k_query)}};
        emit(opt, out, doc,
             "min_inducing_dim=" + std::to_string(k) + " inducible_from_" +
                 std::to_string(k_query) + "=" + (is_inducible_from(c, k_query) ? "true" : "false"));
      } else {
        emit(opt, out, ordered_json(k), std::to_string(k));
      }
    } else if (equiv->parsed()) {
      const TorusCovering c1(dim, Lattice::from_rows(dim, parse_matrix(kernel_text, "kernel1", dim)));
      const TorusCovering c2(dim, Lattice::from_rows(dim, parse_matrix(kernel2_text, "kernel2", dim)));
      const bool eq = is_equivalent(c1, c2);
      emit(opt, out, ordered_json(eq), eq ? "true" : "false");
    } else if (dom->parsed()) {
      const TorusCovering c1(dim, Lattice::from_rows(dim, parse_matrix(kernel_text, "kernel1", dim)));
      const TorusCovering c2(dim, Lattice::from_rows(dim, parse_matrix(kernel2_text, "kernel2", dim)));
      const bool d = dominates(c1, c2);
      emit(opt, out, ordered_json(d), d ? "true" : "false");
    } else if (pull->parsed()) {
      const TorusCovering c(dim, Lattice::from_rows(dim, parse_matrix(kernel_text, "kernel", dim)));
      const Lattice h = Lattice::from_rows(dim, parse_matrix(sublattice_text, "sublattice", dim));
      const TorusCovering result = pullback(c, h);
      ordered_json doc{{"dim", result.n},
                       {"kernel", json_matrix(result.kernel.basis())},
                       {"min_inducing_dim", min_inducing_dim(result)}};
      emit(opt, out, doc,
           "kernel =\n" + human_matrix(result.kernel.basis()) +
               "min_inducing_dim = " + std::to_string(min_inducing_dim(result)));
    } else if (tower->parsed()) {
      const Index b = tower_rank_bound(rank_in, parse_dims(dims_text));
      emit(opt, out, ordered_json(b), std::to_string(b));
    } else if (charcls->parsed()) {
      const TorusCovering c(dim, Lattice::from_rows(dim, parse_matrix(kernel_text, "kernel", dim)));
      const ObstructionClass oc = obstruction_class(c);
      const ordered_json doc = class_to_json(oc);
      emit(opt, out, doc,
           "modulus=" + oc.modulus.str() + " degree=" + std::to_string(oc.cls.k) + " " +
               doc["coefficients"].dump());
    } else if (rad->parsed()) {
      std::vector<Radical> rads;
      for (const std::string& t : radical_texts) rads.push_back(parse_radical(t, vars));
      const RadicalSystem rs(vars, std::move(rads));
      if (action == "kernel") {
        const TorusCovering c = radical_kernel(rs);
        ordered_json doc{{"dim", c.n}, {"kernel", json_matrix(c.kernel.basis())}};
        emit(opt, out, doc, "kernel =\n" + human_matrix(c.kernel.basis()));
      } else if (action == "classify") {
        const ordered_json doc = classify_to_json(radical_kernel(rs));
        emit(opt, out, doc, doc.dump());
      } else if (action == "mindim") {
        const Index k = essential_dimension(rs);
        emit(opt, out, ordered_json(k), std::to_string(k));
      } else if (action == "tower") {
        const bool feasible = tower_feasible(rs, parse_dims(dims_text));
        emit(opt, out, ordered_json(feasible), feasible ? "true" : "false");
      } else {
        throw std::invalid_argument("radical: unknown action \"" + action + "\"");
      }
    } else if (flag->parsed()) {
      int sources = 0;
      sources += flag->count("--steps") ? 1 : 0;
      sources += flag->count("--pairing") ? 1 : 0;
      sources += flag->count("--quadruple") ? 1 : 0;
      if (sources != 1)
        throw std::invalid_argument("flag: give exactly one of --steps, --pairing, --quadruple");
      LinearFlag lf = flag->count("--pairing")      ? pairing_flag(pairing_n)
                      : flag->count("--quadruple") ? quadruple_flag(quadruple_n)
                                                    : parse_flag_steps(steps_text, flag_n);
      if (action == "stabilizer") {
        const std::vector<Permutation> stab = flag_stabilizer(lf);
        ordered_json doc{{"order", stab.size()}, {"elements", perm_list_to_json(stab)}};
        emit(opt, out, doc, doc.dump());
      } else if (action == "rank") {
        const FlagRank fr = flag_rank(lf, opt.cap);
        ordered_json doc{{"rank", fr.rank}, {"even_only", fr.even_only}};
        emit(opt, out, doc,
             "rank=" + std::to_string(fr.rank) + " even_only=" + (fr.even_only ? "true" : "false"));
      } else if (action == "steps") {
        const ordered_json doc = flag_to_json(lf);
        emit(opt, out, doc, doc.dump());
      } else {
        throw std::invalid_argument("flag: unknown action \"" + action + "\"");
      }
    } else if (uni->parsed()) {
      const UniversalBound ub = universal_lower_bound(degree);
      ordered_json rads = ordered_json::array();
      for (const Radical& r : ub.certificate.radicals) rads.push_back(radical_to_string(r));
      ordered_json doc{{"bound", ub.bound},
                       {"certificate", ordered_json{{"vars", ub.certificate.vars},
                                                    {"radicals", std::move(rads)}}}};
      emit(opt, out, doc, "bound=" + std::to_string(ub.bound));
    } else if (unid->parsed()) {
      const UniversalDiscBound ub = universal_disc_lower_bound(degree, opt.cap);
      ordered_json doc{{"bound", ub.bound},
                       {"fiber_size", ub.certificate.fiber_size},
                       {"generators", perm_list_to_json(ub.certificate.generators)},
                       {"even_only", true},
                       {"rank", ub.bound}};
      emit(opt, out, doc, "bound=" + std::to_string(ub.bound));
    }
  } catch (const computation_error& e) {
    err << ordered_json{{"error", "computation"}, {"message", e.what()}}.dump() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << ordered_json{{"error", "validation"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace toruscover::cli

// Command-line front end for the hermsos library.
//
// Exit codes: 0 success, 1 verification violations, 2 usage or parse error,
// 3 mathematical precondition failure (tagged on stderr).

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <list>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hermsos/hermsos.hpp"

namespace {

using namespace hermsos;

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;

/// Raised for bad flag combinations detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path = "-";
  std::string expr;
  std::size_t nvars = 0;
  bool strict = false;
};

struct OutputOptions {
  std::string format = "json";
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

HermPoly load(const InputOptions& in) {
  return parse_document(in.expr.empty() ? read_all(in.path) : in.expr, in.nvars, in.strict);
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Polynomial document (JSON or text); '-' reads stdin")->capture_default_str();
  cmd->add_option("-e,--expr", in.expr, "Inline polynomial in the text grammar");
  cmd->add_option("--nvars", in.nvars, "Number of variables (text input infers it by default)");
  cmd->add_flag("--strict", in.strict, "Reject non-canonical JSON documents");
}

/// Each subcommand gets its own format slot so defaults do not collide.
OutputOptions& add_format(CLI::App* cmd, std::list<OutputOptions>& slots, const std::string& def = "json") {
  OutputOptions& out = slots.emplace_back(OutputOptions{def});
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "table"}))
      ->capture_default_str();
  return out;
}

template <class Kind>
void print_poly(const Polynomial<Kind>& p, const OutputOptions& out, const char* var = nullptr) {
  if (out.format == "json") {
    std::cout << to_json(p).dump() << '\n';
  } else {
    std::cout << to_text(p, var) << '\n';
  }
}

std::string offset_text(const SignedOffset& off) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < off.deltas.size(); ++i) os << (i ? "," : "") << off.deltas[i];
  os << ')';
  return os.str();
}

std::size_t thread_count() {
  const char* env = std::getenv("HERMSOS_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError("HERMSOS_THREADS must be a positive integer");
  return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string suite;
  std::size_t n = 1;
  int d = 1;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  int degree = -1;
  bool exhaustive = false;
  std::size_t max = 9;
  std::string out_path;
  OutputOptions out{"table"};
};

void append(std::vector<TrialReport>& all, std::vector<TrialReport> more) {
  all.insert(all.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

RandomSpec spec_for(std::uint64_t seed, std::size_t n, int degree) {
  RandomSpec s;
  s.seed = seed;
  s.nvars = n;
  s.max_degree = degree;
  return s;
}

void print_table(const std::vector<TrialReport>& reports, std::ostream& os) {
  struct Row {
    std::size_t trials = 0, skipped = 0, violations = 0;
    long min_margin = std::numeric_limits<long>::max();
  };
  std::map<std::string, Row> rows;
  for (const auto& r : reports) {
    Row& row = rows[theorem_name(r.theorem)];
    ++row.trials;
    if (r.skipped) {
      ++row.skipped;
    } else {
      row.min_margin = std::min(row.min_margin, static_cast<long>(r.observed) - static_cast<long>(r.bound));
    }
    if (!r.pass) ++row.violations;
  }
  os << std::left << std::setw(24) << "theorem" << std::right << std::setw(8) << "trials" << std::setw(9) << "skipped"
     << std::setw(12) << "violations" << std::setw(12) << "min_margin" << '\n';
  for (const auto& [name, row] : rows) {
    os << std::left << std::setw(24) << name << std::right << std::setw(8) << row.trials << std::setw(9) << row.skipped
       << std::setw(12) << row.violations << std::setw(12)
       << (row.min_margin == std::numeric_limits<long>::max() ? std::string("-") : std::to_string(row.min_margin))
       << '\n';
  }
}

int run_verify(const VerifyOptions& o) {
  const std::size_t threads = thread_count();
  std::vector<TrialReport> reports;
  std::optional<HuangSearch> search;
  auto degree_or = [&](int def) { return o.degree >= 0 ? o.degree : def; };

  if (o.suite == "pfister") {
    const int deg = degree_or(4);
    append(reports, run_trials(o.trials, o.seed, [&](std::uint64_t s) {
      return check_pfister_rank(o.n, o.d, spec_for(s, o.n, deg));
    }, threads));
  } else if (o.suite == "diagonal") {
    const int deg = degree_or(3);
    append(reports, run_trials(o.trials, o.seed, [&](std::uint64_t s) {
      return check_diagonal_term_count(o.n, o.d, spec_for(s, o.n, deg));
    }, threads));
    const int udeg = degree_or(6);
    append(reports, run_trials(o.trials, o.seed, [&](std::uint64_t s) {
      return check_univariate(o.d, spec_for(s, 1, udeg));
    }, threads));
    append(reports, run_trials(o.trials, o.seed, [&](std::uint64_t s) {
      return check_descent(spec_for(s, 1, udeg));
    }, threads));
  } else if (o.suite == "huang") {
    const int deg = degree_or(2);
    append(reports, run_trials(o.trials, o.seed, [&](std::uint64_t s) {
      return check_huang(o.n, spec_for(s, o.n, deg));
    }, threads));
    if (o.exhaustive) search = huang_exhaustive(o.n, deg);
  } else if (o.suite == "slices") {
    const int deg = degree_or(3);
    append(reports, run_trials(o.trials, o.seed, [&](std::uint64_t s) {
      return check_slice_invariance(spec_for(s, o.n, deg), o.d);
    }, threads));
    append(reports, run_trials(o.trials, o.seed, [&](std::uint64_t s) {
      return check_extremal_slice(spec_for(s, o.n, deg));
    }, threads));
  } else if (o.suite == "lprime") {
    for (std::size_t total = 1; total <= o.max; ++total) {
      for (std::size_t d = 1; d <= total; ++d) reports.push_back(check_lprime(total - d, d));
    }
  } else {
    throw UsageError("unknown suite '" + o.suite + "' (expected pfister, diagonal, huang, slices or lprime)");
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw UsageError("cannot open output file '" + o.out_path + "'");
    for (const auto& r : reports) file << to_json(r).dump() << '\n';
  }
  if (o.out.format == "json") {
    for (const auto& r : reports) std::cout << to_json(r).dump() << '\n';
  } else {
    print_table(reports, std::cout);
  }

  SuiteSummary sum = summarize(reports);
  if (search) {
    const std::string line = "exhaustive: n=" + std::to_string(o.n) + " degree<=" + std::to_string(degree_or(2)) +
                             " f-tuples=" + std::to_string(search->tuples) +
                             " violations=" + std::to_string(search->violations);
    (o.out.format == "json" ? std::cerr : std::cout) << line << '\n';
    sum.violations += search->violations;
  }
  (o.out.format == "json" ? std::cerr : std::cout)
      << "total: trials=" << sum.trials << " skipped=" << sum.skipped << " violations=" << sum.violations << '\n';
  return sum.violations == 0 ? 0 : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank, sums of squared norms and Pfister-multiple bounds for Hermitian polynomials"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  InputOptions in;
  std::list<OutputOptions> formats;
  std::function<int()> action;

  auto* rank = app.add_subcommand("rank", "Exact rank of the coefficient matrix");
  add_input(rank, in);
  rank->callback([&] { action = [&] { std::cout << exact_rank(load(in)) << '\n'; return 0; }; });

  auto* psd = app.add_subcommand("psd", "Is the coefficient matrix positive semidefinite?");
  add_input(psd, in);
  psd->callback([&] { action = [&] { std::cout << (psd_check(load(in)) ? "true" : "false") << '\n'; return 0; }; });

  auto* length = app.add_subcommand("length", "Hermitian length (minimal number of squared terms)");
  add_input(length, in);
  length->callback([&] { action = [&] { std::cout << hermitian_length(load(in)) << '\n'; return 0; }; });

  auto* decompose = app.add_subcommand("decompose", "Certificate a = sum w_k |l_k|^2");
  add_input(decompose, in);
  auto& decompose_out = add_format(decompose, formats);
  decompose->callback([&] {
    action = [&] {
      const SquaredNormCert cert = squared_norm_decompose(load(in));
      if (decompose_out.format == "json") {
        std::cout << to_json(cert).dump() << '\n';
      } else {
        for (std::size_t k = 0; k < cert.length(); ++k) {
          std::cout << to_string(cert.weights[k]) << " |" << to_text(cert.polys[k]) << "|^2\n";
        }
      }
      return 0;
    };
  });

  auto* matrix = app.add_subcommand("matrix", "Coefficient matrix indexed by the monomials present");
  add_input(matrix, in);
  auto& matrix_out = add_format(matrix, formats, "table");
  matrix->callback([&] {
    action = [&] {
      const HermPoly a = load(in);
      if (a.is_zero()) {
        std::cout << (matrix_out.format == "json" ? "{\"rows\":[],\"cols\":[],\"entries\":[]}" : "(empty)") << '\n';
        return 0;
      }
      const CoeffMatrix m = build_matrix(a);
      if (matrix_out.format == "json") {
        Json rows = Json::array(), cols = Json::array(), entries = Json::array();
        for (const auto& r : m.row_index) rows.push_back(r.exponents());
        for (const auto& c : m.col_index) cols.push_back(c.exponents());
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(Json{{"re", detail::rational_to_json(m(i, j).re())},
                               {"im", detail::rational_to_json(m(i, j).im())}});
          }
          entries.push_back(std::move(row));
        }
        std::cout << Json{{"rows", rows}, {"cols", cols}, {"entries", entries}}.dump() << '\n';
      } else {
        std::cout << render_grid(m);
      }
      return 0;
    };
  });

  auto* slc = app.add_subcommand("slices", "Decompose by signed offset; slices are polynomials in x = |z|^2");
  add_input(slc, in);
  auto& slc_out = add_format(slc, formats, "text");
  slc->callback([&] {
    action = [&] {
      const HermPoly a = load(in);
      if (a.is_zero()) throw MathError(MathError::Kind::ZeroInput, "slices of the zero polynomial");
      const auto parts = slices(a);
      if (slc_out.format == "json") {
        Json arr = Json::array();
        for (const auto& s : parts) arr.push_back(Json{{"offset", s.offset.deltas}, {"poly", to_json(s.poly)}});
        std::cout << Json{{"slices", arr}, {"extremal_bound", extremal_slice_bound(a)}}.dump() << '\n';
      } else {
        for (const auto& s : parts) std::cout << offset_text(s.offset) << ": " << to_text(s.poly, "x") << '\n';
        std::cout << "extremal bound: " << extremal_slice_bound(a) << '\n';
      }
      return 0;
    };
  });

  std::string by;
  int pfister_d = -1, norm_d = -1;
  auto* divide = app.add_subcommand("divide", "Divide by a polynomial, a Pfister power or a norm power");
  add_input(divide, in);
  auto& divide_out = add_format(divide, formats);
  auto* by_opt = divide->add_option("--by", by, "Divisor in the text grammar");
  auto* pf_opt = divide->add_option("--pfister", pfister_d, "Divide by (1 + ||z||^2)^d");
  auto* np_opt = divide->add_option("--norm-power", norm_d, "Divide by ||z||^(2d)");
  by_opt->excludes(pf_opt)->excludes(np_opt);
  pf_opt->excludes(np_opt);
  divide->callback([&] {
    action = [&] {
      const HermPoly a = load(in);
      HermPoly b(a.nvars());
      if (!by.empty()) {
        b = parse_text<HermitianKind>(by, a.nvars());
      } else if (pfister_d >= 0) {
        b = pfister_base(a.nvars(), pfister_d);
      } else if (norm_d >= 0) {
        b = norm_power(a.nvars(), norm_d);
      } else {
        throw UsageError("divide needs one of --by, --pfister, --norm-power");
      }
      const auto r = divide_single(a, b);
      if (divide_out.format == "json") {
        std::cout << Json{{"quotient", to_json(r.quotient)},
                          {"remainder", to_json(r.remainder)},
                          {"divides", r.remainder.is_zero()}}.dump()
                  << '\n';
      } else {
        std::cout << "quotient: " << to_text(r.quotient) << "\nremainder: " << to_text(r.remainder)
                  << "\ndivides: " << (r.remainder.is_zero() ? "true" : "false") << '\n';
      }
      return 0;
    };
  });

  std::size_t gen_n = 1;
  int gen_d = 0;
  bool homogeneous = false;
  auto* pfister = app.add_subcommand("pfister", "Emit (1 + ||z||^2)^d, or ||z||^(2d) with --homogeneous");
  pfister->add_option("--n", gen_n, "Number of variables")->required()->check(CLI::PositiveNumber);
  pfister->add_option("--d", gen_d, "Exponent")->required()->check(CLI::NonNegativeNumber);
  pfister->add_flag("--homogeneous", homogeneous, "Emit the norm power instead");
  auto& pfister_out = add_format(pfister, formats);
  pfister->callback([&] {
    action = [&] {
      print_poly(homogeneous ? norm_power(gen_n, gen_d) : pfister_base(gen_n, gen_d), pfister_out);
      return 0;
    };
  });

  auto* convert = app.add_subcommand("convert", "Re-emit a document in another format");
  add_input(convert, in);
  auto& convert_out = add_format(convert, formats, "text");
  convert->callback([&] { action = [&] { print_poly(load(in), convert_out); return 0; }; });

  int bihom_d = -1;
  auto* bihom = app.add_subcommand("bihomogenize", "Add a variable so every term has bidegree (d, d)");
  add_input(bihom, in);
  auto& bihom_out = add_format(bihom, formats);
  bihom->add_option("--d", bihom_d, "Target bidegree (default: the smallest that works)");
  bihom->callback([&] {
    action = [&] {
      const HermPoly a = load(in);
      int d = bihom_d;
      if (d < 0) {
        const auto [da, db] = bidegree(a);
        d = std::max({da, db, 0});
      }
      print_poly(bihomogenize(a, d), bihom_out);
      return 0;
    };
  });

  std::size_t dehom_var = 0;
  auto* dehom = app.add_subcommand("dehomogenize", "Set z_k = zbar_k = 1, removing variable k");
  add_input(dehom, in);
  auto& dehom_out = add_format(dehom, formats);
  dehom->add_option("--var", dehom_var, "1-based variable index (default: the last)");
  dehom->callback([&] {
    action = [&] {
      const HermPoly a = load(in);
      const std::size_t k = dehom_var ? dehom_var : a.nvars();
      if (k > a.nvars()) throw UsageError("--var exceeds the number of variables");
      print_poly(dehomogenize(a, k - 1), dehom_out);
      return 0;
    };
  });

  auto* lowest = app.add_subcommand("lowest", "Lowest-order homogeneous part");
  add_input(lowest, in);
  auto& lowest_out = add_format(lowest, formats);
  lowest->callback([&] { action = [&] { print_poly(lowest_part(load(in)), lowest_out); return 0; }; });

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
  verify->add_option("suite", vo.suite, "pfister | diagonal | huang | slices | lprime")->required();
  verify->add_option("--n", vo.n, "Number of variables")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--d", vo.d, "Exponent d")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", vo.trials, "Number of random trials")->capture_default_str();
  verify->add_option("--seed", vo.seed, "Base seed; trial i uses seed + i")->capture_default_str();
  verify->add_option("--degree", vo.degree, "Maximal degree of random inputs (suite default if omitted)");
  verify->add_flag("--exhaustive", vo.exhaustive, "huang: also run the exhaustive grid search");
  verify->add_option("--max", vo.max, "lprime: check every m + d <= max")->capture_default_str();
  verify->add_option("--out", vo.out_path, "Write JSON lines to this file");
  verify->add_option("--format", vo.out.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "table"}))
      ->capture_default_str();
  verify->callback([&] { action = [&] { return run_verify(vo); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MathError& e) {
    std::cerr << e.tag() << ": " << e.what() << '\n';
    return kExitMath;
  } catch (const std::invalid_argument& e) {
    std::cerr << "PRECONDITION: " << e.what() << '\n';
    return kExitMath;
  } catch (const std::out_of_range& e) {
    std::cerr << "PRECONDITION: " << e.what() << '\n';
    return kExitMath;
  } catch (const std::domain_error& e) {
    std::cerr << "PRECONDITION: " << e.what() << '\n';
    return kExitMath;
  }
}

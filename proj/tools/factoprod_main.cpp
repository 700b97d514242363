// factoprod: exact coefficient tables for falling factorial powers of
// products, with verification suites, matrix analytics and enumeration
// oracles. Exit codes: 0 success, 1 verification/consistency failure,
// 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "factoprod/checks.hpp"
#include "factoprod/coeff.hpp"
#include "factoprod/document.hpp"
#include "factoprod/matrix_analysis.hpp"
#include "factoprod/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr int kDefaultTableCap = 16;
constexpr int kDefaultOracleCellCap = 16;

using factoprod::CheckResult;
using factoprod::CoeffTable2D;
using factoprod::Int;
using factoprod::MultiIndex;

enum class Method { stirling, recurrence, inclusion_exclusion, mobius, all };

std::map<std::string, Method> method_names() {
  return {{"stirling", Method::stirling},
          {"recurrence", Method::recurrence},
          {"inclusion-exclusion", Method::inclusion_exclusion},
          {"mobius", Method::mobius},
          {"all", Method::all}};
}

Int coeff_2d(Method method, int k, int l, int m) {
  switch (method) {
    case Method::stirling:
      return factoprod::c_stirling(k, l, m);
    case Method::recurrence:
      return factoprod::table_recurrence(k).at(l, m);
    case Method::inclusion_exclusion:
      return factoprod::c_inclusion_exclusion(k, l, m);
    case Method::mobius: {
      const Int numerator = factoprod::b_mobius(k, l, m) *
                            factoprod::factorial(static_cast<unsigned long>(k));
      const Int denominator = MultiIndex{l, m}.factorial_product();
      Int q;
      mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
      return q;
    }
    case Method::all:
      break;
  }
  throw std::logic_error("coeff_2d: unmapped method");
}

CoeffTable2D table_by_method(Method method, int k) {
  if (method == Method::recurrence) return factoprod::table_recurrence(k);
  CoeffTable2D table(k);
  for (int l = 1; l <= k; ++l)
    for (int m = 1; m <= k; ++m) table.at(l, m) = coeff_2d(method, k, l, m);
  return table;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

std::string default_cache_dir() {
  const char* env = std::getenv("FACTOPROD_CACHE_DIR");
  return env ? env : "";
}

struct TableArgs {
  int k = 0;
  std::string format = "text";
  Method method = Method::recurrence;
  std::string out;
  std::string cache_dir = default_cache_dir();
  int k_cap = kDefaultTableCap;
  bool header = false;
  bool no_provenance = false;
};

int run_table(const TableArgs& args) {
  if (args.k > args.k_cap) {
    std::cerr << "table: k=" << args.k << " exceeds desk-scale cap "
              << args.k_cap << " (raise with --k-max)\n";
    return kExitUsage;
  }
  std::optional<factoprod::OutputDocument> doc;
  const bool caching = !args.cache_dir.empty();
  if (caching) doc = factoprod::cache_load(args.cache_dir, args.k, 2);

  if (!doc) {
    std::string method_name;
    for (const auto& [name, m] : method_names())
      if (m == args.method) method_name = name;
    bool cross_checked = false;
    CoeffTable2D table(args.k);
    if (args.method == Method::all) {
      table = factoprod::table_recurrence(args.k);
      for (Method m : {Method::stirling, Method::inclusion_exclusion, Method::mobius})
        if (table_by_method(m, args.k) != table) {
          std::cerr << "table: methods disagree at k=" << args.k << "\n";
          return kExitCheckFailed;
        }
      cross_checked = true;
    } else {
      table = table_by_method(args.method, args.k);
    }
    doc = factoprod::make_document(table, method_name, /*with_provenance=*/true,
                                   cross_checked);
    if (caching) factoprod::cache_store(args.cache_dir, *doc);
  }

  factoprod::OutputDocument out_doc = *doc;
  if (args.no_provenance) out_doc.provenance.reset();

  std::string rendered;
  if (args.format == "json")
    rendered = factoprod::serialize_json(out_doc);
  else if (args.format == "csv")
    rendered = factoprod::render_csv(out_doc, args.header);
  else
    rendered = factoprod::render_text(out_doc);
  write_output(rendered, args.out);
  return kExitOk;
}

struct CoeffArgs {
  int k = 0;
  std::vector<int> components;
  Method method = Method::stirling;
  int k_cap = kDefaultTableCap;
};

int run_coeff(const CoeffArgs& args) {
  if (args.k > args.k_cap) {
    std::cerr << "coeff: k=" << args.k << " exceeds desk-scale cap "
              << args.k_cap << " (raise with --k-max)\n";
    return kExitUsage;
  }
  const MultiIndex index(args.components);
  auto by = [&](Method m) -> Int {
    switch (m) {
      case Method::stirling:
        return factoprod::c_multi_stirling(args.k, index);
      case Method::recurrence:
        return factoprod::table_multi_recurrence(args.k, index.dims()).at(index);
      case Method::inclusion_exclusion:
        return factoprod::c_multi_inclusion_exclusion(args.k, index);
      case Method::mobius:
        return factoprod::c_multi_inversion(args.k, index);
      case Method::all:
        break;
    }
    throw std::logic_error("coeff: unmapped method");
  };
  Int value;
  if (args.method == Method::all) {
    value = by(Method::stirling);
    for (Method m :
         {Method::recurrence, Method::inclusion_exclusion, Method::mobius})
      if (by(m) != value) {
        std::cerr << "coeff: methods disagree\n";
        return kExitCheckFailed;
      }
  } else {
    value = by(args.method);
  }
  std::cout << factoprod::to_decimal(value) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  int k_max = 6;
  int n_max = 2;
  int pascal_cap = 5;
};

int run_verify(const VerifyArgs& args) {
  const std::vector<CheckResult> results = factoprod::run_verification(
      {args.k_max, args.n_max, args.pascal_cap});
  const CheckResult* first_failure = nullptr;
  for (const CheckResult& r : results) {
    std::cout << (r.passed ? "[ok]   " : "[FAIL] ") << r.name << ": " << r.detail
              << "\n";
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    std::cout << "verification failed: " << first_failure->name << "\n";
    return kExitCheckFailed;
  }
  std::cout << "all " << results.size() << " checks passed\n";
  return kExitOk;
}

int run_analyze(int k) {
  bool proven_ok = true;

  try {
    factoprod::build_factorization(k);
    std::cout << "factorization C = S2 Sigma S2^T: ok\n";
  } catch (const std::logic_error& e) {
    std::cout << "factorization C = S2 Sigma S2^T: FAILED (" << e.what() << ")\n";
    proven_ok = false;
  }

  try {
    const Int det = factoprod::det_C(k);
    std::cout << "det C = " << factoprod::to_decimal(det)
              << " (product formula = elimination)\n";
  } catch (const std::logic_error& e) {
    std::cout << "det C: route disagreement (" << e.what() << ")\n";
    proven_ok = false;
  }

  const factoprod::InertiaReport report = factoprod::inertia(k);
  const factoprod::InertiaReport expected{(k + 1) / 2, k / 2, 0};
  std::cout << "inertia: " << report.positives << " positive, "
            << report.negatives << " negative, " << report.zeros << " zero";
  if (report == expected) {
    std::cout << " (matches ceil(k/2), floor(k/2), 0)\n";
  } else {
    std::cout << " EXPECTED (" << expected.positives << "," << expected.negatives
              << ",0)\n";
    proven_ok = false;
  }

  if (k >= 2) {
    const factoprod::LogConcavityReport lc = factoprod::log_concavity_report(k);
    std::cout << "log-concavity: anti-diagonals "
              << (lc.anti_diagonals_hold() ? "hold" : "FAIL") << "; rows "
              << (lc.rows_hold() ? "hold" : "have counterexamples")
              << ", diagonals "
              << (lc.diagonals_hold() ? "hold" : "have counterexamples")
              << " (conjectured)\n";
    if (!lc.anti_diagonals_hold()) proven_ok = false;
    for (const auto* family : {&lc.rows, &lc.diagonals})
      for (const auto& v : *family)
        if (!v.holds)
          std::cout << "  conjecture counterexample: " << v.family << " "
                    << v.index << " at position " << v.violation->position
                    << "\n";
  }

  return proven_ok ? kExitOk : kExitCheckFailed;
}

struct OracleArgs {
  int k = 0;
  std::vector<int> shape;
  int max_cells = kDefaultOracleCellCap;
  bool list_tables = false;
};

int run_oracle(const OracleArgs& args) {
  const MultiIndex shape(args.shape);
  if (shape.product() > args.max_cells) {
    std::cerr << "oracle: " << shape.product()
              << " cells exceed the enumeration cap " << args.max_cells
              << " (raise with --max-cells)\n";
    return kExitUsage;
  }
  const Int tables = factoprod::count_ranking_tables(args.k, shape);
  const Int implied_numerator = tables;
  const Int denominator = shape.factorial_product();
  if (!mpz_divisible_p(implied_numerator.get_mpz_t(), denominator.get_mpz_t())) {
    std::cerr << "oracle: count " << factoprod::to_decimal(tables)
              << " is not divisible by the shape factorials\n";
    return kExitCheckFailed;
  }
  Int implied_c;
  mpz_divexact(implied_c.get_mpz_t(), implied_numerator.get_mpz_t(),
               denominator.get_mpz_t());

  bool in_range = true;
  for (int c : shape.components) in_range = in_range && c <= args.k;
  const Int engine_c =
      in_range ? factoprod::c_multi_stirling(args.k, shape) : Int(0);

  std::cout << "ranking tables: " << factoprod::to_decimal(tables) << "\n";
  std::cout << "implied c: " << factoprod::to_decimal(implied_c) << "\n";
  if (implied_c != engine_c) {
    std::cerr << "oracle: implied c disagrees with engine value "
              << factoprod::to_decimal(engine_c) << "\n";
    return kExitCheckFailed;
  }

  if (args.list_tables) {
    if (shape.product() > 9) {
      std::cerr << "oracle: --list-tables requires at most 9 cells\n";
      return kExitUsage;
    }
    int selection_index = 0;
    factoprod::for_each_covering_selection(
        args.k, shape, [&](const std::vector<std::vector<int>>& cells) {
          std::cout << "selection " << ++selection_index << ":";
          for (const auto& cell : cells) {
            std::cout << " (";
            for (std::size_t d = 0; d < cell.size(); ++d)
              std::cout << (d ? "," : "") << cell[d] + 1;
            std::cout << ")";
          }
          std::cout << "\n";
        });
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coefficients for falling factorial powers of products"};
  app.require_subcommand(1);

  const auto methods = method_names();

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "print the k x k coefficient table");
  table->add_option("k", table_args.k, "table order")->required()->check(CLI::PositiveNumber);
  table->add_option("--format", table_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  table->add_option("--method", table_args.method,
                    "construction method (default recurrence)")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  table->add_option("--out", table_args.out, "write to file instead of stdout");
  table->add_option("--cache-dir", table_args.cache_dir,
                    "cache directory (default $FACTOPROD_CACHE_DIR)");
  table->add_option("--k-max", table_args.k_cap, "raise the desk-scale cap on k")
      ->capture_default_str();
  table->add_flag("--header", table_args.header, "emit a CSV header line");
  table->add_flag("--no-provenance", table_args.no_provenance,
                  "omit the provenance block (deterministic output)");

  CoeffArgs coeff_args;
  CLI::App* coeff = app.add_subcommand("coeff", "print one coefficient c^(k)_L");
  coeff->add_option("k", coeff_args.k, "order")->required()->check(CLI::PositiveNumber);
  coeff->add_option("L", coeff_args.components, "index components (n >= 1)")
      ->required()
      ->expected(-1);
  coeff->add_option("--method", coeff_args.method,
                    "computation method (default stirling)")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  coeff->add_option("--k-max", coeff_args.k_cap, "raise the desk-scale cap on k")
      ->capture_default_str();

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--k-max", verify_args.k_max, "largest order checked")
      ->check(CLI::Range(1, kDefaultTableCap))
      ->capture_default_str();
  verify->add_option("--n-max", verify_args.n_max, "largest dimension checked")
      ->check(CLI::Range(2, 4))
      ->capture_default_str();
  verify->add_option("--pascal-cap", verify_args.pascal_cap,
                     "largest k for the k^2 x k^2 product-matrix check")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();

  int analyze_k = 0;
  CLI::App* analyze =
      app.add_subcommand("analyze", "determinant, inertia and log-concavity of C");
  analyze->add_option("k", analyze_k, "order")
      ->required()
      ->check(CLI::Range(1, kDefaultTableCap));

  OracleArgs oracle_args;
  CLI::App* oracle =
      app.add_subcommand("oracle", "enumerate ranking tables for a shape");
  oracle->add_option("k", oracle_args.k, "number of ranks")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle->add_option("shape", oracle_args.shape, "side lengths (n >= 2)")
      ->required()
      ->expected(-2);
  oracle->add_option("--max-cells", oracle_args.max_cells,
                     "enumeration cap on the cell count")
      ->capture_default_str();
  oracle->add_flag("--list-tables", oracle_args.list_tables,
                   "also list covering selections (at most 9 cells)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return run_table(table_args);
    if (*coeff) return run_coeff(coeff_args);
    if (*verify) return run_verify(verify_args);
    if (*analyze) return run_analyze(analyze_k);
    if (*oracle) return run_oracle(oracle_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

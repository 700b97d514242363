#include "factoprod/checks.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "factoprod/matrix_analysis.hpp"
#include "factoprod/oracle.hpp"
#include "factoprod/stirling.hpp"

namespace factoprod {

namespace {

constexpr const char* kGoldenC9[9][9] = {
    {"0", "0", "0", "0", "0", "0", "0", "0", "1"},
    {"0", "0", "0", "0", "15120", "40320", "24192", "4608", "255"},
    {"0", "0", "10080", "544320", "1958040", "1796760", "588168", "74124",
     "3025"},
    {"0", "0", "544320", "6108480", "12267360", "7988904", "2066232", "218484",
     "7770"},
    {"0", "15120", "1958040", "12267360", "18329850", "9874746", "2229402",
     "212436", "6951"},
    {"0", "40320", "1796760", "7988904", "9874746", "4690350", "965790",
     "85680", "2646"},
    {"0", "24192", "588168", "2066232", "2229402", "965790", "185766", "15624",
     "462"},
    {"0", "4608", "74124", "218484", "212436", "85680", "15624", "1260", "36"},
    {"1", "255", "3025", "7770", "6951", "2646", "462", "36", "1"},
};

CheckResult pass(std::string name, std::string detail) {
  return CheckResult{std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail)};
}

// Wraps a check body so that internal-consistency exceptions (divisibility,
// factorization or determinant mismatches) surface as failed results.
template <typename Fn>
CheckResult guarded(const std::string& name, Fn&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return fail(name, e.what());
  }
}

Int c_from_mobius(int k, int l, int m) {
  const Int numerator = b_mobius(k, l, m) * factorial(static_cast<unsigned long>(k));
  const Int denominator = MultiIndex{l, m}.factorial_product();
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    throw std::logic_error("mobius value not an l!m!/k! multiple at k=" +
                           std::to_string(k));
  Int q;
  mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return q;
}

std::string cell_name(int k, int l, int m) {
  std::ostringstream os;
  os << "k=" << k << " (" << l << "," << m << ")";
  return os.str();
}

}  // namespace

const CoeffTable2D& golden_c9() {
  static const CoeffTable2D table = [] {
    CoeffTable2D t(9);
    for (int l = 1; l <= 9; ++l)
      for (int m = 1; m <= 9; ++m)
        t.at(l, m) = int_from_decimal(kGoldenC9[l - 1][m - 1]);
    return t;
  }();
  return table;
}

CheckResult check_golden_c9_all_methods() {
  const std::string name = "golden-c9-all-methods";
  return guarded(name, [&] {
    const CoeffTable2D& golden = golden_c9();
    const CoeffTable2D recurrence = table_recurrence(9);
    for (int l = 1; l <= 9; ++l)
      for (int m = 1; m <= 9; ++m) {
        const Int& expected = golden.at(l, m);
        if (recurrence.at(l, m) != expected)
          return fail(name, "recurrence mismatch at " + cell_name(9, l, m));
        if (c_stirling(9, l, m) != expected)
          return fail(name, "stirling mismatch at " + cell_name(9, l, m));
        if (c_inclusion_exclusion(9, l, m) != expected)
          return fail(name, "inclusion-exclusion mismatch at " + cell_name(9, l, m));
        if (c_from_mobius(9, l, m) != expected)
          return fail(name, "mobius mismatch at " + cell_name(9, l, m));
      }
    return pass(name, "all four methods reproduce the 9x9 reference table");
  });
}

CheckResult check_cross_method_2d(int k_max) {
  const std::string name = "cross-method-2d";
  return guarded(name, [&] {
    for (int k = 1; k <= k_max; ++k) {
      const CoeffTable2D table = table_recurrence(k);
      for (int l = 1; l <= k; ++l)
        for (int m = 1; m <= k; ++m) {
          const Int expected = c_stirling(k, l, m);
          if (table.at(l, m) != expected)
            return fail(name, "recurrence vs stirling at " + cell_name(k, l, m));
          if (c_inclusion_exclusion(k, l, m) != expected)
            return fail(name,
                        "inclusion-exclusion vs stirling at " + cell_name(k, l, m));
          if (c_from_mobius(k, l, m) != expected)
            return fail(name, "mobius vs stirling at " + cell_name(k, l, m));
        }
    }
    return pass(name, "four methods agree for k <= " + std::to_string(k_max));
  });
}

CheckResult check_cross_method_multi(int n, int k_max) {
  const std::string name = "cross-method-" + std::to_string(n) + "d";
  return guarded(name, [&] {
    for (int k = 1; k <= k_max; ++k) {
      const CoeffTableND table = table_multi_recurrence(k, n);
      CheckResult bad = pass(name, "");
      bool ok = true;
      table.for_each_index([&](const MultiIndex& index) {
        if (!ok) return;
        const Int expected = c_multi_stirling(k, index);
        if (table.at(index) != expected ||
            c_multi_inclusion_exclusion(k, index) != expected ||
            c_multi_inversion(k, index) != expected) {
          std::ostringstream os;
          os << "method disagreement at k=" << k << " n=" << n;
          bad = fail(name, os.str());
          ok = false;
        }
      });
      if (!ok) return bad;
    }
    std::ostringstream os;
    os << "three methods agree on [1,k]^" << n << " for k <= " << k_max;
    return pass(name, os.str());
  });
}

CheckResult check_oracle_2d(int k_max, int side_max) {
  const std::string name = "oracle-2d";
  return guarded(name, [&] {
    for (int k = 1; k <= k_max; ++k)
      for (int l = 1; l <= side_max; ++l)
        for (int m = 1; m <= side_max; ++m) {
          const MultiIndex shape{l, m};
          const Int counted = count_ranking_tables(k, shape);
          const Int expected =
              (l <= k && m <= k)
                  ? shape.factorial_product() * c_stirling(k, l, m)
                  : Int(0);
          if (counted != expected)
            return fail(name, "enumeration vs engine at " + cell_name(k, l, m));
        }
    std::ostringstream os;
    os << "table counts equal l!m!c for k <= " << k_max << ", sides <= "
       << side_max;
    return pass(name, os.str());
  });
}

CheckResult check_oracle_3d(int k_max, int side_max) {
  const std::string name = "oracle-3d";
  return guarded(name, [&] {
    for (int k = 1; k <= k_max; ++k)
      for (int l1 = 1; l1 <= side_max; ++l1)
        for (int l2 = 1; l2 <= side_max; ++l2)
          for (int l3 = 1; l3 <= side_max; ++l3) {
            const MultiIndex shape{l1, l2, l3};
            const Int counted = count_ranking_tables(k, shape);
            const bool in_range = l1 <= k && l2 <= k && l3 <= k;
            const Int expected =
                in_range ? shape.factorial_product() * c_multi_stirling(k, shape)
                         : Int(0);
            if (counted != expected) {
              std::ostringstream os;
              os << "enumeration vs engine at k=" << k << " (" << l1 << ","
                 << l2 << "," << l3 << ")";
              return fail(name, os.str());
            }
          }
    std::ostringstream os;
    os << "3d table counts equal L!c for k <= " << k_max << ", sides <= "
       << side_max;
    return pass(name, os.str());
  });
}

CheckResult check_expansion(int n, int k_max) {
  const std::string name = "expansion-identity-" + std::to_string(n) + "d";
  return guarded(name, [&] {
    for (int k = 1; k <= k_max; ++k)
      if (!verify_expansion_by_evaluation(k, n))
        return fail(name, "evaluation mismatch at k=" + std::to_string(k) +
                              " n=" + std::to_string(n));
    std::ostringstream os;
    os << "grid evaluation agrees for n=" << n << ", k <= " << k_max;
    return pass(name, os.str());
  });
}

CheckResult check_matrix_claims(int k_max) {
  const std::string name = "matrix-claims";
  return guarded(name, [&] {
    for (int k = 1; k <= k_max; ++k) {
      build_factorization(k);  // throws on product mismatch
      det_C(k);                // throws on route disagreement
      const InertiaReport report = inertia(k);
      const InertiaReport expected{(k + 1) / 2, k / 2, 0};
      if (report != expected) {
        std::ostringstream os;
        os << "inertia (" << report.positives << "," << report.negatives << ","
           << report.zeros << ") != expected at k=" << k;
        return fail(name, os.str());
      }
    }
    std::ostringstream os;
    os << "factorization, determinant routes and inertia hold for k <= " << k_max;
    return pass(name, os.str());
  });
}

CheckResult check_anti_diagonal_log_concavity(int k_max) {
  const std::string name = "anti-diagonal-log-concavity";
  return guarded(name, [&] {
    for (int k = 2; k <= k_max; ++k) {
      const LogConcavityReport report = log_concavity_report(k);
      if (!report.anti_diagonals_hold()) {
        for (const SequenceVerdict& v : report.anti_diagonals)
          if (!v.holds) {
            std::ostringstream os;
            os << "violated at k=" << k << " l+m=" << v.index;
            return fail(name, os.str());
          }
      }
    }
    return pass(name,
                "all anti-diagonals log-concave for k <= " + std::to_string(k_max));
  });
}

CheckResult check_log_concavity_observations(int k_max) {
  const std::string name = "log-concavity-observations";
  return guarded(name, [&] {
    int counterexamples = 0;
    std::ostringstream notes;
    for (int k = 2; k <= k_max; ++k) {
      const LogConcavityReport report = log_concavity_report(k);
      for (const auto* family : {&report.rows, &report.diagonals})
        for (const SequenceVerdict& v : *family)
          if (!v.holds) {
            ++counterexamples;
            notes << " [conjecture counterexample: k=" << k << " " << v.family
                  << " " << v.index << "]";
          }
    }
    if (counterexamples > 0)
      return pass(name, "rows/diagonals: " + std::to_string(counterexamples) +
                            " counterexample(s) observed" + notes.str());
    return pass(name, "rows and diagonals log-concave for k <= " +
                          std::to_string(k_max) + " (conjecture, observed)");
  });
}

CheckResult check_pascal(int k_cap) {
  const std::string name = "pascal-product-inverse";
  return guarded(name, [&] {
    for (int k = 1; k <= k_cap; ++k)
      if (!pascal_product_check(k))
        return fail(name, "identity fails at k=" + std::to_string(k));
    std::ostringstream os;
    os << "A lower triangular, det 1 and BA = I up to k = " << k_cap << " ("
       << k_cap * k_cap << "x" << k_cap * k_cap << ")";
    return pass(name, os.str());
  });
}

CheckResult check_zero_pattern_2d(int k_max) {
  const std::string name = "zero-pattern-2d";
  return guarded(name, [&] {
    for (int k = 1; k <= k_max; ++k) {
      const CoeffTable2D table = table_recurrence(k);
      for (int l = 1; l <= k; ++l)
        for (int m = 1; m <= k; ++m) {
          const Int& v = table.at(l, m);
          const bool should_vanish = static_cast<long>(l) * m < k;
          if (should_vanish ? v != 0 : v <= 0)
            return fail(name, "pattern broken at " + cell_name(k, l, m));
        }
    }
    return pass(name, "c = 0 iff lm < k, positive otherwise, for k <= " +
                          std::to_string(k_max));
  });
}

CheckResult check_zero_pattern_3d(int k_max) {
  const std::string name = "zero-pattern-3d";
  return guarded(name, [&] {
    for (int k = 1; k <= k_max; ++k) {
      const CoeffTableND table = table_multi_recurrence(k, 3);
      bool ok = true;
      MultiIndex where;
      table.for_each_index([&](const MultiIndex& index) {
        if (!ok) return;
        const Int& v = table.at(index);
        const bool should_vanish = index.product() < k;
        if (should_vanish ? v != 0 : v <= 0) {
          ok = false;
          where = index;
        }
      });
      if (!ok)
        return fail(name, "pattern broken at k=" + std::to_string(k));
    }
    return pass(name, "c = 0 iff prod(L) < k for n=3, k <= " +
                          std::to_string(k_max));
  });
}

CheckResult check_structural_rows(int k_max) {
  const std::string name = "structural-rows";
  return guarded(name, [&] {
    for (int k = 1; k <= k_max; ++k) {
      const CoeffTable2D table = table_recurrence(k);
      for (int m = 1; m <= k; ++m) {
        if (table.at(k, m) != stirling2(k, m))
          return fail(name, "last row != S2 at " + cell_name(k, k, m));
        const Int expected_first = (m == k) ? 1 : 0;
        if (table.at(1, m) != expected_first)
          return fail(name, "first row != unit row at " + cell_name(k, 1, m));
      }
    }
    return pass(name, "last row = S2 row, first row = k-th unit row, k <= " +
                          std::to_string(k_max));
  });
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  const int k_max = options.k_max;
  results.push_back(check_cross_method_2d(k_max));
  if (options.n_max >= 3)
    results.push_back(check_cross_method_multi(3, std::min(k_max, 6)));
  if (options.n_max >= 4)
    results.push_back(check_cross_method_multi(4, std::min(k_max, 4)));
  if (k_max >= 9) results.push_back(check_golden_c9_all_methods());
  results.push_back(check_oracle_2d(std::min(k_max, 6), 4));
  if (options.n_max >= 3)
    results.push_back(check_oracle_3d(std::min(k_max, 5), 3));
  results.push_back(check_expansion(2, std::min(k_max, 10)));
  if (options.n_max >= 3)
    results.push_back(check_expansion(3, std::min(k_max, 6)));
  results.push_back(check_matrix_claims(k_max));
  if (k_max >= 2) {
    results.push_back(check_anti_diagonal_log_concavity(k_max));
    results.push_back(check_log_concavity_observations(k_max));
  }
  results.push_back(check_zero_pattern_2d(k_max));
  if (options.n_max >= 3)
    results.push_back(check_zero_pattern_3d(std::min(k_max, 6)));
  results.push_back(check_structural_rows(k_max));
  results.push_back(check_pascal(options.pascal_cap));
  return results;
}

}  // namespace factoprod

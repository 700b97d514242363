#ifndef FACTOPROD_CHECKS_HPP
#define FACTOPROD_CHECKS_HPP

#include <string>
#include <vector>

#include "factoprod/coeff.hpp"

namespace factoprod {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The reference 9x9 coefficient table, embedded as golden data.
const CoeffTable2D& golden_c9();

// Individual desk-scale checks. Each returns a one-line verdict and never
// throws: internal-consistency exceptions are converted into failures.
CheckResult check_golden_c9_all_methods();
CheckResult check_cross_method_2d(int k_max);
CheckResult check_cross_method_multi(int n, int k_max);
CheckResult check_oracle_2d(int k_max, int side_max);
CheckResult check_oracle_3d(int k_max, int side_max);
CheckResult check_expansion(int n, int k_max);
CheckResult check_matrix_claims(int k_max);
CheckResult check_anti_diagonal_log_concavity(int k_max);
CheckResult check_log_concavity_observations(int k_max);  // never fails
CheckResult check_pascal(int k_cap);
CheckResult check_zero_pattern_2d(int k_max);
CheckResult check_zero_pattern_3d(int k_max);
CheckResult check_structural_rows(int k_max);

struct VerifyOptions {
  int k_max = 6;
  int n_max = 2;
  int pascal_cap = 5;
};

/// The full invariant suite at the given bounds, in a stable order.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace factoprod

#endif  // FACTOPROD_CHECKS_HPP

#include "factoprod/matrix_analysis.hpp"

#include <doctest.h>

#include <stdexcept>

#include "factoprod/checks.hpp"
#include "factoprod/stirling.hpp"

using factoprod::coefficient_matrix;
using factoprod::det_bareiss;
using factoprod::det_C;
using factoprod::Factorization;
using factoprod::inertia;
using factoprod::inertia_of;
using factoprod::InertiaReport;
using factoprod::Int;
using factoprod::IntMatrix;
using factoprod::LogConcavityReport;
using factoprod::SymmetricIntMatrix;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("basic matrix operations") {
  const IntMatrix a = from_rows({{1, 2}, {3, 4}});
  const IntMatrix b = from_rows({{5, 6}, {7, 8}});
  CHECK(a.multiply(b) == from_rows({{19, 22}, {43, 50}}));
  CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
  CHECK(IntMatrix::identity(2).multiply(a) == a);
  CHECK_THROWS_AS(a.multiply(IntMatrix(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
}

TEST_CASE("symmetric wrapper validates its input") {
  CHECK_NOTHROW(SymmetricIntMatrix(from_rows({{1, 2}, {2, 3}})));
  CHECK_THROWS_AS(SymmetricIntMatrix(from_rows({{1, 2}, {3, 4}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(SymmetricIntMatrix(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("coefficient matrix matches the reference table") {
  const SymmetricIntMatrix c9 = coefficient_matrix(9);
  const auto& golden = factoprod::golden_c9();
  for (int l = 1; l <= 9; ++l)
    for (int m = 1; m <= 9; ++m) CHECK(c9.at(l - 1, m - 1) == golden.at(l, m));
}

TEST_CASE("factorization components for k = 2") {
  const Factorization f = factoprod::build_factorization(2);
  CHECK(f.stirling_second == from_rows({{1, 1}, {0, 1}}));
  CHECK(f.sigma == from_rows({{-1, 0}, {0, 1}}));
}

TEST_CASE("factorization reproduces C for k up to 10") {
  for (int k = 1; k <= 10; ++k) CHECK_NOTHROW(factoprod::build_factorization(k));
}

TEST_CASE("fraction-free determinant on known matrices") {
  CHECK(det_bareiss(IntMatrix::identity(4)) == 1);
  CHECK(det_bareiss(from_rows({{0, 1}, {1, 1}})) == -1);  // needs a row swap
  CHECK(det_bareiss(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(det_bareiss(from_rows({{2, 0, 1}, {1, 3, 2}, {0, 1, 4}})) == 21);
  CHECK_THROWS_AS(det_bareiss(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant of C by both routes") {
  CHECK(det_C(1) == 1);
  CHECK(det_C(2) == -1);
  CHECK(det_C(3) == -6);  // 2 * (-3) * 1
  for (int k = 4; k <= 10; ++k) CHECK_NOTHROW(det_C(k));
}

TEST_CASE("inertia of C matches the alternating-sign count") {
  CHECK(inertia(1) == InertiaReport{1, 0, 0});
  CHECK(inertia(2) == InertiaReport{1, 1, 0});
  CHECK(inertia(9) == InertiaReport{5, 4, 0});
  for (int k = 1; k <= 10; ++k)
    CHECK(inertia(k) == InertiaReport{(k + 1) / 2, k / 2, 0});
}

TEST_CASE("congruence elimination handles degenerate pivots") {
  // diagonal with an explicit kernel direction
  CHECK(inertia_of(SymmetricIntMatrix(from_rows({{1, 0, 0}, {0, -2, 0}, {0, 0, 0}}))) ==
        InertiaReport{1, 1, 1});
  // zero matrix
  CHECK(inertia_of(SymmetricIntMatrix(IntMatrix(2, 2))) == InertiaReport{0, 0, 2});
  // zero diagonal, nonzero off-diagonal: signature (1, 1)
  CHECK(inertia_of(SymmetricIntMatrix(from_rows({{0, 1}, {1, 0}}))) ==
        InertiaReport{1, 1, 0});
}

TEST_CASE("log-concavity report covers every family") {
  const LogConcavityReport report = factoprod::log_concavity_report(9);
  CHECK(report.rows.size() == 9);
  CHECK(report.diagonals.size() == 17);
  CHECK(report.anti_diagonals.size() == 15);
  CHECK(report.anti_diagonals_hold());
  CHECK(report.rows_hold());
  CHECK(report.diagonals_hold());

  const LogConcavityReport small = factoprod::log_concavity_report(2);
  CHECK(small.anti_diagonals.size() == 1);
  CHECK(small.anti_diagonals_hold());
  CHECK_THROWS_AS(factoprod::log_concavity_report(1), std::invalid_argument);
}

TEST_CASE("pascal product identity at small orders") {
  CHECK(factoprod::pascal_product_check(1));
  CHECK(factoprod::pascal_product_check(2));
  CHECK(factoprod::pascal_product_check(4));
}

#ifndef FACTOPROD_MATRIX_ANALYSIS_HPP
#define FACTOPROD_MATRIX_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "factoprod/coeff.hpp"
#include "factoprod/exact.hpp"

namespace factoprod {

// Dense matrix of exact integers, 0-based indices.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Int& at(int r, int c) const;
  Int& at(int r, int c);

  IntMatrix multiply(const IntMatrix& other) const;
  IntMatrix transpose() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Int> data_;
};

// Square symmetric matrix; symmetry is validated at construction.
class SymmetricIntMatrix {
 public:
  explicit SymmetricIntMatrix(IntMatrix m);

  int dim() const { return matrix_.rows(); }
  const Int& at(int i, int j) const { return matrix_.at(i, j); }
  const IntMatrix& matrix() const { return matrix_; }

 private:
  IntMatrix matrix_;
};

/// C^(k) as a matrix, entry (l-1, m-1) = c^(k)_{l,m}.
SymmetricIntMatrix coefficient_matrix(int k);

struct Factorization {
  IntMatrix stirling_second;  // upper triangular, (l-1,m-1) = S2(m,l) for l <= m
  IntMatrix sigma;            // diagonal, (l-1,l-1) = (-1)^(k-l) s1(k,l)
};

/// The matrices with C^(k) = S2 Sigma S2^T; the product is checked entrywise
/// against the recurrence table and a mismatch throws std::logic_error.
Factorization build_factorization(int k);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Int det_bareiss(IntMatrix m);

/// det C^(k), computed both as prod_l (-1)^(k-l) s1(k,l) and by exact
/// elimination; the two routes must agree or std::logic_error is thrown.
Int det_C(int k);

struct InertiaReport {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;

  bool operator==(const InertiaReport&) const = default;
};

/// Inertia of a symmetric matrix by congruence elimination over exact
/// rationals. Zero diagonal pivots are handled by a symmetric swap with a
/// later nonzero diagonal entry, or failing that by a congruence row+column
/// addition that manufactures one; both preserve the signature.
InertiaReport inertia_of(const SymmetricIntMatrix& matrix);

/// Inertia of C^(k); the expected value is (ceil(k/2), floor(k/2), 0).
InertiaReport inertia(int k);

struct SequenceVerdict {
  struct Violation {
    int position;  // index of the middle element within the sequence, 0-based
    Int before, middle, after;
  };

  std::string family;  // "row", "diagonal" or "anti-diagonal"
  int index;           // row l; diagonal offset m-l; anti-diagonal sum l+m
  bool holds = true;
  std::optional<Violation> violation;
};

// Log-concavity verdicts for every maximal row, diagonal and anti-diagonal
// of C^(k). Anti-diagonal failures contradict a proven statement; row and
// diagonal verdicts are observations about a conjecture.
struct LogConcavityReport {
  int k = 0;
  std::vector<SequenceVerdict> rows;
  std::vector<SequenceVerdict> diagonals;
  std::vector<SequenceVerdict> anti_diagonals;

  bool rows_hold() const;
  bool diagonals_hold() const;
  bool anti_diagonals_hold() const;
};

/// Checks a(i-1)*a(i+1) <= a(i)^2 over every maximal sequence of the three
/// families, zeros included. Requires k >= 2.
LogConcavityReport log_concavity_report(int k);

/// Builds the k^2 x k^2 matrix A of products of two binomial coefficients,
/// A_{ij} = C(L(i),L(j)) C(M(i),M(j)) with L(i) = floor((i-1)/k)+1 and
/// M(i) = ((i-1) mod k)+1, and verifies: A lower triangular with unit
/// diagonal, det A = 1 by elimination, and B A = I for the entrywise signed
/// copy B. Returns true iff all hold.
bool pascal_product_check(int k);

}  // namespace factoprod

#endif  // FACTOPROD_MATRIX_ANALYSIS_HPP

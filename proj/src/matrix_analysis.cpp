#include "factoprod/matrix_analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "factoprod/stirling.hpp"

namespace factoprod {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("IntMatrix dimensions must be >= 1");
  data_.resize(static_cast<std::size_t>(rows) * cols);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

const Int& IntMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("IntMatrix index out of range");
  return data_[static_cast<std::size_t>(r) * cols_ + c];
}

Int& IntMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("IntMatrix index out of range");
  return data_[static_cast<std::size_t>(r) * cols_ + c];
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("IntMatrix multiply: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int t = 0; t < cols_; ++t) {
      const Int& a = at(i, t);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(t, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

SymmetricIntMatrix::SymmetricIntMatrix(IntMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("SymmetricIntMatrix: matrix not square");
  for (int i = 0; i < matrix_.rows(); ++i)
    for (int j = i + 1; j < matrix_.cols(); ++j)
      if (matrix_.at(i, j) != matrix_.at(j, i))
        throw std::invalid_argument("SymmetricIntMatrix: matrix not symmetric");
}

SymmetricIntMatrix coefficient_matrix(int k) {
  CoeffTable2D table = table_recurrence(k);
  IntMatrix m(k, k);
  for (int l = 1; l <= k; ++l)
    for (int c = 1; c <= k; ++c) m.at(l - 1, c - 1) = table.at(l, c);
  return SymmetricIntMatrix(std::move(m));
}

Factorization build_factorization(int k) {
  if (k < 1) throw std::invalid_argument("build_factorization: k must be >= 1");
  IntMatrix s2(k, k);
  for (int l = 1; l <= k; ++l)
    for (int m = l; m <= k; ++m) s2.at(l - 1, m - 1) = stirling2(m, l);
  IntMatrix sigma(k, k);
  for (int l = 1; l <= k; ++l) {
    Int v = stirling1_unsigned(k, l);
    if ((k - l) % 2 != 0) v = -v;
    sigma.at(l - 1, l - 1) = v;
  }
  IntMatrix product = s2.multiply(sigma).multiply(s2.transpose());
  if (product != coefficient_matrix(k).matrix()) {
    std::ostringstream os;
    os << "factorization S2 Sigma S2^T does not reproduce C at k=" << k;
    throw std::logic_error(os.str());
  }
  return Factorization{std::move(s2), std::move(sigma)};
}

Int det_bareiss(IntMatrix m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det_bareiss: matrix not square");
  const int n = m.rows();
  int sign = 1;
  Int prev = 1;
  for (int i = 0; i < n; ++i) {
    int pivot = -1;
    for (int r = i; r < n; ++r)
      if (m.at(r, i) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != i) {
      for (int c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(pivot, c));
      sign = -sign;
    }
    for (int r = i + 1; r < n; ++r) {
      for (int c = i + 1; c < n; ++c) {
        Int numerator = m.at(i, i) * m.at(r, c) - m.at(r, i) * m.at(i, c);
        mpz_divexact(m.at(r, c).get_mpz_t(), numerator.get_mpz_t(),
                     prev.get_mpz_t());
      }
      m.at(r, i) = 0;
    }
    prev = m.at(i, i);
  }
  return sign * m.at(n - 1, n - 1);
}

Int det_C(int k) {
  if (k < 1) throw std::invalid_argument("det_C: k must be >= 1");
  Int by_formula = 1;
  for (int l = 1; l <= k; ++l) {
    Int factor = stirling1_unsigned(k, l);
    if ((k - l) % 2 != 0) factor = -factor;
    by_formula *= factor;
  }
  Int by_elimination = det_bareiss(coefficient_matrix(k).matrix());
  if (by_formula != by_elimination) {
    std::ostringstream os;
    os << "det C disagreement at k=" << k << ": formula "
       << by_formula.get_str() << " vs elimination " << by_elimination.get_str();
    throw std::logic_error(os.str());
  }
  return by_formula;
}

InertiaReport inertia_of(const SymmetricIntMatrix& matrix) {
  const int n = matrix.dim();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(matrix.at(i, j));

  auto swap_symmetric = [&](int i, int j) {
    for (int c = 0; c < n; ++c) std::swap(a[i][c], a[j][c]);
    for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  };
  auto add_symmetric = [&](int i, int j) {  // row_i += row_j, col_i += col_j
    for (int c = 0; c < n; ++c) a[i][c] += a[j][c];
    for (int r = 0; r < n; ++r) a[r][i] += a[r][j];
  };

  InertiaReport report;
  for (int i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      int diag = -1;
      for (int j = i + 1; j < n; ++j)
        if (a[j][j] != 0) {
          diag = j;
          break;
        }
      if (diag >= 0) {
        swap_symmetric(i, diag);
      } else {
        int off = -1;
        for (int j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            off = j;
            break;
          }
        if (off < 0) {
          // the whole remaining row/column is zero: a genuine kernel direction
          ++report.zeros;
          continue;
        }
        // remaining diagonal is all zero; adding row+column `off` makes the
        // pivot 2*a[i][off] != 0, and the transform is a congruence
        add_symmetric(i, off);
      }
    }
    const Rat pivot = a[i][i];
    if (pivot > 0)
      ++report.positives;
    else
      ++report.negatives;
    for (int r = i + 1; r < n; ++r) {
      if (a[r][i] == 0) continue;
      const Rat f = a[r][i] / pivot;
      for (int c = 0; c < n; ++c) a[r][c] -= f * a[i][c];
      for (int c = 0; c < n; ++c) a[c][r] -= f * a[c][i];
    }
  }
  return report;
}

InertiaReport inertia(int k) { return inertia_of(coefficient_matrix(k)); }

namespace {

SequenceVerdict check_sequence(std::string family, int index,
                               const std::vector<Int>& seq) {
  SequenceVerdict verdict;
  verdict.family = std::move(family);
  verdict.index = index;
  for (int i = 1; i + 1 < static_cast<int>(seq.size()); ++i) {
    if (seq[i - 1] * seq[i + 1] > seq[i] * seq[i]) {
      verdict.holds = false;
      verdict.violation =
          SequenceVerdict::Violation{i, seq[i - 1], seq[i], seq[i + 1]};
      break;
    }
  }
  return verdict;
}

bool all_hold(const std::vector<SequenceVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const SequenceVerdict& v) { return v.holds; });
}

}  // namespace

bool LogConcavityReport::rows_hold() const { return all_hold(rows); }
bool LogConcavityReport::diagonals_hold() const { return all_hold(diagonals); }
bool LogConcavityReport::anti_diagonals_hold() const {
  return all_hold(anti_diagonals);
}

LogConcavityReport log_concavity_report(int k) {
  if (k < 2) throw std::invalid_argument("log_concavity_report: k must be >= 2");
  CoeffTable2D table = table_recurrence(k);
  LogConcavityReport report;
  report.k = k;
  for (int l = 1; l <= k; ++l) {
    std::vector<Int> seq;
    for (int m = 1; m <= k; ++m) seq.push_back(table.at(l, m));
    report.rows.push_back(check_sequence("row", l, seq));
  }
  for (int d = -(k - 1); d <= k - 1; ++d) {  // entries with m - l = d
    std::vector<Int> seq;
    for (int l = std::max(1, 1 - d); l <= std::min(k, k - d); ++l)
      seq.push_back(table.at(l, l + d));
    report.diagonals.push_back(check_sequence("diagonal", d, seq));
  }
  for (int s = 3; s <= 2 * k - 1; ++s) {  // entries with l + m = s
    std::vector<Int> seq;
    for (int l = std::max(1, s - k); l <= std::min(k, s - 1); ++l)
      seq.push_back(table.at(l, s - l));
    report.anti_diagonals.push_back(check_sequence("anti-diagonal", s, seq));
  }
  return report;
}

bool pascal_product_check(int k) {
  if (k < 1) throw std::invalid_argument("pascal_product_check: k must be >= 1");
  const int dim = k * k;
  auto row_of = [k](int i) { return (i - 1) / k + 1; };  // L(i), 1-based i
  auto col_of = [k](int i) { return (i - 1) % k + 1; };  // M(i)

  IntMatrix a(dim, dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j)
      a.at(i - 1, j - 1) =
          binomial(row_of(i), row_of(j)) * binomial(col_of(i), col_of(j));

  for (int i = 0; i < dim; ++i) {
    if (a.at(i, i) != 1) return false;
    for (int j = i + 1; j < dim; ++j)
      if (a.at(i, j) != 0) return false;  // must be lower triangular
  }
  if (det_bareiss(a) != 1) return false;

  IntMatrix b(dim, dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) {
      Int v = a.at(i - 1, j - 1);
      if ((row_of(i) + row_of(j) + col_of(i) + col_of(j)) % 2 != 0) v = -v;
      b.at(i - 1, j - 1) = v;
    }
  return b.multiply(a) == IntMatrix::identity(dim);
}

}  // namespace factoprod

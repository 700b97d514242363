#ifndef FACTOPROD_COEFF_HPP
#define FACTOPROD_COEFF_HPP

#include <cstddef>
#include <vector>

#include "factoprod/exact.hpp"

namespace factoprod {

// Index L = (l_1, ..., l_n) into an n-variable coefficient table, 1-based
// components. For a table of order k every component lies in [1, k].
struct MultiIndex {
  std::vector<int> components;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> init) : components(init) {}
  explicit MultiIndex(std::vector<int> comps) : components(std::move(comps)) {}

  int dims() const { return static_cast<int>(components.size()); }
  long product() const;
  long sum() const;
  Int factorial_product() const;  // L! = l_1! l_2! ... l_n!

  bool operator==(const MultiIndex&) const = default;
};

// Symmetric k x k table of the coefficients c^(k)_{l,m} expanding the
// falling factorial of a product xy in products of falling factorials of
// x and y. Indices are 1-based.
class CoeffTable2D {
 public:
  explicit CoeffTable2D(int k);

  int k() const { return k_; }
  const Int& at(int l, int m) const;
  Int& at(int l, int m);

  bool operator==(const CoeffTable2D&) const = default;

 private:
  int k_;
  std::vector<Int> entries_;  // row-major, (l-1)*k + (m-1)
};

// n-variable analog, dense over [1,k]^n.
class CoeffTableND {
 public:
  CoeffTableND(int k, int n);

  int k() const { return k_; }
  int dims() const { return n_; }
  const Int& at(const MultiIndex& index) const;
  Int& at(const MultiIndex& index);

  /// Visits every index of [1,k]^n in lexicographic order.
  template <typename Fn>
  void for_each_index(Fn&& fn) const {
    MultiIndex index(std::vector<int>(n_, 1));
    for (;;) {
      fn(static_cast<const MultiIndex&>(index));
      int d = n_ - 1;
      while (d >= 0 && index.components[d] == k_) index.components[d--] = 1;
      if (d < 0) return;
      ++index.components[d];
    }
  }

  bool operator==(const CoeffTableND&) const = default;

 private:
  std::size_t offset(const MultiIndex& index) const;

  int k_;
  int n_;
  std::vector<Int> entries_;
};

/// c^(k)_{l,m} by the Stirling closed form
///   sum_p (-1)^(k-p) s1(k,p) S2(p,l) S2(p,m).
Int c_stirling(int k, int l, int m);

/// Full table built bottom-up from c^(1)_{1,1} = 1 with the recurrence
///   c^(k+1)_{l+1,m+1} = c^(k)_{l,m} + (l+1) c^(k)_{l+1,m}
///                     + (m+1) c^(k)_{l,m+1} + ((l+1)(m+1)-k) c^(k)_{l+1,m+1},
/// indices outside [1,k] reading as 0.
CoeffTable2D table_recurrence(int k);

/// c^(k)_{l,m} by inclusion-exclusion over covering binary matrices:
///   (k!/(l! m!)) * sum_h sum_p (-1)^h C(l,p) C(m,m-h+p) C((l-p)(m-h+p), k).
/// The division is asserted exact; failure throws std::logic_error.
Int c_inclusion_exclusion(int k, int l, int m);

/// b^(k)_{l,m} = (l! m!/k!) c^(k)_{l,m} by Mobius inversion:
///   sum_{s,t=1}^k (-1)^(l+s+m+t) C(l,s) C(m,t) C(st,k).
Int b_mobius(int k, int l, int m);

/// n-variable Stirling closed form: sum_p (-1)^(k-p) s1(k,p) prod_i S2(p,l_i).
Int c_multi_stirling(int k, const MultiIndex& index);

/// n-variable recurrence table over [1,k]^n; reproduces table_recurrence for
/// n = 2.
CoeffTableND table_multi_recurrence(int k, int n);

/// n-variable inclusion-exclusion, summing over slice-deletion patterns M
/// with 0 <= m_i <= l_i; the surviving cell count is prod_i (l_i - m_i).
Int c_multi_inclusion_exclusion(int k, const MultiIndex& index);

/// n-variable matrix-inversion form:
///   (k!/L!) sum_{r_1..r_n=1}^k (-1)^(sum r_i + l_i) C(prod r_i, k) prod C(l_i,r_i).
Int c_multi_inversion(int k, const MultiIndex& index);

}  // namespace factoprod

#endif  // FACTOPROD_COEFF_HPP

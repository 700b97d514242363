#include "factoprod/coeff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "factoprod/stirling.hpp"

namespace factoprod {

namespace {

void check_order(int k) {
  if (k < 1) throw std::invalid_argument("coefficient order k must be >= 1");
}

void check_index_2d(int k, int l, int m) {
  check_order(k);
  if (l < 1 || l > k || m < 1 || m > k) {
    std::ostringstream os;
    os << "index (" << l << "," << m << ") out of range for k=" << k;
    throw std::invalid_argument(os.str());
  }
}

void check_index_nd(int k, const MultiIndex& index) {
  check_order(k);
  if (index.dims() < 1)
    throw std::invalid_argument("multi-index must have at least one component");
  for (int c : index.components) {
    if (c < 1 || c > k) {
      std::ostringstream os;
      os << "multi-index component " << c << " out of range for k=" << k;
      throw std::invalid_argument(os.str());
    }
  }
}

std::string index_to_string(const MultiIndex& index) {
  std::string s = "(";
  for (int i = 0; i < index.dims(); ++i) {
    if (i) s += ",";
    s += std::to_string(index.components[i]);
  }
  return s + ")";
}

// Exact division with an internal-consistency check: every closed form here
// yields a numerator that L! divides exactly, so a remainder means the
// engine itself is broken, never bad input.
Int divide_exact(const Int& numerator, const Int& denominator, int k,
                 const MultiIndex& index, const char* method) {
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    std::ostringstream os;
    os << "divisibility failure in " << method << " at k=" << k
       << " L=" << index_to_string(index) << ": " << numerator.get_str()
       << " not divisible by " << denominator.get_str();
    throw std::logic_error(os.str());
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return q;
}

}  // namespace

long MultiIndex::product() const {
  long p = 1;
  for (int c : components) p *= c;
  return p;
}

long MultiIndex::sum() const {
  long s = 0;
  for (int c : components) s += c;
  return s;
}

Int MultiIndex::factorial_product() const {
  Int f = 1;
  for (int c : components) f *= factorial(static_cast<unsigned long>(c));
  return f;
}

CoeffTable2D::CoeffTable2D(int k) : k_(k) {
  check_order(k);
  entries_.resize(static_cast<std::size_t>(k) * k);
}

const Int& CoeffTable2D::at(int l, int m) const {
  check_index_2d(k_, l, m);
  return entries_[static_cast<std::size_t>(l - 1) * k_ + (m - 1)];
}

Int& CoeffTable2D::at(int l, int m) {
  check_index_2d(k_, l, m);
  return entries_[static_cast<std::size_t>(l - 1) * k_ + (m - 1)];
}

CoeffTableND::CoeffTableND(int k, int n) : k_(k), n_(n) {
  check_order(k);
  if (n < 1) throw std::invalid_argument("table dimension n must be >= 1");
  constexpr std::size_t max_entries = std::size_t{1} << 24;
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::size_t>(k);
    if (size > max_entries)
      throw std::invalid_argument("dense table of k^n entries is too large");
  }
  entries_.resize(size);
}

std::size_t CoeffTableND::offset(const MultiIndex& index) const {
  if (index.dims() != n_)
    throw std::invalid_argument("multi-index dimension mismatch");
  check_index_nd(k_, index);
  std::size_t off = 0;
  for (int c : index.components) off = off * k_ + static_cast<std::size_t>(c - 1);
  return off;
}

const Int& CoeffTableND::at(const MultiIndex& index) const {
  return entries_[offset(index)];
}

Int& CoeffTableND::at(const MultiIndex& index) { return entries_[offset(index)]; }

Int c_stirling(int k, int l, int m) {
  check_index_2d(k, l, m);
  // S2(p,l) vanishes for p < l, so the sum effectively starts at max(l,m).
  Int total = 0;
  for (int p = std::max(l, m); p <= k; ++p) {
    Int term = stirling1_unsigned(k, p) * stirling2(p, l) * stirling2(p, m);
    if ((k - p) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

CoeffTable2D table_recurrence(int k) {
  check_order(k);
  CoeffTable2D table(1);
  table.at(1, 1) = 1;
  for (int kk = 1; kk < k; ++kk) {
    // ghost cells: indices outside [1,kk] contribute 0
    auto prev = [&](int l, int m) -> Int {
      if (l < 1 || l > kk || m < 1 || m > kk) return 0;
      return table.at(l, m);
    };
    CoeffTable2D next(kk + 1);
    for (int l = 0; l <= kk; ++l)
      for (int m = 0; m <= kk; ++m)
        next.at(l + 1, m + 1) = prev(l, m) + (l + 1) * prev(l + 1, m) +
                                (m + 1) * prev(l, m + 1) +
                                ((l + 1) * (m + 1) - kk) * prev(l + 1, m + 1);
    table = std::move(next);
  }
  return table;
}

Int c_inclusion_exclusion(int k, int l, int m) {
  check_index_2d(k, l, m);
  // |C| = number of l x m binary matrices with k ones and no zeroed row or
  // column; h counts zeroed slices, p of them rows.
  Int covering = 0;
  for (int h = 0; h <= l + m; ++h) {
    Int inner = 0;
    for (int p = 0; p <= h; ++p) {
      if (p > l || m - h + p < 0) continue;  // a selection factor is already 0
      inner += binomial(l, p) * binomial(m, m - h + p) *
               binomial(static_cast<long>(l - p) * (m - h + p), k);
    }
    covering += (h % 2 == 0) ? inner : -inner;
  }
  MultiIndex index{l, m};
  return divide_exact(factorial(static_cast<unsigned long>(k)) * covering,
                      index.factorial_product(), k, index, "inclusion-exclusion");
}

Int b_mobius(int k, int l, int m) {
  check_index_2d(k, l, m);
  Int total = 0;
  for (int s = 1; s <= k; ++s)
    for (int t = 1; t <= k; ++t) {
      Int term = binomial(l, s) * binomial(m, t) *
                 binomial(static_cast<long>(s) * t, k);
      if ((l + s + m + t) % 2 != 0) term = -term;
      total += term;
    }
  return total;
}

Int c_multi_stirling(int k, const MultiIndex& index) {
  check_index_nd(k, index);
  int p_min = 1;
  for (int c : index.components) p_min = std::max(p_min, c);
  Int total = 0;
  for (int p = p_min; p <= k; ++p) {
    Int term = stirling1_unsigned(k, p);
    for (int c : index.components) term *= stirling2(p, c);
    if ((k - p) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

CoeffTableND table_multi_recurrence(int k, int n) {
  check_order(k);
  if (n < 1) throw std::invalid_argument("table dimension n must be >= 1");
  CoeffTableND table(1, n);
  table.at(MultiIndex(std::vector<int>(n, 1))) = 1;
  for (int kk = 1; kk < k; ++kk) {
    auto prev = [&](const std::vector<int>& comps) -> Int {
      for (int c : comps)
        if (c < 1 || c > kk) return 0;
      return table.at(MultiIndex(comps));
    };
    CoeffTableND next(kk + 1, n);
    next.for_each_index([&](const MultiIndex& target_index) {
      const std::vector<int>& j = target_index.components;
      // Each subset S keeps the components in S at j_i and steps the rest
      // down to j_i - 1, weighted by prod_{i in S} j_i; the term at the
      // full index j itself additionally picks up -kk.
      Int acc = -Int(kk) * prev(j);
      std::vector<int> source(n);
      for (unsigned bits = 0; bits < (1u << n); ++bits) {
        Int coef = 1;
        for (int i = 0; i < n; ++i) {
          if (bits & (1u << i)) {
            source[i] = j[i];
            coef *= j[i];
          } else {
            source[i] = j[i] - 1;
          }
        }
        acc += coef * prev(source);
      }
      next.at(target_index) = acc;
    });
    table = std::move(next);
  }
  return table;
}

Int c_multi_inclusion_exclusion(int k, const MultiIndex& index) {
  check_index_nd(k, index);
  const int n = index.dims();
  // Odometer over deletion patterns M in [0,l_1] x ... x [0,l_n]; the sign
  // is (-1)^{|M|} and prod_i (l_i - m_i) cells survive.
  std::vector<int> m(n, 0);
  Int covering = 0;
  for (;;) {
    long surviving = 1;
    long h = 0;
    Int ways = 1;
    for (int i = 0; i < n; ++i) {
      surviving *= index.components[i] - m[i];
      h += m[i];
      ways *= binomial(index.components[i], m[i]);
    }
    Int term = ways * binomial(surviving, k);
    covering += (h % 2 == 0) ? term : -term;
    int d = n - 1;
    while (d >= 0 && m[d] == index.components[d]) m[d--] = 0;
    if (d < 0) break;
    ++m[d];
  }
  return divide_exact(factorial(static_cast<unsigned long>(k)) * covering,
                      index.factorial_product(), k, index, "inclusion-exclusion");
}

Int c_multi_inversion(int k, const MultiIndex& index) {
  check_index_nd(k, index);
  const int n = index.dims();
  std::vector<int> r(n, 1);
  Int total = 0;
  for (;;) {
    long rprod = 1;
    long rsum = 0;
    Int term = 1;
    for (int i = 0; i < n; ++i) {
      rprod *= r[i];
      rsum += r[i];
      term *= binomial(index.components[i], r[i]);
    }
    term *= binomial(rprod, k);
    if ((rsum + index.sum()) % 2 != 0) term = -term;
    total += term;
    int d = n - 1;
    while (d >= 0 && r[d] == k) r[d--] = 1;
    if (d < 0) break;
    ++r[d];
  }
  return divide_exact(factorial(static_cast<unsigned long>(k)) * total,
                      index.factorial_product(), k, index, "inversion");
}

}  // namespace factoprod

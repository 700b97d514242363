#ifndef FACTOPROD_STIRLING_HPP
#define FACTOPROD_STIRLING_HPP

#include <shared_mutex>
#include <vector>

#include "factoprod/exact.hpp"

namespace factoprod {

enum class StirlingKind {
  first_unsigned,  // permutations of k letters with l disjoint cycles
  second,          // partitions of a k-set into l nonempty subsets
};

// Memoized triangle of Stirling numbers, grown on demand. Queries outside
// the triangle (l < 1 or l > k) return 0, which is what the index-shifting
// sums in the coefficient engine expect. Reads of already-computed rows are
// safe from any thread; extension is internally synchronized.
class StirlingTriangle {
 public:
  explicit StirlingTriangle(StirlingKind kind, int initial_max_k = 0);

  StirlingKind kind() const { return kind_; }
  int max_k() const;

  /// Triangle entry for row k >= 1. Extends the triangle if k > max_k().
  Int value(int k, int l) const;

  /// Precompute all rows up to k.
  void ensure(int k) const;

 private:
  void extend_locked(int k) const;

  StirlingKind kind_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<Int>> rows_;  // rows_[k-1][l-1], l = 1..k
};

/// Unsigned Stirling number of the first kind, via a shared memoized triangle.
Int stirling1_unsigned(int k, int l);

/// Stirling number of the second kind, via a shared memoized triangle.
Int stirling2(int k, int l);

}  // namespace factoprod

#endif  // FACTOPROD_STIRLING_HPP

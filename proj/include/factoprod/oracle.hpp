#ifndef FACTOPROD_ORACLE_HPP
#define FACTOPROD_ORACLE_HPP

#include <functional>
#include <vector>

#include "factoprod/coeff.hpp"
#include "factoprod/exact.hpp"

namespace factoprod {

// Shape of an enumeration problem: rank the numbers 1..k into an
// l_1 x ... x l_n grid so that every axis-aligned slice is hit at least once.
struct RankingTableSpec {
  int k = 0;
  MultiIndex shape;

  long cells() const { return shape.product(); }
  /// A nonzero count needs k cells to fit and every slice to be coverable.
  bool feasible() const;
};

/// Number of k-subsets of the grid cells that meet every axis-aligned slice.
/// Equals b^(k)_L. Returns 0 when no covering selection exists.
Int count_covering_selections(int k, const MultiIndex& shape);

/// Number of ways to place the ranks 1..k into the grid with every slice
/// covered: count_covering_selections * k! = (prod_i l_i!) * c^(k)_L.
Int count_ranking_tables(int k, const MultiIndex& shape);

/// Evaluates both sides of the expansion of the falling factorial of
/// x_1 ... x_n at every grid point of {0..k}^n. Both sides have degree <= k
/// in each variable, so agreement on the grid is a polynomial identity.
/// A false return indicates an engine bug.
bool verify_expansion_by_evaluation(int k, int n);

/// Enumerates covering selections one at a time; each selection is the list
/// of chosen cells as n-dimensional 0-based coordinates. Used by the CLI's
/// table-listing debug flag.
void for_each_covering_selection(
    int k, const MultiIndex& shape,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit);

}  // namespace factoprod

#endif  // FACTOPROD_ORACLE_HPP

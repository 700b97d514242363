#include "factoprod/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "factoprod/coeff.hpp"
#include "factoprod/exact.hpp"

using factoprod::count_covering_selections;
using factoprod::count_ranking_tables;
using factoprod::factorial;
using factoprod::Int;
using factoprod::MultiIndex;
using factoprod::RankingTableSpec;

namespace {

// Independent oracle: walk every k-subset of the cells as a 0/1 mask in
// lexicographic order, no pruning, and test slice coverage directly.
long brute_force_covering(int k, const std::vector<int>& shape) {
  long total = 1;
  for (int s : shape) total *= s;
  if (k < 0 || k > total) return 0;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  long count = 0;
  for (;;) {
    bool covers = true;
    for (std::size_t d = 0; d < shape.size() && covers; ++d) {
      long stride = 1;
      for (std::size_t e = d + 1; e < shape.size(); ++e) stride *= shape[e];
      std::vector<bool> hit(shape[d], false);
      for (int cell : pick) hit[(cell / stride) % shape[d]] = true;
      for (int j = 0; j < shape[d]; ++j)
        if (!hit[j]) covers = false;
    }
    if (covers) ++count;
    int i = k - 1;
    while (i >= 0 && pick[i] == total - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

}  // namespace

TEST_CASE("covering selection counts, small cases") {
  CHECK(count_covering_selections(2, {2, 2}) == 2);  // the two diagonals
  CHECK(count_covering_selections(4, {2, 2}) == 1);  // only the full grid
  CHECK(count_covering_selections(9, {2, 5}) == 10);
  CHECK(count_covering_selections(1, {1, 1}) == 1);
  CHECK(count_covering_selections(2, {1, 1}) == 0);  // k exceeds the cells
}

TEST_CASE("pruned enumeration matches the unpruned oracle") {
  for (int l = 1; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m)
      for (int k = 1; k <= std::min(6, l * m); ++k)
        CHECK(count_covering_selections(k, {l, m}) ==
              brute_force_covering(k, {l, m}));
  for (int k = 1; k <= 6; ++k) {
    CHECK(count_covering_selections(k, {2, 2, 2}) ==
          brute_force_covering(k, {2, 2, 2}));
    CHECK(count_covering_selections(k, {1, 3, 2}) ==
          brute_force_covering(k, {1, 3, 2}));
  }
}

TEST_CASE("ranking table counts") {
  CHECK(count_ranking_tables(3, {2, 2}) == 24);
  CHECK(count_ranking_tables(2, {1, 2}) == 2);
  CHECK(count_ranking_tables(2, {1, 1}) == 0);
}

TEST_CASE("table counts equal the engine's factorial multiple") {
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m) {
        const MultiIndex shape{l, m};
        const Int expected = (l <= k && m <= k)
                                 ? shape.factorial_product() *
                                       factoprod::c_stirling(k, l, m)
                                 : Int(0);
        CHECK(count_ranking_tables(k, shape) == expected);
      }
}

TEST_CASE("equivalence-class counts satisfy the removal recurrence") {
  // d(k)_{l,m} = d(k-1)_{l-1,m-1} + m d(k-1)_{l-1,m} + l d(k-1)_{l,m-1}
  //            + (lm-(k-1)) d(k-1)_{l,m}
  auto d = [](int k, int l, int m) -> Int {
    if (k < 1 || l < 1 || m < 1) return 0;
    return count_covering_selections(k, MultiIndex{l, m}) * factorial(k) /
           MultiIndex{l, m}.factorial_product();
  };
  for (int k = 2; k <= 5; ++k)
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m)
        CHECK(d(k, l, m) == d(k - 1, l - 1, m - 1) + m * d(k - 1, l - 1, m) +
                                l * d(k - 1, l, m - 1) +
                                (l * m - (k - 1)) * d(k - 1, l, m));
}

TEST_CASE("covering count never exceeds the unconstrained count") {
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m) {
        const Int covering = count_covering_selections(k, {l, m});
        const Int all = factoprod::binomial(static_cast<long>(l) * m, k);
        CHECK(covering <= all);
      }
  // equality when every k-subset covers
  CHECK(count_covering_selections(9, {2, 5}) == factoprod::binomial(10, 9));
}

TEST_CASE("selection listing is consistent with the count") {
  int selections = 0;
  factoprod::for_each_covering_selection(
      3, {2, 2}, [&](const std::vector<std::vector<int>>& cells) {
        ++selections;
        CHECK(cells.size() == 3);
        for (const auto& cell : cells) CHECK(cell.size() == 2);
      });
  CHECK(selections == 4);
}

TEST_CASE("feasibility of table specs") {
  CHECK(RankingTableSpec{3, MultiIndex{2, 2}}.feasible());
  CHECK_FALSE(RankingTableSpec{5, MultiIndex{2, 2}}.feasible());  // too few cells
  CHECK_FALSE(RankingTableSpec{2, MultiIndex{3, 1}}.feasible());  // k < max side
  CHECK(RankingTableSpec{3, MultiIndex{3, 1}}.feasible());
}

TEST_CASE("expansion identity holds by grid evaluation") {
  CHECK(factoprod::verify_expansion_by_evaluation(3, 2));
  CHECK(factoprod::verify_expansion_by_evaluation(1, 4));
  CHECK(factoprod::verify_expansion_by_evaluation(6, 3));
  CHECK(factoprod::verify_expansion_by_evaluation(8, 2));
}

TEST_CASE("invalid enumeration arguments are rejected") {
  CHECK_THROWS_AS(count_covering_selections(0, MultiIndex{2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_covering_selections(2, MultiIndex{2, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_covering_selections(2, MultiIndex{}),
                  std::invalid_argument);
}

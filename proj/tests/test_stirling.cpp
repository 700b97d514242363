#include "factoprod/stirling.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

#include "factoprod/exact.hpp"

using factoprod::Int;
using factoprod::stirling1_unsigned;
using factoprod::stirling2;
using factoprod::StirlingKind;
using factoprod::StirlingTriangle;

namespace {

// Oracle: count permutations of k letters with exactly l cycles by walking
// all k! permutations.
long count_permutations_by_cycles(int k, int l) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    std::vector<bool> seen(k, false);
    int cycles = 0;
    for (int start = 0; start < k; ++start) {
      if (seen[start]) continue;
      ++cycles;
      for (int at = start; !seen[at]; at = perm[at]) seen[at] = true;
    }
    if (cycles == l) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Oracle: count partitions of a k-set into exactly l nonempty blocks by
// enumerating restricted-growth strings.
long count_partitions(int k, int l, std::vector<int>& assignment, int position,
                      int blocks_used) {
  if (position == k) return blocks_used == l ? 1 : 0;
  long count = 0;
  for (int block = 0; block <= blocks_used; ++block) {
    assignment[position] = block;
    count += count_partitions(k, l, assignment, position + 1,
                              std::max(blocks_used, block + 1));
  }
  return count;
}

long count_partitions(int k, int l) {
  std::vector<int> assignment(k);
  return count_partitions(k, l, assignment, 0, 0);
}

}  // namespace

TEST_CASE("first-kind triangle matches cycle enumeration") {
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= k; ++l)
      CHECK(stirling1_unsigned(k, l) == count_permutations_by_cycles(k, l));
}

TEST_CASE("second-kind triangle matches partition enumeration") {
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= k; ++l)
      CHECK(stirling2(k, l) == count_partitions(k, l));
}

TEST_CASE("special values") {
  for (int k = 1; k <= 12; ++k) {
    CHECK(stirling1_unsigned(k, k) == 1);
    CHECK(stirling2(k, k) == 1);
    CHECK(stirling2(k, 1) == 1);
  }
  CHECK(stirling1_unsigned(3, 1) == 2);  // the two 3-cycles
  CHECK(stirling1_unsigned(3, 2) == 3);
  CHECK(stirling2(9, 3) == 3025);
  CHECK(stirling2(9, 4) == 7770);
}

TEST_CASE("out-of-range queries return zero") {
  CHECK(stirling1_unsigned(4, 0) == 0);
  CHECK(stirling1_unsigned(4, 5) == 0);
  CHECK(stirling1_unsigned(4, -2) == 0);
  CHECK(stirling2(4, 0) == 0);
  CHECK(stirling2(4, 7) == 0);
  CHECK_THROWS_AS(stirling2(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(stirling1_unsigned(-1, 1), std::invalid_argument);
}

TEST_CASE("power-basis identities on an integer grid") {
  using factoprod::falling_factorial;
  for (int k = 1; k <= 10; ++k)
    for (int x = 0; x <= k; ++x) {
      Int xv(x);
      Int power = 1;
      for (int i = 0; i < k; ++i) power *= xv;

      Int from_second_kind = 0;  // x^k = sum_l S2(k,l) x^(l)
      for (int l = 1; l <= k; ++l)
        from_second_kind += stirling2(k, l) * falling_factorial(xv, l);
      CHECK(power == from_second_kind);

      Int from_first_kind = 0;  // x^(k) = sum_l (-1)^(k-l) s1(k,l) x^l
      for (int l = 1; l <= k; ++l) {
        Int xpow = 1;
        for (int i = 0; i < l; ++i) xpow *= xv;
        Int term = stirling1_unsigned(k, l) * xpow;
        from_first_kind += ((k - l) % 2 == 0) ? term : -term;
      }
      CHECK(falling_factorial(xv, k) == from_first_kind);
    }
}

TEST_CASE("first-kind rows sum to k!") {
  for (int k = 1; k <= 12; ++k) {
    Int sum = 0;
    for (int l = 1; l <= k; ++l) sum += stirling1_unsigned(k, l);
    CHECK(sum == factoprod::factorial(k));
  }
}

TEST_CASE("triangle extends on demand") {
  StirlingTriangle triangle(StirlingKind::second, 3);
  CHECK(triangle.max_k() == 3);
  CHECK(triangle.value(10, 4) == 34105);
  CHECK(triangle.max_k() >= 10);
}

TEST_CASE("concurrent mixed reads and extensions agree") {
  StirlingTriangle triangle(StirlingKind::first_unsigned);
  std::vector<std::thread> workers;
  std::vector<Int> results(8);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] { results[t] = triangle.value(20 + t, 5); });
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t)
    CHECK(results[t] == stirling1_unsigned(20 + t, 5));
}

#include "factoprod/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace factoprod {

namespace {

void check_shape(const MultiIndex& shape) {
  if (shape.dims() < 1)
    throw std::invalid_argument("shape must have at least one dimension");
  for (int c : shape.components)
    if (c < 1) throw std::invalid_argument("shape components must be >= 1");
}

// Enumeration of k-subsets of grid cells covering every axis-aligned slice.
// Cells are visited in increasing linear (row-major) order so that two
// prunes apply: a branch dies when the picks left cannot cover the slices
// still uncovered in some dimension, and when an uncovered slice has no
// cell at or past the cursor.
struct CoverEnumerator {
  int k;
  int dims;
  long total_cells;
  std::vector<int> sizes;
  std::vector<std::vector<int>> cell_coords;      // per linear cell index
  std::vector<std::vector<long>> slice_last_cell; // [d][j] -> max linear index
  std::vector<std::vector<int>> cover_count;      // [d][j]
  std::vector<int> uncovered;                     // per dimension
  std::vector<long> chosen;

  CoverEnumerator(int k_, const MultiIndex& shape) : k(k_), dims(shape.dims()) {
    sizes.assign(shape.components.begin(), shape.components.end());
    total_cells = shape.product();
    cell_coords.resize(total_cells, std::vector<int>(dims));
    for (long c = 0; c < total_cells; ++c) {
      long rest = c;
      for (int d = dims - 1; d >= 0; --d) {
        cell_coords[c][d] = static_cast<int>(rest % sizes[d]);
        rest /= sizes[d];
      }
    }
    slice_last_cell.resize(dims);
    cover_count.resize(dims);
    for (int d = 0; d < dims; ++d) {
      slice_last_cell[d].assign(sizes[d], -1);
      cover_count[d].assign(sizes[d], 0);
    }
    for (long c = 0; c < total_cells; ++c)
      for (int d = 0; d < dims; ++d)
        slice_last_cell[d][cell_coords[c][d]] = c;
    uncovered.assign(dims, 0);
    for (int d = 0; d < dims; ++d) uncovered[d] = sizes[d];
    chosen.reserve(k);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    if (k < 1 || k > total_cells) return;
    recurse(0, visit);
  }

  template <typename Visit>
  void recurse(long start, Visit& visit) {
    const int remaining = k - static_cast<int>(chosen.size());
    if (remaining == 0) {
      for (int d = 0; d < dims; ++d)
        if (uncovered[d] > 0) return;
      visit(chosen);
      return;
    }
    for (int d = 0; d < dims; ++d) {
      if (uncovered[d] > remaining) return;  // a cell covers one slice per dim
      for (int j = 0; j < sizes[d]; ++j)
        if (cover_count[d][j] == 0 && slice_last_cell[d][j] < start) return;
    }
    for (long c = start; c <= total_cells - remaining; ++c) {
      chosen.push_back(c);
      for (int d = 0; d < dims; ++d)
        if (cover_count[d][cell_coords[c][d]]++ == 0) --uncovered[d];
      recurse(c + 1, visit);
      for (int d = 0; d < dims; ++d)
        if (--cover_count[d][cell_coords[c][d]] == 0) ++uncovered[d];
      chosen.pop_back();
    }
  }
};

}  // namespace

bool RankingTableSpec::feasible() const {
  if (k < 1) return false;
  int max_side = 0;
  for (int c : shape.components) max_side = std::max(max_side, c);
  return cells() >= k && k >= max_side;
}

Int count_covering_selections(int k, const MultiIndex& shape) {
  check_shape(shape);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  RankingTableSpec spec{k, shape};
  if (!spec.feasible()) return 0;
  CoverEnumerator enumerator(k, shape);
  Int count = 0;
  enumerator.run([&](const std::vector<long>&) { ++count; });
  return count;
}

Int count_ranking_tables(int k, const MultiIndex& shape) {
  return count_covering_selections(k, shape) *
         factorial(static_cast<unsigned long>(k));
}

void for_each_covering_selection(
    int k, const MultiIndex& shape,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  check_shape(shape);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  RankingTableSpec spec{k, shape};
  if (!spec.feasible()) return;
  CoverEnumerator enumerator(k, shape);
  enumerator.run([&](const std::vector<long>& cells) {
    std::vector<std::vector<int>> coords;
    coords.reserve(cells.size());
    for (long c : cells) coords.push_back(enumerator.cell_coords[c]);
    visit(coords);
  });
}

bool verify_expansion_by_evaluation(int k, int n) {
  if (k < 1 || n < 1)
    throw std::invalid_argument("verify_expansion_by_evaluation: k, n >= 1");
  CoeffTableND table = table_multi_recurrence(k, n);
  // ff_at[x][l-1] = falling_factorial(x, l) for the grid x in 0..k
  std::vector<std::vector<Int>> ff_at(k + 1, std::vector<Int>(k));
  for (int x = 0; x <= k; ++x)
    for (int l = 1; l <= k; ++l)
      ff_at[x][l - 1] = falling_factorial(Int(x), static_cast<unsigned long>(l));

  std::vector<int> grid_point(n, 0);
  for (;;) {
    Int point_product = 1;
    for (int x : grid_point) point_product *= x;
    const Int lhs = falling_factorial(point_product, static_cast<unsigned long>(k));
    Int rhs = 0;
    table.for_each_index([&](const MultiIndex& index) {
      Int term = table.at(index);
      if (term == 0) return;
      for (int i = 0; i < n; ++i)
        term *= ff_at[grid_point[i]][index.components[i] - 1];
      rhs += term;
    });
    if (lhs != rhs) return false;
    int d = n - 1;
    while (d >= 0 && grid_point[d] == k) grid_point[d--] = 0;
    if (d < 0) break;
    ++grid_point[d];
  }
  return true;
}

}  // namespace factoprod

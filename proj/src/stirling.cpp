#include "factoprod/stirling.hpp"

#include <mutex>
#include <stdexcept>

namespace factoprod {

StirlingTriangle::StirlingTriangle(StirlingKind kind, int initial_max_k)
    : kind_(kind) {
  if (initial_max_k > 0) extend_locked(initial_max_k);
}

int StirlingTriangle::max_k() const {
  std::shared_lock lock(mutex_);
  return static_cast<int>(rows_.size());
}

void StirlingTriangle::ensure(int k) const {
  if (k < 1) return;
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(rows_.size()) >= k) return;
  }
  std::unique_lock lock(mutex_);
  extend_locked(k);
}

void StirlingTriangle::extend_locked(int k) const {
  // s(k+1,l) = k*s(k,l) + s(k,l-1);  S(k+1,l) = l*S(k,l) + S(k,l-1)
  if (rows_.empty()) rows_.push_back({Int(1)});
  while (static_cast<int>(rows_.size()) < k) {
    const auto& prev = rows_.back();
    const int kp = static_cast<int>(rows_.size());  // prev is row kp
    std::vector<Int> next(kp + 1);
    for (int l = 1; l <= kp + 1; ++l) {
      Int v = 0;
      if (l <= kp)
        v += (kind_ == StirlingKind::first_unsigned ? Int(kp) : Int(l)) * prev[l - 1];
      if (l >= 2) v += prev[l - 2];
      next[l - 1] = v;
    }
    rows_.push_back(std::move(next));
  }
}

Int StirlingTriangle::value(int k, int l) const {
  if (k < 1) throw std::invalid_argument("StirlingTriangle: k must be >= 1");
  if (l < 1 || l > k) return 0;
  ensure(k);
  std::shared_lock lock(mutex_);
  return rows_[k - 1][l - 1];
}

Int stirling1_unsigned(int k, int l) {
  static StirlingTriangle triangle(StirlingKind::first_unsigned, 16);
  return triangle.value(k, l);
}

Int stirling2(int k, int l) {
  static StirlingTriangle triangle(StirlingKind::second, 16);
  return triangle.value(k, l);
}

}  // namespace factoprod

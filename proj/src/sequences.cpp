#include "combtile/sequences.hpp"

#include <cstddef>
#include <mutex>
#include <vector>

namespace combtile {
namespace {

// x(n) = sum_t x(n - t) + [n == delta], x(n < 0) = 0. Covers all four
// sequences as well as the m-omino counting recurrence.
class DeltaRecurrence {
 public:
  DeltaRecurrence(std::vector<int> taps, int delta_index)
      : taps_(std::move(taps)), delta_index_(delta_index) {}

  Int at(long long n) const {
    if (n < 0) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<long long>(memo_.size()) <= n) {
      const long long k = static_cast<long long>(memo_.size());
      Int value = (k == delta_index_) ? 1 : 0;
      for (int t : taps_) {
        if (k - t >= 0) value += memo_[static_cast<std::size_t>(k - t)];
      }
      memo_.push_back(std::move(value));
    }
    return memo_[static_cast<std::size_t>(n)];
  }

 private:
  std::vector<int> taps_;
  int delta_index_;
  mutable std::mutex mutex_;
  mutable std::vector<Int> memo_;
};

}  // namespace

Int tribonacci(long long n) {
  static const DeltaRecurrence seq({1, 2, 3}, 2);
  return seq.at(n);
}

Int fibonacci(long long n) {
  static const DeltaRecurrence seq({1, 2}, 1);
  return seq.at(n);
}

Int narayana(long long n) {
  static const DeltaRecurrence seq({1, 3}, 0);
  return seq.at(n);
}

Int padovan(long long n) {
  static const DeltaRecurrence seq({2, 3}, 0);
  return seq.at(n);
}

}  // namespace combtile

#include "contavg/ft/fourier_index.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <utility>

#include "contavg/errors.hpp"

namespace contavg::ft {

FourierIndex::FourierIndex(int n, int K) : n_(n), K_(K) {
  if (n < 1 || K < 0) {
    throw ContractViolation("FourierIndex: need n >= 1 and K >= 0");
  }
  const int side = 2 * K + 1;
  long total = 1;
  for (int j = 0; j < n; ++j) {
    total *= side;
    if (total > (1L << 24)) throw ContractViolation("FourierIndex: box too large");
  }
  slots_.assign(static_cast<std::size_t>(total), Slot{-1, false});
  box_modes_.resize(static_cast<std::size_t>(total) * n);

  // Box index b enumerates k with k_0 slowest; the centre b = (total-1)/2 is
  // k = 0 and b -> total-1-b is k -> -k.
  std::vector<int> k(n);
  for (long b = 0; b < total; ++b) {
    long rest = b;
    for (int j = n - 1; j >= 0; --j) {
      k[j] = static_cast<int>(rest % side) - K;
      rest /= side;
    }
    for (int j = 0; j < n; ++j) box_modes_[b * n + j] = k[j];
  }
  const long centre = (total - 1) / 2;
  for (long b = centre; b < total; ++b) {
    slots_[b] = {static_cast<int>(stored_box_.size()), false};
    stored_box_.push_back(static_cast<int>(b));
    int norm = 0;
    for (int j = 0; j < n; ++j) {
      modes_.push_back(box_modes_[b * n + j]);
      norm += std::abs(box_modes_[b * n + j]);
    }
    l1_.push_back(norm);
  }
  for (long b = 0; b < centre; ++b) {
    slots_[b] = {slots_[total - 1 - b].stored, true};
  }
}

FourierIndex::Slot FourierIndex::slot(std::span<const int> k) const {
  if (static_cast<int>(k.size()) != n_) {
    throw ContractViolation("FourierIndex::slot: wrong mode dimension");
  }
  long b = 0;
  for (int j = 0; j < n_; ++j) {
    if (k[j] < -K_ || k[j] > K_) return {-1, false};
    b = b * (2 * K_ + 1) + (k[j] + K_);
  }
  return slots_[b];
}

int FourierIndex::box_difference(int b1, int b2) const {
  const int side = 2 * K_ + 1;
  long b = 0;
  for (int j = 0; j < n_; ++j) {
    const int d = box_modes_[static_cast<std::size_t>(b1) * n_ + j] -
                  box_modes_[static_cast<std::size_t>(b2) * n_ + j];
    if (d < -K_ || d > K_) return -1;
    b = b * side + (d + K_);
  }
  return static_cast<int>(b);
}

std::shared_ptr<const FourierIndex> FourierIndex::get(int n, int K) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const FourierIndex>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, K}];
  if (!slot) slot = std::make_shared<const FourierIndex>(n, K);
  return slot;
}

}  // namespace contavg::ft

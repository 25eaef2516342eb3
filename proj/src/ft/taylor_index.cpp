#include "contavg/ft/taylor_index.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "contavg/errors.hpp"

namespace contavg::ft {

namespace {

// Exponents of total degree d in m variables, lexicographically decreasing.
void enumerate_degree(int m, int d, std::vector<int>& prefix,
                      std::vector<int>& out) {
  if (static_cast<int>(prefix.size()) == m - 1) {
    prefix.push_back(d);
    out.insert(out.end(), prefix.begin(), prefix.end());
    prefix.pop_back();
    return;
  }
  for (int a = d; a >= 0; --a) {
    prefix.push_back(a);
    enumerate_degree(m, d - a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TaylorIndex::TaylorIndex(int m, int N) : m_(m), N_(N) {
  if (m < 1 || N < 0) {
    throw ContractViolation("TaylorIndex: need m >= 1 and N >= 0");
  }
  std::size_t table = 1;
  for (int j = 0; j < m; ++j) {
    table *= static_cast<std::size_t>(N + 1);
    if (table > (std::size_t{1} << 26)) {
      throw ContractViolation("TaylorIndex: (N+1)^m too large");
    }
  }
  for (int d = 0; d <= N; ++d) {
    degree_begin_.push_back(static_cast<int>(degree_.size()));
    std::vector<int> prefix;
    std::vector<int> block;
    enumerate_degree(m, d, prefix, block);
    exponents_.insert(exponents_.end(), block.begin(), block.end());
    degree_.insert(degree_.end(), block.size() / m, d);
  }
  degree_begin_.push_back(static_cast<int>(degree_.size()));

  lookup_.assign(table, -1);
  for (int i = 0; i < size(); ++i) {
    std::size_t key = 0;
    for (int e : exponent(i)) key = key * (N + 1) + e;
    lookup_[key] = i;
  }

  std::vector<int> sum(m);
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size() && degree_[a] + degree_[b] <= N; ++b) {
      auto ea = exponent(a);
      auto eb = exponent(b);
      for (int j = 0; j < m; ++j) sum[j] = ea[j] + eb[j];
      products_.push_back({a, b, index_of(sum)});
    }
  }

  derivatives_.resize(static_cast<std::size_t>(m) * size());
  std::vector<int> lowered(m);
  for (int var = 0; var < m; ++var) {
    for (int i = 0; i < size(); ++i) {
      auto e = exponent(i);
      DerivativeEntry entry{-1, 0.0};
      if (e[var] > 0) {
        for (int j = 0; j < m; ++j) lowered[j] = e[j];
        lowered[var] -= 1;
        entry = {index_of(lowered), static_cast<double>(e[var])};
      }
      derivatives_[static_cast<std::size_t>(var) * size() + i] = entry;
    }
  }
}

int TaylorIndex::index_of(std::span<const int> a) const {
  if (static_cast<int>(a.size()) != m_) {
    throw ContractViolation("TaylorIndex::index_of: wrong number of exponents");
  }
  int total = 0;
  std::size_t key = 0;
  for (int e : a) {
    if (e < 0) return -1;
    total += e;
    if (total > N_) return -1;
    key = key * (N_ + 1) + e;
  }
  return lookup_[key];
}

std::shared_ptr<const TaylorIndex> TaylorIndex::get(int m, int N) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const TaylorIndex>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, N}];
  if (!slot) slot = std::make_shared<const TaylorIndex>(m, N);
  return slot;
}

}  // namespace contavg::ft

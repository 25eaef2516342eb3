#pragma once

#include <memory>
#include <span>
#include <vector>

namespace contavg::ft {

// Enumeration of the monomials z^a, |a| <= N, in m variables, in graded
// lexicographic order (degree first, then lexicographically decreasing
// exponents). Product and derivative tables are precomputed once per (m, N)
// and shared between all series of that shape.
class TaylorIndex {
 public:
  struct ProductEntry {
    int lhs;
    int rhs;
    int out;
  };
  struct DerivativeEntry {
    int out;  // -1 when the derivative of the monomial vanishes
    double factor;
  };

  static std::shared_ptr<const TaylorIndex> get(int m, int N);

  int vars() const { return m_; }
  int max_degree() const { return N_; }
  int size() const { return static_cast<int>(degree_.size()); }
  int degree(int i) const { return degree_[i]; }
  std::span<const int> exponent(int i) const {
    return {exponents_.data() + static_cast<std::size_t>(i) * m_,
            static_cast<std::size_t>(m_)};
  }
  // Index of the monomial with the given exponent, or -1 if |a| > N.
  int index_of(std::span<const int> a) const;
  // First index of degree d (monomials of degree d occupy a contiguous range).
  int degree_begin(int d) const { return degree_begin_[d]; }

  std::span<const ProductEntry> products() const { return products_; }
  std::span<const DerivativeEntry> derivative(int var) const {
    return {derivatives_.data() + static_cast<std::size_t>(var) * size(),
            static_cast<std::size_t>(size())};
  }

  TaylorIndex(int m, int N);

 private:
  int m_;
  int N_;
  std::vector<int> exponents_;
  std::vector<int> degree_;
  std::vector<int> degree_begin_;
  std::vector<ProductEntry> products_;
  std::vector<DerivativeEntry> derivatives_;
  std::vector<int> lookup_;  // dense (N+1)^m table, exponent -> index
};

}  // namespace contavg::ft

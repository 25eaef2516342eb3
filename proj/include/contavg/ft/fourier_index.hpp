#pragma once

#include <memory>
#include <span>
#include <vector>

namespace contavg::ft {

// Fourier modes k in the box |k_i| <= K of Z^n. Only the half lattice
// {0} u {k : first nonzero component > 0} is stored; the mode -k of a real
// series is the complex conjugate of mode k.
class FourierIndex {
 public:
  struct Slot {
    int stored;  // index into the stored half lattice, -1 outside the box
    bool conjugate;
  };

  static std::shared_ptr<const FourierIndex> get(int n, int K);

  int dims() const { return n_; }
  int cutoff() const { return K_; }
  int stored_size() const { return static_cast<int>(stored_box_.size()); }
  int box_size() const { return static_cast<int>(slots_.size()); }

  // Mode vector of stored index i.
  std::span<const int> mode(int i) const {
    return {modes_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }
  // l1 norm of stored mode i.
  int l1(int i) const { return l1_[i]; }
  // Storage slot of an arbitrary k (either half).
  Slot slot(std::span<const int> k) const;
  // Storage slot of the full-box linear index b.
  Slot slot_of_box(int b) const { return slots_[b]; }
  // Full-box linear index of stored mode i and of its negative.
  int box_of_stored(int i) const { return stored_box_[i]; }
  int box_of_negated(int b) const { return box_size() - 1 - b; }
  // Decomposition of a full-box index into mode components.
  std::span<const int> box_mode(int b) const {
    return {box_modes_.data() + static_cast<std::size_t>(b) * n_,
            static_cast<std::size_t>(n_)};
  }
  // Full-box index of k1 - k2 given box indices, or -1 outside the box.
  int box_difference(int b1, int b2) const;

  FourierIndex(int n, int K);

 private:
  int n_;
  int K_;
  std::vector<int> modes_;
  std::vector<int> l1_;
  std::vector<int> stored_box_;
  std::vector<Slot> slots_;
  std::vector<int> box_modes_;
};

}  // namespace contavg::ft

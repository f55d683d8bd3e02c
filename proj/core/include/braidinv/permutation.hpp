#pragma once

#include <span>
#include <string>
#include <vector>

namespace braidinv {

// A bijection of {1..n}. Products are read left to right, as in braid words:
// (p * q)(i) = q(p(i)), i.e. p is applied first.
class Permutation {
 public:
  // Identity on {1..n}.
  explicit Permutation(int n = 0);
  // One-line notation: images[k] is the image of k+1. Throws
  // std::invalid_argument unless this is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  // (i i+1) on {1..n}.
  static Permutation transposition(int n, int i);
  // Product of the given cycles on {1..n}; each cycle is a sequence
  // (c0 c1 ... ck) sending c_j to c_{j+1}. Cycles must be disjoint.
  static Permutation from_cycles(int n, std::span<const std::vector<int>> cycles);
  // A single cycle, applied to {1..n}.
  static Permutation from_cycle(int n, std::span<const int> cycle);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_.at(static_cast<std::size_t>(point - 1)); }
  std::span<const int> images() const noexcept { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  // +1 for even, -1 for odd.
  int sign() const;
  // Cycle lengths in descending order, fixed points included.
  std::vector<int> cycle_type() const;
  int cycle_count() const;
  int cycle_length_containing(int point) const;
  bool is_full_cycle() const { return cycle_count() == 1; }
  bool is_identity() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs) { return lhs.then(rhs); }
  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Cycle notation without fixed points, e.g. "(1 3 4 2 5)"; "()" for the
  // identity.
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

}  // namespace braidinv

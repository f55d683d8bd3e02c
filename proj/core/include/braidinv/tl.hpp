#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidinv/algebra.hpp"
#include "braidinv/braid.hpp"

namespace braidinv {

// A planar (non-crossing) perfect matching of 2n boundary points: top points
// 0..n-1 left to right, bottom points n..2n-1 left to right.
class TLState {
 public:
  TLState() = default;
  // partner[p] is the point matched with p. Throws std::invalid_argument
  // unless this is a fixed-point-free involution with no crossing chords.
  explicit TLState(std::vector<int> partner);

  static TLState identity(int n);
  // Cap on top points i-1, i and cup on bottom points i-1, i (1-based i).
  static TLState hook(int n, int i);

  int strands() const noexcept { return static_cast<int>(partner_.size() / 2); }
  int partner(int point) const { return partner_.at(static_cast<std::size_t>(point)); }
  const std::vector<int>& partners() const noexcept { return partner_; }
  // Chord pairs over points 1..2n, smaller endpoint first, sorted.
  std::vector<std::pair<int, int>> chords() const;
  // Number of chords joining a top point to a bottom point.
  int through_strands() const;

  friend auto operator<=>(const TLState&, const TLState&) = default;
  friend bool operator==(const TLState&, const TLState&) = default;

  // "[(1,2),(3,5),(4,6)]"
  std::string to_string() const;

 private:
  std::vector<int> partner_;
};

struct Composite {
  TLState state;
  int loops = 0;
};

// Stacks `upper` on top of `lower`; closed loops in the middle are counted.
Composite compose(const TLState& upper, const TLState& lower);

// All planar states of TL_n (Catalan(n) of them), sorted.
std::vector<TLState> enumerate_states(int n);

// d = -a^2 - a^-2.
LaurentPoly loop_value();

// Linear combination of states with Laurent coefficients in a.
class TLElement {
 public:
  explicit TLElement(int n = 1) : n_(n) {}
  TLElement(const TLState& state, const LaurentPoly& coeff);

  static TLElement identity(int n);
  static TLElement generator(int n, int i);

  int strands() const noexcept { return n_; }
  const std::map<TLState, LaurentPoly>& terms() const noexcept { return terms_; }
  LaurentPoly coefficient(const TLState& s) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const TLState& s, const LaurentPoly& coeff);

  TLElement& operator+=(const TLElement& rhs);
  TLElement& operator-=(const TLElement& rhs);
  TLElement& operator*=(const LaurentPoly& scalar);
  friend TLElement operator+(TLElement lhs, const TLElement& rhs) { return lhs += rhs; }
  friend TLElement operator-(TLElement lhs, const TLElement& rhs) { return lhs -= rhs; }
  friend TLElement operator*(const LaurentPoly& s, TLElement rhs) { return rhs *= s; }
  friend TLElement operator*(const TLElement& lhs, const TLElement& rhs);
  friend bool operator==(const TLElement&, const TLElement&) = default;

  // "(a^-1) * [(1,2),(3,4)] + (a) * [(1,3),(2,4)]"; "0" when empty.
  std::string to_string() const;

 private:
  void require_same_strands(const TLElement& other) const;

  int n_ = 1;
  std::map<TLState, LaurentPoly> terms_;
};

// e_i in TL_n; throws std::out_of_range unless 1 <= i <= n-1.
TLElement tl_generator(int n, int i);
TLElement tl_mul(const TLElement& u, const TLElement& v);
// u * (c_hook e_i + c_id 1), cheaper than a general product.
TLElement mul_by_generator_combination(const TLElement& u, int i, const LaurentPoly& c_hook,
                                       const LaurentPoly& c_id);

// Image of one non-singular letter: a^-1 e_i + a for sigma_i, a e_i + a^-1
// for sigma_i^-1. Singular letters map to the difference of the two.
TLElement phi_letter(int n, const BraidLetter& letter);
// Product of the letter images; throws DomainError on singular letters.
TLElement phi(const BraidWord& w);

// Coefficient of e_i in the image of sigma_i^k, k != 0:
//   k > 0: sum_{l=0}^{k-1} (-1)^l a^(k-2-4l)
//   k < 0: sum_{l=0}^{-k-1} (-1)^l a^(k+2+4l)
// Throws std::domain_error for k = 0.
LaurentPoly power_coefficient(int k);
// Image of sigma_i^k: p_k e_i + a^k, and the identity for k = 0.
TLElement phi_power(int n, int i, int k);

struct ClosureCounts {
  int contractible = 0;
  int essential = 0;
  friend bool operator==(const ClosureCounts&, const ClosureCounts&) = default;
};

// Closes top point i to bottom point i around the axis and classifies the
// resulting curves in the annulus by their winding number.
ClosureCounts closure_components(const TLState& s);

// d^p x^q for a state; extended linearly to elements.
BiLaurent trace_f(const TLState& s);
BiLaurent trace_f(const TLElement& u);

}  // namespace braidinv

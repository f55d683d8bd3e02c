#pragma once

#include <cstddef>
#include <vector>

#include "braidinv/algebra.hpp"
#include "braidinv/braid.hpp"

namespace braidinv {

// Data of one crossing after it has been smoothed.
struct SmoothingRecord {
  std::size_t position = 0;
  int ascending = 0;  // strand singled out by the crossing
  int winding = 0;    // winding number m of that strand, in 1..n-1
  int sign = 0;       // +1 / -1
};

// Strand index at the top of the crossing that is followed after smoothing:
// i+1 for sigma_i and i for sigma_i^-1. Throws DomainError on singular
// letters.
int ascending_index(const BraidLetter& letter);

// Rotates w so that letter r comes first, deletes it, and returns the length
// of the cycle through ascending_index(w[r]) of the remaining permutation.
// Throws DomainError if w is not a knot or w[r] is singular.
int winding_m(const BraidWord& w, std::size_t r);

// One record per crossing; throws DomainError unless w is a non-singular knot.
std::vector<SmoothingRecord> smoothings(const BraidWord& w);

// Sum over crossings of sign * x^(2m - n), n the braid index of w.
LaurentPoly fiedler_poly(const BraidWord& w);

// Signed sum over all resolutions of the singular letters (sigma_i with +,
// sigma_i^-1 with -). For non-singular words this is fiedler_poly.
LaurentPoly fiedler_singular(const BraidWord& w);

struct SkeinDifference {
  int winding = 0;    // m of sigma_j inside prefix sigma_j suffix
  LaurentPoly direct;   // F(prefix s_j suffix) - F(prefix s_j^-1 suffix)
  LaurentPoly formula;  // x^(2m-n) + x^(n-2m)
  bool agree() const { return direct == formula; }
};

// prefix and suffix must share the braid index; j in 1..n-1.
SkeinDifference skein_difference(const BraidWord& prefix, int j, const BraidWord& suffix);

struct ExchangeFiedler {
  int m1 = 0;  // winding at the first sigma_n of X s Y s
  int m2 = 0;  // winding at the second sigma_n
  LaurentPoly direct;   // F(beta1) - F(beta2)
  LaurentPoly formula;  // from m1, m2 alone
  bool agree() const { return direct == formula; }
};

// x^(2m2-N) + x^(N-2m2) - x^(2m1-N) - x^(N-2m1) with N = strands.
LaurentPoly exchange_formula(int m1, int m2, int strands);

// Throws DomainError when beta1 does not close to a knot.
ExchangeFiedler exchange_fiedler_difference(const ExchangePair& pair);

// F(A s_i B s_j C) - F(A s_i B s_j^-1 C) - F(A s_i^-1 B s_j C)
//   + F(A s_i^-1 B s_j^-1 C).
LaurentPoly order1_alternating_sum(const BraidWord& a, int i, const BraidWord& b, int j, const BraidWord& c);

}  // namespace braidinv

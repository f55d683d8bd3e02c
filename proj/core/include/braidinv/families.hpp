#pragma once

#include "braidinv/braid.hpp"

namespace braidinv {

// X = s3 s2 s1, Y = s3 s2^(2k+1) s1 in B_4. Requires k >= 0.
ExchangePair example1_pair(int k);

// X = s3 s2 s1, Y = s2 s1 s3 in B_4.
ExchangePair example2_pair();

// X = s_{n-1} ... s_1,
// Y = s_{n-1} ... s_{i+1} s_i s_{i+1}^-1 ... s_{n-1}^-1 in B_n.
// Requires even n >= 2 and 1 <= i <= n-1.
ExchangePair example3_pair(int n, int i);

// s2 s2 s2 s1^-1 s2 s3^-1 s2^-1 s2^-1 s1 s2^-1 s3 in B_4, a braid whose
// closure is the unknot but which does not destabilize directly.
BraidWord morton_unknot();

// X s1^-1 Y s1 and X s1 Y s1^-1 with X = s2^-1 s3 s2 s2 s2,
// Y = s2 s3^-1 s2^-1 s2^-1 in B_4 (exchange on the sigma_1 side).
BraidWord morton_beta1();
BraidWord morton_beta2();

// The same pair turned over (sigma_i -> sigma_{4-i}) so that the exchange
// happens at sigma_3: X, Y in B_3.
ExchangePair morton_pair();

}  // namespace braidinv

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidinv/braid.hpp"
#include "braidinv/permutation.hpp"

namespace braidinv {

// A cycle (c0 c1 ... ck) as written: c_j maps to c_{j+1}.
using Cycle = std::vector<int>;

struct CycleDecomposition {
  int n = 0;
  // Each cycle starts at its minimum; cycles sorted by that minimum. Fixed
  // points appear as length-1 cycles.
  std::vector<Cycle> cycles;

  // Cycle lengths in descending order.
  std::vector<int> lengths() const;
  // Cycles of length >= 2 in "(1 7 3)(2 8 6)" form; "()" when there are none.
  std::string to_string() const;
};

CycleDecomposition cycles(const Permutation& p);

// Parses "(1 7 3)(2 8 6)" (digits separated by spaces or commas; "()" is the
// empty product). Throws ParseError.
std::vector<Cycle> parse_cycles(std::string_view text);
// Single cycle; throws ParseError unless exactly one cycle is given.
Cycle parse_cycle(std::string_view text);
std::string format_cycle(const Cycle& c);

// Ground-set size needed to hold every digit.
int max_point(const std::vector<Cycle>& cs);
// Product of the given cycles read left to right, on {1..n}. The cycles need
// not be disjoint.
Permutation product_of_cycles(int n, const std::vector<Cycle>& cs);

// The digits common to two cycles and the orders in which each cycle visits
// them. Permutations act on positions {1..m} of the sorted support
// t_1 < ... < t_m; nu_a sends k to the rank of the k-th common digit met
// when reading A as written.
struct IntersectionOrder {
  std::vector<int> support;
  Permutation nu_a;
  Permutation nu_b;
  // nu_a^-1 * nu_b, composed left to right.
  Permutation nu_ab;

  // Relabels a permutation of {1..m} onto the support digits, e.g. "(3 7 5)".
  std::string on_support(const Permutation& p) const;
};

// Throws DomainError when the cycles share no digit.
IntersectionOrder intersection_order(const Cycle& a, const Cycle& b);

// Product criterion for A * B to be a single cycle on {1..n}: the
// intersection has odd size and nu_ab is even. Returns false when A and B are
// disjoint. Throws DomainError unless A and B together cover {1..n}.
bool is_full_cycle_product(const Cycle& a, const Cycle& b, int n);
// Direct multiplication oracle for the same question.
bool product_is_full_cycle(const Cycle& a, const Cycle& b, int n);

// Cycle data of A s_n B and A B s_n on {1..n+1}, s_n = (n n+1).
struct ExchangeLengths {
  int base_strands = 0;             // n
  std::vector<int> with_swap_between;  // lengths of A s_n B, descending
  std::vector<int> with_swap_after;    // lengths of A B s_n, descending
  // The value l with {l, n+1-l} and {l-1, n+2-l} equal to the two length
  // multisets; 0 when no such l exists.
  int l = 0;
  bool length_pattern = false;
  // The cycle through n is longer in A B s_n than in A s_n B, so the
  // length-l cycle of A s_n B is the one avoiding n.
  bool swapped = false;
};

// A and B are permutations of {1..n+1} whose product is a full cycle; throws
// DomainError otherwise.
ExchangeLengths exchange_lengths(const Permutation& a, const Permutation& b);
ExchangeLengths exchange_lengths(const Cycle& a, const Cycle& b, int n);
// A = pi_X and B = s_n pi_Y s_n for the pair's X, Y.
ExchangeLengths exchange_lengths(const ExchangePair& pair);

}  // namespace braidinv

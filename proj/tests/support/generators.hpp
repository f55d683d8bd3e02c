#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "braidinv/braid.hpp"
#include "braidinv/permcalc.hpp"
#include "braidinv/tl.hpp"

namespace braidinv::testing {

// Small seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  BraidLetter letter(int n) {
    const int i = uniform(1, n - 1);
    return coin() ? BraidLetter::pos(i) : BraidLetter::neg(i);
  }

  BraidWord word(int n, int length) {
    BraidWord w(n);
    for (int k = 0; k < length; ++k) w.append(letter(n));
    return w;
  }

  BraidWord positive_word(int n, int length) {
    BraidWord w(n);
    for (int k = 0; k < length; ++k) w.append(BraidLetter::pos(uniform(1, n - 1)));
    return w;
  }

  // Random word whose closure is a knot; lengths vary in [lo, hi].
  BraidWord knot(int n, int lo, int hi, bool positive = false) {
    for (;;) {
      const int len = uniform(lo, hi);
      BraidWord w = positive ? positive_word(n, len) : word(n, len);
      if (is_knot(w)) return w;
    }
  }

  // Random cycle through the given digits (all of them, in random order).
  Cycle cycle_on(std::vector<int> digits) {
    std::shuffle(digits.begin(), digits.end(), rng_);
    return digits;
  }

  TLElement tl_element(int n, int terms) {
    static thread_local std::vector<std::vector<TLState>> cache;
    if (cache.size() <= static_cast<std::size_t>(n)) cache.resize(static_cast<std::size_t>(n) + 1);
    auto& states = cache[static_cast<std::size_t>(n)];
    if (states.empty()) states = enumerate_states(n);
    TLElement u(n);
    for (int k = 0; k < terms; ++k) {
      const auto& s = states[static_cast<std::size_t>(uniform(0, static_cast<int>(states.size()) - 1))];
      LaurentPoly c('a');
      for (int t = uniform(1, 3); t > 0; --t) c += LaurentPoly::monomial(uniform(-3, 3), uniform(-4, 4), 'a');
      u.add_term(s, c);
    }
    return u;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Every cycle on a nonempty subset of {1..m}, written from its minimum.
inline std::vector<Cycle> all_cycles(int m) {
  std::vector<Cycle> out;
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    std::vector<int> digits;
    for (int v = 1; v <= m; ++v)
      if (mask & (1U << (v - 1))) digits.push_back(v);
    std::sort(digits.begin() + 1, digits.end());
    do {
      out.push_back(digits);
    } while (std::next_permutation(digits.begin() + 1, digits.end()));
  }
  return out;
}

inline unsigned support_mask(const Cycle& c) {
  unsigned m = 0;
  for (int v : c) m |= 1U << (v - 1);
  return m;
}

// Calls visit(a, b) for every ordered pair of cycles covering {1..m} that
// share at least one digit.
template <class Visit>
void for_each_covering_pair(int m, Visit&& visit) {
  const auto cs = all_cycles(m);
  std::vector<unsigned> masks;
  masks.reserve(cs.size());
  for (const auto& c : cs) masks.push_back(support_mask(c));
  const unsigned full = (1U << m) - 1;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      if ((masks[i] | masks[j]) == full && (masks[i] & masks[j]) != 0) visit(cs[i], cs[j]);
}

}  // namespace braidinv::testing

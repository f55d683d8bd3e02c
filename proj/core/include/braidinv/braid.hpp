#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidinv/permutation.hpp"

namespace braidinv {

enum class LetterKind : unsigned char { positive, negative, singular };

// sigma_i, sigma_i^-1, or the singular generator tau_i where strands i and
// i+1 meet transversally.
struct BraidLetter {
  int index = 1;
  LetterKind kind = LetterKind::positive;

  static constexpr BraidLetter pos(int i) { return {i, LetterKind::positive}; }
  static constexpr BraidLetter neg(int i) { return {i, LetterKind::negative}; }
  static constexpr BraidLetter sing(int i) { return {i, LetterKind::singular}; }
  // +i / -i for signed crossings.
  static BraidLetter from_signed(int signed_index);

  constexpr bool is_singular() const { return kind == LetterKind::singular; }
  // +1 / -1; throws std::domain_error for a singular letter.
  int sign() const;
  // Throws std::domain_error for a singular letter.
  BraidLetter inverse() const;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A word in the generators of B_n (optionally with singular letters).
class BraidWord {
 public:
  BraidWord() = default;  // empty word in B_1
  // Throws std::invalid_argument if n < 1 or some index lies outside 1..n-1.
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  // Letters given as signed generator indices, e.g. {3, 2, 1, -4}.
  static BraidWord from_signed(int strands, std::span<const int> letters);
  static BraidWord from_signed(int strands, std::initializer_list<int> letters);

  int strands() const noexcept { return n_; }
  std::span<const BraidLetter> letters() const noexcept { return letters_; }
  const BraidLetter& operator[](std::size_t k) const { return letters_.at(k); }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool has_singular() const;
  std::size_t singular_count() const;

  // Signed generator indices; throws DomainError on singular letters.
  std::vector<int> signed_indices() const;

  // Same letters viewed in B_m for m >= n (trivial strands added on the right).
  BraidWord embedded(int strands) const;
  BraidWord inverse() const;

  BraidWord& append(const BraidLetter& letter);
  BraidWord& append(const BraidWord& tail);
  // Concatenation; strand counts must agree.
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs.append(rhs); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  // Text form accepted by parse_braid, always with an explicit header:
  // "n=5; 3 2 1 -4 3 2 1 4", singular letters as "S2".
  std::string to_string() const;

 private:
  void check_letter(const BraidLetter& letter) const;

  int n_ = 1;
  std::vector<BraidLetter> letters_;
};

// Optional "n=<int>;" header followed by whitespace- or comma-separated
// nonzero integers (sign = crossing sign) and singular letters "S<int>".
// Without a header, n = 1 + largest index. Throws ParseError.
BraidWord parse_braid(std::string_view text);

// Left-to-right product of the transpositions (i i+1); the sign of a letter
// is irrelevant. Singular letters are rejected with DomainError unless
// `allow_singular` is set, in which case they act as the same transposition.
Permutation permutation_of(const BraidWord& w, bool allow_singular = false);

// Sum of crossing signs; DomainError on singular letters.
int writhe(const BraidWord& w);

// Closure is a knot iff the associated permutation is a single n-cycle.
bool is_knot(const BraidWord& w);

// ----- moves ---------------------------------------------------------------
// Every move returns a word whose closure is isotopic to the input's.
// Positions are 0-based.

// Letters [k, end) followed by [0, k); k is taken modulo the length and may
// be negative.
BraidWord cyclic_rotate(const BraidWord& w, long k);
// g * w * g^-1 (Markov move 1).
BraidWord conjugate(const BraidWord& w, const BraidWord& g);
// Cancels adjacent sigma_i^e sigma_i^-e pairs until none remain.
BraidWord free_reduce(const BraidWord& w);
// Rewrites the braid relation found at `position`:
//  * letters (p, p+1) with |i - j| >= 2 are swapped;
//  * letters x^e1 y^e2 x^e3 (p..p+2) with |x - y| = 1 and e2 in {e1, e3}
//    become y^e3 x^e2 y^e1 (covers sigma_j sigma_{j+1} sigma_j and the
//    mixed-sign consequences such as s1 s2 s1^-1 = s2^-1 s1 s2).
// Throws MoveError when neither pattern is present.
BraidWord apply_braid_relation(const BraidWord& w, std::size_t position);
// w * sigma_n^sign in B_{n+1} (Markov move 2).
BraidWord stabilize(const BraidWord& w, int sign);
// Inverse of stabilize: sigma_{n-1}^{+-1} must occur exactly once, as the
// final letter. Throws MoveError otherwise.
BraidWord destabilize(const BraidWord& w);
// Exchange move on the crossings at `first` < `second`: both must be the
// same end generator (sigma_{n-1}, or sigma_1 on the mirrored side) with
// opposite signs, and every other letter must avoid that generator's outer
// strand. Both signs are flipped. Throws MoveError otherwise.
BraidWord exchange_move(const BraidWord& w, std::size_t first, std::size_t second);
// sigma_i -> sigma_{n-i}: turns the braid over, preserving crossing signs.
BraidWord flip(const BraidWord& w);

// ----- exchange pairs ----------------------------------------------------

// beta1 = X s^-1 Y s and beta2 = X s Y s^-1 in B_{n+1}, s = sigma_n.
struct ExchangePair {
  BraidWord x;
  BraidWord y;
  BraidWord beta1;
  BraidWord beta2;

  int base_strands() const noexcept { return x.strands(); }
  // X s Y s with both exchange letters positive; its two s letters sit at
  // positions first_exchange_position() and second_exchange_position().
  BraidWord reference() const;
  std::size_t first_exchange_position() const noexcept { return x.size(); }
  std::size_t second_exchange_position() const noexcept { return x.size() + 1 + y.size(); }
};

// Throws std::invalid_argument when X and Y live in different B_n, and
// DomainError on singular letters.
ExchangePair exchange_pair(const BraidWord& x, const BraidWord& y);

struct TrivialityReport {
  // X (resp. Y) uses only sigma_1..sigma_{n-2}; then beta1 and beta2 are
  // conjugate.
  bool x_avoids_top = false;
  bool y_avoids_top = false;
  // Every maximal block of sigma_{n-1}^{+-1} letters in X and in Y has even
  // exponent sum; then strand n closes on itself and no knot results.
  bool even_top_blocks = false;

  bool conjugate_pair() const { return x_avoids_top || y_avoids_top; }
  bool any() const { return conjugate_pair() || even_top_blocks; }
  std::vector<std::string> reasons() const;
};

TrivialityReport triviality_filters(const BraidWord& x, const BraidWord& y);

}  // namespace braidinv

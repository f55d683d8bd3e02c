#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidinv/algebra.hpp"
#include "braidinv/braid.hpp"
#include "braidinv/tl.hpp"

namespace braidinv {

// Truncation order used when none is given: max(k, 2).
int default_truncation_order(int k);

// f(Phi(w)) with a = e^t, expanded through t^order.
TruncatedSeries series_of(const BraidWord& w, int order);

// Coefficient of t^k in the expansion of f(Phi(w)). `order` (>= k) bounds
// the expansion; it defaults to default_truncation_order(k).
RationalPoly q_invariant(const BraidWord& w, int k, std::optional<int> order = std::nullopt);

// Like phi, with each singular letter tau_i sent to
// Phi(sigma_i) - Phi(sigma_i^-1) = (a^-1 - a)(e_i - 1).
TLElement singular_phi(const BraidWord& w);

// True iff every state coefficient of u is divisible by (a^-1 - a)^s.
bool divisible_by_singular_factor(const TLElement& u, int s);

// With s >= 1 singular letters in w: true iff the coefficients of
// t^0..t^(s-1) in f(singular_phi(w)) all vanish. Throws DomainError if w has
// no singular letter.
bool vanishing_order_check(const BraidWord& w);

struct ExchangeDelta {
  TLElement direct;    // Phi(beta1) - Phi(beta2)
  TLElement factored;  // (a^2 - a^-2)[Phi(X) e_n Phi(Y) - Phi(X) Phi(Y) e_n]
  bool agree() const { return direct == factored; }
};

ExchangeDelta exchange_delta(const ExchangePair& pair);

struct QDifference {
  RationalPoly direct;     // Q_k(beta1) - Q_k(beta2)
  RationalPoly via_delta;  // t^k coefficient of f(delta)
  bool agree() const { return direct == via_delta; }
};

QDifference q_difference(const ExchangePair& pair, int k, std::optional<int> order = std::nullopt);

// ----- conjecture scan ---------------------------------------------------

struct ScanConfig {
  int n = 4;                   // X, Y in B_n
  int length = 6;              // letters in each of X and Y
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;        // 0: hardware concurrency
  std::size_t max_attempts = 10000;  // rejection-sampling budget per sample
  std::vector<std::pair<BraidWord, BraidWord>> injected;
};

struct ScanRecord {
  std::size_t index = 0;
  std::string source;  // "include" or "random"
  std::uint64_t sample_seed = 0;
  std::size_t attempts = 0;
  bool accepted = false;  // a knotted, non-degenerate pair was found
  BraidWord x;
  BraidWord y;
  bool fiedler_diff_zero = false;
  bool q1_diff_zero = false;
  int l = 0;
  bool agreement() const { return fiedler_diff_zero == q1_diff_zero; }
};

struct ScanSummary {
  std::size_t records = 0;
  std::size_t accepted = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t fiedler_zero = 0;
  std::size_t q1_zero = 0;
  std::vector<std::size_t> counterexamples;  // record indices
};

struct ScanReport {
  ScanConfig config;
  std::vector<ScanRecord> records;
  ScanSummary summary;
};

// Per-sample generator seed derived from the run seed and the sample index.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

// Fills the comparison fields of a record from its X and Y.
void evaluate_record(ScanRecord& r);

// Injected pairs come first (source "include"), then `samples` random pairs.
// Output is independent of the thread count.
ScanReport conjecture_scan(const ScanConfig& config);

}  // namespace braidinv

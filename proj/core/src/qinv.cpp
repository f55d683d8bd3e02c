#include "braidinv/qinv.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <thread>

#include "braidinv/error.hpp"
#include "braidinv/fiedler.hpp"
#include "braidinv/permcalc.hpp"

namespace braidinv {

int default_truncation_order(int k) { return std::max(k, 2); }

TruncatedSeries series_of(const BraidWord& w, int order) { return exp_substitute(trace_f(phi(w)), order); }

namespace {

int resolve_order(int k, std::optional<int> order) {
  if (k < 0) throw std::invalid_argument("order k must be non-negative");
  return std::max(k, order.value_or(default_truncation_order(k)));
}

LaurentPoly singular_factor() { return LaurentPoly({{-1, 1}, {1, -1}}, 'a'); }

}  // namespace

RationalPoly q_invariant(const BraidWord& w, int k, std::optional<int> order) {
  return series_of(w, resolve_order(k, order)).coefficient(k);
}

TLElement singular_phi(const BraidWord& w) {
  TLElement out = TLElement::identity(w.strands());
  for (const auto& l : w.letters()) out = out * phi_letter(w.strands(), l);
  return out;
}

bool divisible_by_singular_factor(const TLElement& u, int s) {
  LaurentPoly divisor = LaurentPoly::constant(1, 'a');
  for (int k = 0; k < s; ++k) divisor = divisor * singular_factor();
  return std::all_of(u.terms().begin(), u.terms().end(),
                     [&](const auto& term) { return term.second.divide_exact(divisor).has_value(); });
}

bool vanishing_order_check(const BraidWord& w) {
  const auto s = static_cast<int>(w.singular_count());
  if (s < 1) throw DomainError("vanishing check needs at least one singular letter");
  const TruncatedSeries series = exp_substitute(trace_f(singular_phi(w)), s - 1);
  for (int k = 0; k < s; ++k)
    if (!series.coefficient(k).is_zero()) return false;
  return true;
}

ExchangeDelta exchange_delta(const ExchangePair& pair) {
  const int n = pair.base_strands();
  const int big = n + 1;
  const TLElement px = phi(pair.x.embedded(big));
  const TLElement py = phi(pair.y.embedded(big));
  const TLElement e = TLElement::generator(big, n);
  const LaurentPoly scale({{-2, -1}, {2, 1}}, 'a');  // a^2 - a^-2

  ExchangeDelta out{phi(pair.beta1) - phi(pair.beta2), scale * (px * e * py - px * py * e)};
  return out;
}

QDifference q_difference(const ExchangePair& pair, int k, std::optional<int> order) {
  const int K = resolve_order(k, order);
  QDifference out;
  out.direct = q_invariant(pair.beta1, k, K) - q_invariant(pair.beta2, k, K);
  out.via_delta = exp_substitute(trace_f(exchange_delta(pair).factored), K).coefficient(k);
  return out;
}

// ----- conjecture scan ---------------------------------------------------

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 over a mix of the run seed and the index.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Unbiased draw from [0, bound) on the raw engine output, so results do not
// depend on the standard library's distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

BraidWord random_word(std::mt19937_64& rng, int n, int length) {
  std::vector<BraidLetter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  const auto choices = static_cast<std::uint64_t>(2 * (n - 1));
  for (int k = 0; k < length; ++k) {
    const auto c = static_cast<int>(draw(rng, choices));
    const int index = c / 2 + 1;
    letters.push_back(c % 2 == 0 ? BraidLetter::pos(index) : BraidLetter::neg(index));
  }
  return BraidWord(n, std::move(letters));
}

void sample_random(ScanRecord& r, const ScanConfig& cfg) {
  std::mt19937_64 rng(r.sample_seed);
  for (r.attempts = 1; r.attempts <= cfg.max_attempts; ++r.attempts) {
    BraidWord x = random_word(rng, cfg.n, cfg.length);
    BraidWord y = random_word(rng, cfg.n, cfg.length);
    if (triviality_filters(x, y).any()) continue;
    if (!is_knot(exchange_pair(x, y).beta1)) continue;
    r.x = std::move(x);
    r.y = std::move(y);
    r.accepted = true;
    return;
  }
  r.attempts = cfg.max_attempts;
  r.x = BraidWord(cfg.n);
  r.y = BraidWord(cfg.n);
}

}  // namespace

void evaluate_record(ScanRecord& r) {
  const ExchangePair pair = exchange_pair(r.x, r.y);
  if (!is_knot(pair.beta1)) {
    r.accepted = false;
    return;
  }
  r.accepted = true;
  r.fiedler_diff_zero = exchange_fiedler_difference(pair).direct.is_zero();
  r.q1_diff_zero = q_difference(pair, 1).direct.is_zero();
  r.l = exchange_lengths(pair).l;
}

ScanReport conjecture_scan(const ScanConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("scan needs n >= 2");
  if (cfg.length < 0) throw std::invalid_argument("word length must be non-negative");

  ScanReport report;
  report.config = cfg;
  const std::size_t injected = cfg.injected.size();
  report.records.resize(injected + cfg.samples);
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    auto& r = report.records[k];
    r.index = k;
    if (k < injected) {
      r.source = "include";
      r.x = cfg.injected[k].first;
      r.y = cfg.injected[k].second;
    } else {
      r.source = "random";
      r.sample_seed = sample_seed(cfg.seed, k - injected);
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < report.records.size(); k = next++) {
      auto& r = report.records[k];
      if (r.source == "random") {
        sample_random(r, cfg);
        if (!r.accepted) continue;
      }
      evaluate_record(r);
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, report.records.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  auto& s = report.summary;
  s.records = report.records.size();
  for (const auto& r : report.records) {
    if (!r.accepted) continue;
    ++s.accepted;
    if (r.fiedler_diff_zero) ++s.fiedler_zero;
    if (r.q1_diff_zero) ++s.q1_zero;
    if (r.agreement()) {
      ++s.agreements;
    } else {
      ++s.disagreements;
      s.counterexamples.push_back(r.index);
    }
  }
  return report;
}

}  // namespace braidinv

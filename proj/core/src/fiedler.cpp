#include "braidinv/fiedler.hpp"

#include "braidinv/error.hpp"
#include "braidinv/permcalc.hpp"

namespace braidinv {

int ascending_index(const BraidLetter& letter) {
  switch (letter.kind) {
    case LetterKind::positive: return letter.index + 1;
    case LetterKind::negative: return letter.index;
    case LetterKind::singular: break;
  }
  throw DomainError("singular letter has no ascending strand");
}

namespace {

void require_knot(const BraidWord& w) {
  const Permutation p = permutation_of(w, true);
  if (!p.is_full_cycle())
    throw DomainError("closure of " + w.to_string() + " is not a knot: permutation " + cycles(p).to_string() +
                      " has " + std::to_string(p.cycle_count()) + " cycles");
}

// Permutations of all prefixes: prefixes[k] = pi(w[0..k)).
std::vector<Permutation> prefix_permutations(const BraidWord& w) {
  std::vector<Permutation> out;
  out.reserve(w.size() + 1);
  out.emplace_back(w.strands());
  for (const auto& l : w.letters()) out.push_back(out.back().then(Permutation::transposition(w.strands(), l.index)));
  return out;
}

// pi(w[r+1..] w[..r)) from the prefix permutations.
Permutation smoothed_permutation(const std::vector<Permutation>& prefixes, std::size_t r) {
  const Permutation& total = prefixes.back();
  const Permutation suffix = prefixes[r + 1].inverse().then(total);
  return suffix.then(prefixes[r]);
}

}  // namespace

int winding_m(const BraidWord& w, std::size_t r) {
  if (r >= w.size()) throw std::out_of_range("crossing position out of range");
  require_knot(w);
  const int up = ascending_index(w[r]);
  return smoothed_permutation(prefix_permutations(w), r).cycle_length_containing(up);
}

std::vector<SmoothingRecord> smoothings(const BraidWord& w) {
  if (w.has_singular()) throw DomainError("smoothings of a singular braid are undefined");
  require_knot(w);
  const auto prefixes = prefix_permutations(w);
  std::vector<SmoothingRecord> out;
  out.reserve(w.size());
  for (std::size_t r = 0; r < w.size(); ++r) {
    const int up = ascending_index(w[r]);
    out.push_back({r, up, smoothed_permutation(prefixes, r).cycle_length_containing(up), w[r].sign()});
  }
  return out;
}

LaurentPoly fiedler_poly(const BraidWord& w) {
  LaurentPoly f('x');
  for (const auto& s : smoothings(w)) f += LaurentPoly::monomial(s.sign, 2 * s.winding - w.strands(), 'x');
  return f;
}

LaurentPoly fiedler_singular(const BraidWord& w) {
  std::vector<std::size_t> singular;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k].is_singular()) singular.push_back(k);
  if (singular.size() > 20) throw DomainError("too many singular letters to resolve");

  LaurentPoly total('x');
  std::vector<BraidLetter> letters(w.letters().begin(), w.letters().end());
  const std::size_t count = std::size_t{1} << singular.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    int sign = 1;
    for (std::size_t b = 0; b < singular.size(); ++b) {
      const int idx = w[singular[b]].index;
      const bool negative = (mask >> b) & 1U;
      letters[singular[b]] = negative ? BraidLetter::neg(idx) : BraidLetter::pos(idx);
      if (negative) sign = -sign;
    }
    const LaurentPoly f = fiedler_poly(BraidWord(w.strands(), letters));
    total += sign > 0 ? f : -f;
  }
  return total;
}

SkeinDifference skein_difference(const BraidWord& prefix, int j, const BraidWord& suffix) {
  BraidWord plus = prefix;
  plus.append(BraidLetter::pos(j)).append(suffix);
  BraidWord minus = prefix;
  minus.append(BraidLetter::neg(j)).append(suffix);

  SkeinDifference out;
  out.winding = winding_m(plus, prefix.size());
  out.direct = fiedler_poly(plus) - fiedler_poly(minus);
  out.formula = symmetric_pair(out.winding, plus.strands());
  return out;
}

LaurentPoly exchange_formula(int m1, int m2, int strands) {
  return symmetric_pair(m2, strands) - symmetric_pair(m1, strands);
}

ExchangeFiedler exchange_fiedler_difference(const ExchangePair& pair) {
  const BraidWord ref = pair.reference();
  require_knot(ref);
  const auto prefixes = prefix_permutations(ref);
  auto winding_at = [&](std::size_t r) {
    return smoothed_permutation(prefixes, r).cycle_length_containing(ascending_index(ref[r]));
  };

  ExchangeFiedler out;
  out.m1 = winding_at(pair.first_exchange_position());
  out.m2 = winding_at(pair.second_exchange_position());
  out.direct = fiedler_poly(pair.beta1) - fiedler_poly(pair.beta2);
  out.formula = exchange_formula(out.m1, out.m2, ref.strands());
  return out;
}

LaurentPoly order1_alternating_sum(const BraidWord& a, int i, const BraidWord& b, int j, const BraidWord& c) {
  BraidWord w = a;
  w.append(BraidLetter::sing(i)).append(b).append(BraidLetter::sing(j)).append(c);
  if (a.has_singular() || b.has_singular() || c.has_singular())
    throw DomainError("fragments of the alternating sum must be non-singular");
  return fiedler_singular(w);
}

}  // namespace braidinv

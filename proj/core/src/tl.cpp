#include "braidinv/tl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "braidinv/error.hpp"

namespace braidinv {

namespace {

// Position of a point on the boundary circle: top left to right, then bottom
// right to left.
int boundary_position(int point, int n) { return point < n ? point : 3 * n - 1 - point; }

bool crosses(int p, int q, int r, int s, int n) {
  int a = boundary_position(p, n), b = boundary_position(q, n);
  int c = boundary_position(r, n), e = boundary_position(s, n);
  if (a > b) std::swap(a, b);
  const bool c_in = a < c && c < b;
  const bool e_in = a < e && e < b;
  return c_in != e_in;
}

}  // namespace

// ----- TLState -----------------------------------------------------------

TLState::TLState(std::vector<int> partner) : partner_(std::move(partner)) {
  const int total = static_cast<int>(partner_.size());
  if (total == 0 || total % 2 != 0) throw std::invalid_argument("a state needs 2n boundary points, n >= 1");
  const int n = total / 2;
  for (int p = 0; p < total; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= total || q == p || partner_[static_cast<std::size_t>(q)] != p)
      throw std::invalid_argument("state is not a perfect matching");
  }
  for (int p = 0; p < total; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < p) continue;
    for (int r = p + 1; r < total; ++r) {
      const int s = partner_[static_cast<std::size_t>(r)];
      if (s < r || r == q) continue;
      if (crosses(p, q, r, s, n)) throw std::invalid_argument("state has crossing chords");
    }
  }
}

TLState TLState::identity(int n) {
  if (n < 1) throw std::out_of_range("TL_n needs n >= 1");
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    partner[static_cast<std::size_t>(i)] = n + i;
    partner[static_cast<std::size_t>(n + i)] = i;
  }
  TLState s;
  s.partner_ = std::move(partner);
  return s;
}

TLState TLState::hook(int n, int i) {
  if (i < 1 || i > n - 1)
    throw std::out_of_range("generator e_" + std::to_string(i) + " outside TL_" + std::to_string(n));
  TLState s = identity(n);
  auto& p = s.partner_;
  const auto at = [](int k) { return static_cast<std::size_t>(k); };
  p[at(i - 1)] = i;
  p[at(i)] = i - 1;
  p[at(n + i - 1)] = n + i;
  p[at(n + i)] = n + i - 1;
  return s;
}

std::vector<std::pair<int, int>> TLState::chords() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < static_cast<int>(partner_.size()); ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (p < q) out.emplace_back(p + 1, q + 1);
  }
  return out;
}

int TLState::through_strands() const {
  const int n = strands();
  int count = 0;
  for (int p = 0; p < n; ++p)
    if (partner_[static_cast<std::size_t>(p)] >= n) ++count;
  return count;
}

std::string TLState::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [p, q] : chords()) {
    os << (first ? "" : ",") << '(' << p << ',' << q << ')';
    first = false;
  }
  os << ']';
  return os.str();
}

Composite compose(const TLState& upper, const TLState& lower) {
  const int n = upper.strands();
  if (lower.strands() != n) throw std::invalid_argument("composing states with different strand counts");
  const auto at = [](int k) { return static_cast<std::size_t>(k); };

  std::vector<int> result(at(2 * n), -1);
  std::vector<bool> middle_used(at(n), false);

  // Follows a path entering the middle at index k from above (true) or below.
  // Returns the final outer point in result numbering.
  const auto follow = [&](int k, bool from_above) {
    for (;;) {
      middle_used[at(k)] = true;
      if (from_above) {
        const int q = lower.partner(k);
        if (q >= n) return q;  // bottom of the result
        k = q;
        from_above = false;
      } else {
        const int q = upper.partner(n + k);
        if (q < n) return q;  // top of the result
        k = q - n;
        from_above = true;
      }
    }
  };

  for (int t = 0; t < n; ++t) {
    if (result[at(t)] != -1) continue;
    const int q = upper.partner(t);
    const int end = q < n ? q : follow(q - n, true);
    result[at(t)] = end;
    result[at(end)] = t;
  }
  for (int b = n; b < 2 * n; ++b) {
    if (result[at(b)] != -1) continue;
    const int q = lower.partner(b);
    const int end = q >= n ? q : follow(q, false);
    result[at(b)] = end;
    result[at(end)] = b;
  }

  int loops = 0;
  for (int k = 0; k < n; ++k) {
    if (middle_used[at(k)]) continue;
    ++loops;
    int cur = k;
    do {
      middle_used[at(cur)] = true;
      const int down = lower.partner(cur);       // a middle point again
      middle_used[at(down)] = true;
      cur = upper.partner(n + down) - n;
    } while (cur != k);
  }

  Composite out;
  out.state = TLState(std::move(result));
  out.loops = loops;
  return out;
}

std::vector<TLState> enumerate_states(int n) {
  if (n < 1) throw std::out_of_range("TL_n needs n >= 1");
  const int total = 2 * n;
  // Matchings of boundary positions 0..2n-1 without crossings.
  std::vector<std::vector<int>> matchings;
  std::vector<int> match(static_cast<std::size_t>(total), -1);
  std::function<void(int)> build = [&](int from) {
    while (from < total && match[static_cast<std::size_t>(from)] != -1) ++from;
    if (from == total) {
      matchings.push_back(match);
      return;
    }
    // Partner at odd distance so the enclosed interval can be matched.
    for (int to = from + 1; to < total; to += 2) {
      bool free_inside = true;
      for (int k = from + 1; k < to && free_inside; ++k) free_inside = match[static_cast<std::size_t>(k)] == -1;
      if (!free_inside || match[static_cast<std::size_t>(to)] != -1) continue;
      match[static_cast<std::size_t>(from)] = to;
      match[static_cast<std::size_t>(to)] = from;
      build(from + 1);
      match[static_cast<std::size_t>(from)] = -1;
      match[static_cast<std::size_t>(to)] = -1;
    }
  };
  build(0);

  // Boundary position -> point.
  std::vector<int> point_at(static_cast<std::size_t>(total));
  for (int p = 0; p < total; ++p) point_at[static_cast<std::size_t>(boundary_position(p, n))] = p;

  std::vector<TLState> out;
  out.reserve(matchings.size());
  for (const auto& m : matchings) {
    std::vector<int> partner(static_cast<std::size_t>(total));
    for (int pos = 0; pos < total; ++pos)
      partner[static_cast<std::size_t>(point_at[static_cast<std::size_t>(pos)])] =
          point_at[static_cast<std::size_t>(m[static_cast<std::size_t>(pos)])];
    out.emplace_back(std::move(partner));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly loop_value() { return LaurentPoly({{-2, -1}, {2, -1}}, 'a'); }

namespace {

LaurentPoly a_power(int k) { return LaurentPoly::monomial(1, k, 'a'); }

const LaurentPoly& loop_power(int k) {
  thread_local std::vector<LaurentPoly> cache{LaurentPoly::constant(1, 'a')};
  while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * loop_value());
  return cache[static_cast<std::size_t>(k)];
}

}  // namespace

// ----- TLElement ---------------------------------------------------------

TLElement::TLElement(const TLState& state, const LaurentPoly& coeff) : n_(state.strands()) { add_term(state, coeff); }

TLElement TLElement::identity(int n) { return TLElement(TLState::identity(n), LaurentPoly::constant(1, 'a')); }

TLElement TLElement::generator(int n, int i) { return TLElement(TLState::hook(n, i), LaurentPoly::constant(1, 'a')); }

LaurentPoly TLElement::coefficient(const TLState& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? LaurentPoly('a') : it->second;
}

void TLElement::add_term(const TLState& s, const LaurentPoly& coeff) {
  if (s.strands() != n_) throw std::invalid_argument("state strand count differs from the element's");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TLElement::require_same_strands(const TLElement& other) const {
  if (other.n_ != n_)
    throw std::invalid_argument("TL elements on " + std::to_string(n_) + " and " + std::to_string(other.n_) +
                                " strands");
}

TLElement& TLElement::operator+=(const TLElement& rhs) {
  require_same_strands(rhs);
  for (const auto& [s, c] : rhs.terms_) add_term(s, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& rhs) {
  require_same_strands(rhs);
  for (const auto& [s, c] : rhs.terms_) add_term(s, -c);
  return *this;
}

TLElement& TLElement::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c = c * scalar;
  return *this;
}

TLElement operator*(const TLElement& lhs, const TLElement& rhs) {
  lhs.require_same_strands(rhs);
  TLElement out(lhs.n_);
  for (const auto& [su, cu] : lhs.terms_)
    for (const auto& [sv, cv] : rhs.terms_) {
      const Composite c = compose(su, sv);
      out.add_term(c.state, cu * cv * loop_power(c.loops));
    }
  return out;
}

std::string TLElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") * " + s.to_string();
  }
  return out;
}

TLElement tl_generator(int n, int i) { return TLElement::generator(n, i); }

TLElement tl_mul(const TLElement& u, const TLElement& v) { return u * v; }

TLElement mul_by_generator_combination(const TLElement& u, int i, const LaurentPoly& c_hook,
                                       const LaurentPoly& c_id) {
  const TLState hook = TLState::hook(u.strands(), i);
  TLElement out(u.strands());
  for (const auto& [s, c] : u.terms()) {
    out.add_term(s, c * c_id);
    const Composite comp = compose(s, hook);
    out.add_term(comp.state, c * c_hook * loop_power(comp.loops));
  }
  return out;
}

// ----- Phi ---------------------------------------------------------------

namespace {

struct LetterImage {
  LaurentPoly hook;
  LaurentPoly id;
};

LetterImage letter_image(const BraidLetter& l) {
  switch (l.kind) {
    case LetterKind::positive: return {a_power(-1), a_power(1)};
    case LetterKind::negative: return {a_power(1), a_power(-1)};
    case LetterKind::singular: break;
  }
  // (a^-1 e + a) - (a e + a^-1)
  return {a_power(-1) - a_power(1), a_power(1) - a_power(-1)};
}

}  // namespace

TLElement phi_letter(int n, const BraidLetter& letter) {
  const LetterImage img = letter_image(letter);
  TLElement out = img.id * TLElement::identity(n);
  out += img.hook * TLElement::generator(n, letter.index);
  return out;
}

TLElement phi(const BraidWord& w) {
  if (w.has_singular()) throw DomainError("phi is defined on non-singular braids; use singular_phi");
  TLElement out = TLElement::identity(w.strands());
  for (const auto& l : w.letters()) {
    const LetterImage img = letter_image(l);
    out = mul_by_generator_combination(out, l.index, img.hook, img.id);
  }
  return out;
}

LaurentPoly power_coefficient(int k) {
  if (k == 0) throw std::domain_error("the closed form for the e_i coefficient is used only for k != 0");
  LaurentPoly out('a');
  if (k > 0) {
    for (int l = 0; l < k; ++l) out += LaurentPoly::monomial(l % 2 == 0 ? 1 : -1, k - 2 - 4 * l, 'a');
  } else {
    for (int l = 0; l < -k; ++l) out += LaurentPoly::monomial(l % 2 == 0 ? 1 : -1, k + 2 + 4 * l, 'a');
  }
  return out;
}

TLElement phi_power(int n, int i, int k) {
  if (i < 1 || i > n - 1)
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  if (k == 0) return TLElement::identity(n);
  TLElement out = a_power(k) * TLElement::identity(n);
  out += power_coefficient(k) * TLElement::generator(n, i);
  return out;
}

// ----- closure trace -----------------------------------------------------

ClosureCounts closure_components(const TLState& s) {
  const int n = s.strands();
  const int total = 2 * n;
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  ClosureCounts out;
  for (int start = 0; start < total; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int winding = 0;
    int p = start;
    do {
      const int q = s.partner(p);
      seen[static_cast<std::size_t>(p)] = true;
      seen[static_cast<std::size_t>(q)] = true;
      // Closure arc from q to the matching point on the other side.
      if (q < n) {
        winding += 1;
        p = q + n;
      } else {
        winding -= 1;
        p = q - n;
      }
    } while (p != start);
    if (winding == 0)
      ++out.contractible;
    else
      ++out.essential;
  }
  return out;
}

BiLaurent trace_f(const TLState& s) {
  const ClosureCounts c = closure_components(s);
  return BiLaurent::from_a(loop_power(c.contractible), c.essential);
}

BiLaurent trace_f(const TLElement& u) {
  BiLaurent out;
  for (const auto& [s, c] : u.terms()) {
    const ClosureCounts cc = closure_components(s);
    out.add(c * loop_power(cc.contractible), cc.essential);
  }
  return out;
}

}  // namespace braidinv

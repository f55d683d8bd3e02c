#include "braidinv/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidinv {

namespace checked {

Coeff add(Coeff lhs, Coeff rhs) {
  Coeff out;
  if (__builtin_add_overflow(lhs, rhs, &out)) throw std::overflow_error("integer coefficient overflow in addition");
  return out;
}

Coeff sub(Coeff lhs, Coeff rhs) {
  Coeff out;
  if (__builtin_sub_overflow(lhs, rhs, &out)) throw std::overflow_error("integer coefficient overflow in subtraction");
  return out;
}

Coeff mul(Coeff lhs, Coeff rhs) {
  Coeff out;
  if (__builtin_mul_overflow(lhs, rhs, &out)) throw std::overflow_error("integer coefficient overflow in multiplication");
  return out;
}

}  // namespace checked

namespace {

// Appends "c v^e" to a running sum, choosing the separator from the sign.
template <class Num>
void append_term(std::ostringstream& os, bool first, const Num& c, int exponent, char variable,
                 bool integral) {
  const bool negative = c < 0;
  const Num magnitude = negative ? Num(-c) : c;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  const bool unit = magnitude == 1;
  if (exponent == 0) {
    os << magnitude;
    return;
  }
  if (!unit) {
    if (integral)
      os << magnitude;
    else
      os << '(' << magnitude << ')';
  }
  os << variable;
  if (exponent != 1) os << '^' << exponent;
}

}  // namespace

// ----- LaurentPoly -------------------------------------------------------

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms, char variable)
    : var_(variable), terms_(terms) {
  canonicalize();
}

LaurentPoly LaurentPoly::constant(Coeff c, char variable) { return monomial(c, 0, variable); }

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent, char variable) {
  LaurentPoly p(variable);
  if (c != 0) p.terms_.push_back({exponent, c});
  return p;
}

void LaurentPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& l, const Term& r) { return l.exponent < r.exponent; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!merged.empty() && merged.back().exponent == t.exponent)
      merged.back().coeff = checked::add(merged.back().coeff, t.coeff);
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

void LaurentPoly::require_same_variable(const LaurentPoly& other) const {
  if (var_ != other.var_)
    throw std::invalid_argument(std::string("variable mismatch: ") + var_ + " vs " + other.var_);
}

Coeff LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  return it != terms_.end() && it->exponent == exponent ? it->coeff : 0;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no minimal exponent");
  return terms_.front().exponent;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no maximal exponent");
  return terms_.back().exponent;
}

Coeff LaurentPoly::sum_of_coefficients() const {
  Coeff s = 0;
  for (const Term& t : terms_) s = checked::add(s, t.coeff);
  return s;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly out(var_);
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.terms_.push_back({-it->exponent, it->coeff});
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  for (Term& t : out.terms_) t.exponent += k;
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  require_same_variable(divisor);
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return LaurentPoly(var_);

  // Work with ordinary polynomials P = v^-min(p) p and Q = v^-min(q) q, both
  // with a nonzero constant term; p/q is a Laurent polynomial iff Q | P.
  const int p_low = min_exponent();
  const int q_low = divisor.min_exponent();
  const int q_deg = divisor.max_exponent() - q_low;
  const Coeff lead = divisor.terms_.back().coeff;

  std::vector<Coeff> rem(static_cast<std::size_t>(max_exponent() - p_low) + 1, 0);
  for (const Term& t : terms_) rem[static_cast<std::size_t>(t.exponent - p_low)] = t.coeff;
  if (static_cast<int>(rem.size()) - 1 < q_deg) return std::nullopt;

  std::vector<Coeff> quot(rem.size() - static_cast<std::size_t>(q_deg), 0);
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const Coeff top = rem[static_cast<std::size_t>(k + q_deg)];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    const Coeff factor = top / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    for (const Term& t : divisor.terms_) {
      auto& slot = rem[static_cast<std::size_t>(k + t.exponent - q_low)];
      slot = checked::sub(slot, checked::mul(factor, t.coeff));
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](Coeff c) { return c != 0; })) return std::nullopt;

  LaurentPoly out(var_);
  for (std::size_t k = 0; k < quot.size(); ++k)
    if (quot[k] != 0) out.terms_.push_back({static_cast<int>(k) + p_low - q_low, quot[k]});
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_variable(rhs);
  if (rhs.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto l = terms_.begin();
  auto r = rhs.terms_.begin();
  while (l != terms_.end() || r != rhs.terms_.end()) {
    if (r == rhs.terms_.end() || (l != terms_.end() && l->exponent < r->exponent)) {
      merged.push_back(*l++);
    } else if (l == terms_.end() || r->exponent < l->exponent) {
      merged.push_back(*r++);
    } else {
      const Coeff c = checked::add(l->coeff, r->coeff);
      if (c != 0) merged.push_back({l->exponent, c});
      ++l;
      ++r;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(Coeff scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff = checked::mul(t.coeff, scalar);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  lhs.require_same_variable(rhs);
  LaurentPoly out(lhs.var_);
  if (lhs.is_zero() || rhs.is_zero()) return out;

  const int low = lhs.terms_.front().exponent + rhs.terms_.front().exponent;
  const long span = static_cast<long>(lhs.terms_.back().exponent) + rhs.terms_.back().exponent - low + 1;
  const long pairs = static_cast<long>(lhs.terms_.size()) * static_cast<long>(rhs.terms_.size());

  if (span <= 4096 || span <= 8 * pairs) {
    std::vector<Coeff> dense(static_cast<std::size_t>(span), 0);
    for (const auto& a : lhs.terms_)
      for (const auto& b : rhs.terms_) {
        auto& slot = dense[static_cast<std::size_t>(a.exponent + b.exponent - low)];
        slot = checked::add(slot, checked::mul(a.coeff, b.coeff));
      }
    for (std::size_t k = 0; k < dense.size(); ++k)
      if (dense[k] != 0) out.terms_.push_back({static_cast<int>(k) + low, dense[k]});
  } else {
    std::map<int, Coeff> acc;
    for (const auto& a : lhs.terms_)
      for (const auto& b : rhs.terms_) {
        Coeff& slot = acc[a.exponent + b.exponent];
        slot = checked::add(slot, checked::mul(a.coeff, b.coeff));
      }
    for (const auto& [e, c] : acc)
      if (c != 0) out.terms_.push_back({e, c});
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    append_term(os, first, t.coeff, t.exponent, var_, true);
    first = false;
  }
  return os.str();
}

// ----- BiLaurent ---------------------------------------------------------

BiLaurent BiLaurent::from_a(const LaurentPoly& a_poly, int x_exponent) {
  BiLaurent out;
  out.add(a_poly, x_exponent);
  return out;
}

void BiLaurent::add_term(int a_exponent, int x_exponent, Coeff c) {
  add(LaurentPoly::monomial(c, a_exponent, 'a'), x_exponent);
}

void BiLaurent::add(const LaurentPoly& a_poly, int x_exponent) {
  if (a_poly.variable() != 'a') throw std::invalid_argument("BiLaurent coefficients must be polynomials in a");
  if (a_poly.is_zero()) return;
  auto [it, inserted] = parts_.try_emplace(x_exponent, 'a');
  it->second += a_poly;
  if (it->second.is_zero()) parts_.erase(it);
}

LaurentPoly BiLaurent::coefficient_of_x(int x_exponent) const {
  auto it = parts_.find(x_exponent);
  return it == parts_.end() ? LaurentPoly('a') : it->second;
}

Coeff BiLaurent::coeff(int a_exponent, int x_exponent) const {
  auto it = parts_.find(x_exponent);
  return it == parts_.end() ? 0 : it->second.coeff(a_exponent);
}

std::size_t BiLaurent::term_count() const {
  std::size_t n = 0;
  for (const auto& [q, p] : parts_) n += p.size();
  return n;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& rhs) {
  for (const auto& [q, p] : rhs.parts_) add(p, q);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& rhs) {
  for (const auto& [q, p] : rhs.parts_) add(-p, q);
  return *this;
}

BiLaurent operator*(const BiLaurent& lhs, const BiLaurent& rhs) {
  BiLaurent out;
  for (const auto& [q1, p1] : lhs.parts_)
    for (const auto& [q2, p2] : rhs.parts_) out.add(p1 * p2, q1 + q2);
  return out;
}

BiLaurent operator*(const LaurentPoly& a_poly, const BiLaurent& rhs) {
  BiLaurent out;
  for (const auto& [q, p] : rhs.parts_) out.add(a_poly * p, q);
  return out;
}

std::string BiLaurent::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, p] : parts_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << p.to_string() << ')';
    if (q == 1)
      os << 'x';
    else if (q != 0)
      os << "x^" << q;
  }
  return os.str();
}

// ----- RationalPoly ------------------------------------------------------

RationalPoly::RationalPoly(const LaurentPoly& p) {
  for (const auto& t : p.terms()) terms_.emplace(t.exponent, Rational(t.coeff));
}

RationalPoly::RationalPoly(std::initializer_list<std::pair<const int, Rational>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

Rational RationalPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RationalPoly::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs) {
  RationalPoly out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

std::string RationalPoly::to_string(char variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(os, first, c, e, variable, denominator(c) == 1);
    first = false;
  }
  return os.str();
}

// ----- TruncatedSeries ---------------------------------------------------

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

const RationalPoly& TruncatedSeries::coefficient(int k) const {
  if (k < 0 || k > order()) throw std::out_of_range("series coefficient index beyond truncation order");
  return coeffs_[static_cast<std::size_t>(k)];
}

RationalPoly& TruncatedSeries::coefficient(int k) {
  if (k < 0 || k > order()) throw std::out_of_range("series coefficient index beyond truncation order");
  return coeffs_[static_cast<std::size_t>(k)];
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RationalPoly& c) { return c.is_zero(); });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j)
      out.coeffs_[static_cast<std::size_t>(i + j)] += lhs.coeffs_[static_cast<std::size_t>(i)] *
                                                      rhs.coeffs_[static_cast<std::size_t>(j)];
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    const RationalPoly& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    if (k == 1)
      os << 't';
    else if (k > 1)
      os << "t^" << k;
  }
  if (first) os << '0';
  os << " + O(t^" << order() + 1 << ')';
  return os.str();
}

// ----- free functions ----------------------------------------------------

TruncatedSeries exp_substitute(const BiLaurent& p, int order) {
  TruncatedSeries out(order);
  std::vector<Rational> inv_factorial(static_cast<std::size_t>(order) + 1);
  inv_factorial[0] = 1;
  for (int j = 1; j <= order; ++j) inv_factorial[static_cast<std::size_t>(j)] = inv_factorial[static_cast<std::size_t>(j - 1)] / j;

  for (const auto& [q, a_poly] : p.by_x_exponent()) {
    for (const auto& t : a_poly.terms()) {
      Rational power = 1;  // m^j
      for (int j = 0; j <= order; ++j) {
        out.coefficient(j).add_term(q, Rational(t.coeff) * power * inv_factorial[static_cast<std::size_t>(j)]);
        power *= t.exponent;
      }
    }
  }
  return out;
}

TruncatedSeries exp_substitute(const LaurentPoly& a_poly, int order) {
  return exp_substitute(BiLaurent::from_a(a_poly), order);
}

LaurentPoly symmetric_pair(int m, int strands) {
  if (m < 1 || m > strands - 1)
    throw std::out_of_range("winding number " + std::to_string(m) + " outside 1.." + std::to_string(strands - 1));
  return LaurentPoly::monomial(1, 2 * m - strands) + LaurentPoly::monomial(1, strands - 2 * m);
}

}  // namespace braidinv

#pragma once

// Exact scalar arithmetic used throughout the library:
//
//   LaurentPoly     sparse Z[v, v^-1] in a single named variable (x or a)
//   BiLaurent       Z[a, a^-1][x, x^-1], the codomain of the closure trace
//   RationalPoly    Q[x, x^-1], used once a = e^t has introduced 1/j!
//   TruncatedSeries polynomials in t up to a fixed order with RationalPoly
//                   coefficients
//
// Integer coefficients are 64-bit with overflow detection; every operation
// that would overflow throws std::overflow_error rather than wrapping.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidinv {

using Coeff = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;

namespace checked {
Coeff add(Coeff lhs, Coeff rhs);
Coeff sub(Coeff lhs, Coeff rhs);
Coeff mul(Coeff lhs, Coeff rhs);
}  // namespace checked

class LaurentPoly {
 public:
  struct Term {
    int exponent;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit LaurentPoly(char variable = 'x') : var_(variable) {}
  LaurentPoly(std::initializer_list<Term> terms, char variable = 'x');

  static LaurentPoly constant(Coeff c, char variable = 'x');
  static LaurentPoly monomial(Coeff c, int exponent, char variable = 'x');

  char variable() const noexcept { return var_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coeff coeff(int exponent) const;
  // Both throw std::domain_error on the zero polynomial.
  int min_exponent() const;
  int max_exponent() const;

  // Value at v = 1.
  Coeff sum_of_coefficients() const;
  // v -> v^-1
  LaurentPoly invert_variable() const;
  // Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  // Quotient in Z[v, v^-1] when `divisor` divides this exactly, otherwise
  // nullopt. Throws std::domain_error when `divisor` is zero.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(Coeff scalar);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, Coeff scalar) { return lhs *= scalar; }
  friend LaurentPoly operator*(Coeff scalar, LaurentPoly rhs) { return rhs *= scalar; }
  friend LaurentPoly operator-(LaurentPoly p) { return p *= Coeff{-1}; }

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.var_ == rhs.var_ && lhs.terms_ == rhs.terms_;
  }

  // Ascending exponents with explicit signs, e.g. "-x^-3 + x^-1 + x - x^3".
  std::string to_string() const;

 private:
  void require_same_variable(const LaurentPoly& other) const;
  void canonicalize();

  char var_;
  std::vector<Term> terms_;
};

// Z[a, a^-1][x, x^-1], stored as x-exponent -> coefficient polynomial in a.
class BiLaurent {
 public:
  BiLaurent() = default;
  static BiLaurent from_a(const LaurentPoly& a_poly, int x_exponent = 0);

  void add_term(int a_exponent, int x_exponent, Coeff c);
  void add(const LaurentPoly& a_poly, int x_exponent);

  const std::map<int, LaurentPoly>& by_x_exponent() const noexcept { return parts_; }
  LaurentPoly coefficient_of_x(int x_exponent) const;
  Coeff coeff(int a_exponent, int x_exponent) const;
  bool is_zero() const noexcept { return parts_.empty(); }
  std::size_t term_count() const;

  BiLaurent& operator+=(const BiLaurent& rhs);
  BiLaurent& operator-=(const BiLaurent& rhs);
  friend BiLaurent operator+(BiLaurent lhs, const BiLaurent& rhs) { return lhs += rhs; }
  friend BiLaurent operator-(BiLaurent lhs, const BiLaurent& rhs) { return lhs -= rhs; }
  friend BiLaurent operator*(const BiLaurent& lhs, const BiLaurent& rhs);
  friend BiLaurent operator*(const LaurentPoly& a_poly, const BiLaurent& rhs);
  friend bool operator==(const BiLaurent&, const BiLaurent&) = default;

  // "(a-part) + (a-part)x^2 + ..." grouped by ascending x exponent.
  std::string to_string() const;

 private:
  std::map<int, LaurentPoly> parts_;
};

// Q[x, x^-1] with exact rational coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(const LaurentPoly& p);
  RationalPoly(std::initializer_list<std::pair<const int, Rational>> terms);

  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  Rational coeff(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(int exponent, const Rational& c);

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& scalar);
  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
  friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
  friend RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs);
  friend RationalPoly operator*(RationalPoly lhs, const Rational& s) { return lhs *= s; }
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  // Same layout as LaurentPoly::to_string; non-integral coefficients are
  // parenthesised, e.g. "(3/2)x^2".
  std::string to_string(char variable = 'x') const;

 private:
  std::map<int, Rational> terms_;
};

// c_0 + c_1 t + ... + c_K t^K with RationalPoly coefficients; products drop
// every term of t-degree above K.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const RationalPoly& coefficient(int k) const;
  RationalPoly& coefficient(int k);
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  // The result has the smaller of the two orders.
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<RationalPoly> coeffs_;
};

// Substitutes a = e^t: every a^m becomes sum_{j<=order} m^j t^j / j!.
// Throws std::invalid_argument for a negative order.
TruncatedSeries exp_substitute(const BiLaurent& p, int order);
TruncatedSeries exp_substitute(const LaurentPoly& a_poly, int order);

// x^(2m-N) + x^(N-2m) for 1 <= m <= N-1; the skein term of the Fiedler
// polynomial. Throws std::out_of_range otherwise.
LaurentPoly symmetric_pair(int m, int strands);

}  // namespace braidinv

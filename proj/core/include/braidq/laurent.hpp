#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidq/rational.hpp"

namespace braidq {

/// Laurent polynomial in the framing variable `a` over Q, stored sparsely
/// as exponent -> nonzero coefficient. The zero polynomial has no entries.
class LaurentA {
 public:
  LaurentA() = default;

  static LaurentA term(int j, Rat c);
  static LaurentA one() { return term(0, Rat(1)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rat>& terms() const { return terms_; }

  /// Coefficient of a^j (zero if absent).
  Rat coeff(int j) const;

  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero

  LaurentA& operator+=(const LaurentA& o);
  LaurentA& operator-=(const LaurentA& o);
  LaurentA operator+(const LaurentA& o) const;
  LaurentA operator-(const LaurentA& o) const;
  LaurentA operator-() const;
  LaurentA operator*(const LaurentA& o) const;
  LaurentA operator*(const Rat& c) const;
  LaurentA pow(unsigned e) const;

  bool operator==(const LaurentA& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentA& o) const { return !(*this == o); }

  /// Value at a = 1 (sum of coefficients).
  Rat eval_at_one() const;

  /// Canonical rendering, exponents ascending: "-1*a^-2 + 1*a^-1".
  std::string to_text() const;

 private:
  void add_term(int j, const Rat& c);
  std::map<int, Rat> terms_;
  friend class Laurent2;
};

/// Laurent polynomial in `a` and `x` over Q (x is the quantum variable of
/// the invariant's numerators), keyed by the exponent pair (j, k).
class Laurent2 {
 public:
  Laurent2() = default;

  static Laurent2 term(int j, int k, Rat c);
  static Laurent2 one() { return term(0, 0, Rat(1)); }
  static Laurent2 from_a(const LaurentA& p);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }

  Laurent2& operator+=(const Laurent2& o);
  Laurent2& operator-=(const Laurent2& o);
  Laurent2 operator+(const Laurent2& o) const;
  Laurent2 operator-(const Laurent2& o) const;
  Laurent2 operator-() const;
  Laurent2 operator*(const Laurent2& o) const;
  Laurent2 operator*(const Rat& c) const;
  Laurent2 pow(unsigned e) const;

  bool operator==(const Laurent2& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent2& o) const { return !(*this == o); }

  /// a^j x^k -> a^j x^(j+k). Realizes the substitution a -> a*x.
  Laurent2 substitute_a_to_ax() const;

  /// True when every x-exponent is even.
  bool x_powers_even() const;

  /// Exact division by (1 - x^2); returns false (and leaves q untouched)
  /// when not divisible.
  bool try_divide_one_minus_x2(Laurent2& q) const;

  std::string to_text() const;

 private:
  void add_term(int j, int k, const Rat& c);
  std::map<std::pair<int, int>, Rat> terms_;
};

}  // namespace braidq

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidq/laurent.hpp"

namespace braidq {

/// Polynomial in T with Laurent-in-a coefficients, dense by T-power.
/// degree() of the zero polynomial is -1 (the "minus infinity" sentinel).
class PolyT {
 public:
  PolyT() = default;
  explicit PolyT(std::vector<LaurentA> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static PolyT constant(LaurentA c);
  static PolyT zero() { return PolyT(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<LaurentA>& coeffs() const { return c_; }
  LaurentA coeff(int k) const;
  LaurentA leading() const;

  PolyT operator+(const PolyT& o) const;
  PolyT operator-(const PolyT& o) const;
  PolyT operator-() const;
  PolyT operator*(const PolyT& o) const;
  PolyT scale(const LaurentA& m) const;

  bool operator==(const PolyT& o) const { return c_ == o.c_; }
  bool operator!=(const PolyT& o) const { return !(*this == o); }

  /// p(T + c) for an integer shift c.
  PolyT shift(int c) const;

  /// Exact value at an integer T.
  LaurentA eval_int(long t) const;

  /// Coefficient sequence of p(1, T) in Q[T] (a specialized to 1).
  std::vector<Rat> at_alpha_one() const;

  /// "(c0) + (c1)*T + (c2)*T^2", zero coefficients skipped.
  std::string to_text() const;

 private:
  void trim();
  std::vector<LaurentA> c_;
};

/// The integer-valued polynomial binom(T + c, d), degree d, leading 1/d!.
PolyT binom_poly(int shift, unsigned degree);

/// Lagrange interpolation through (integer T, value) points; exact, degree
/// < #points. Throws on duplicate abscissae.
PolyT interpolate(const std::vector<std::pair<long, LaurentA>>& points);

/// Antidifference: the unique A with A(T) - A(T-1) = p(T) and A(0) = 0.
PolyT antidifference(const PolyT& p);

}  // namespace braidq

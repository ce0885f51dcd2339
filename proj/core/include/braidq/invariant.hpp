#pragma once

#include <string>
#include <vector>

#include "braidq/laurent.hpp"

namespace braidq {

/// Exact value of the transverse invariant: a Laurent numerator over a power
/// of (1 - x^2). Kept normalized: the numerator is not divisible by (1 - x^2)
/// while dpow > 0. Equality is cross-multiplied, so it is representation
/// independent either way.
class RationalInvariant {
 public:
  RationalInvariant() : num_(), dpow_(0) {}
  RationalInvariant(Laurent2 num, int dpow);

  static RationalInvariant zero() { return RationalInvariant(); }
  static RationalInvariant from_laurent(Laurent2 num) {
    return RationalInvariant(std::move(num), 0);
  }

  const Laurent2& num() const { return num_; }
  int dpow() const { return dpow_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalInvariant operator+(const RationalInvariant& o) const;
  RationalInvariant operator-(const RationalInvariant& o) const;
  RationalInvariant operator*(const RationalInvariant& o) const;
  RationalInvariant operator*(const Laurent2& m) const;
  RationalInvariant operator-() const;

  /// Divide by (1 - x^2): just bumps the denominator power.
  RationalInvariant div_one_minus_x2() const;

  bool operator==(const RationalInvariant& o) const;
  bool operator!=(const RationalInvariant& o) const { return !(*this == o); }

  /// a^j x^k -> a^j x^(j+k) in the numerator; the denominator has no a.
  RationalInvariant substitute_a_to_ax() const;

  std::string to_text() const;

 private:
  void normalize();
  Laurent2 num_;
  int dpow_;
};

/// Coefficients of x^(2T) for Tmin <= T <= Tmax of a substituted invariant
/// (its numerator must have even x-powers only; throws otherwise). Uses the
/// exact expansion (1 - x^2)^-d = sum_s binom(s+d-1, d-1) x^(2s).
std::vector<LaurentA> series_coefficients(const RationalInvariant& v, int tmin,
                                          int tmax);

}  // namespace braidq

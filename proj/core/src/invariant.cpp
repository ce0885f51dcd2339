#include "braidq/invariant.hpp"

#include <sstream>
#include <stdexcept>

namespace braidq {

RationalInvariant::RationalInvariant(Laurent2 num, int dpow)
    : num_(std::move(num)), dpow_(dpow) {
  if (dpow < 0) throw std::invalid_argument("negative denominator power");
  normalize();
}

void RationalInvariant::normalize() {
  if (num_.is_zero()) {
    dpow_ = 0;
    return;
  }
  Laurent2 q;
  while (dpow_ > 0 && num_.try_divide_one_minus_x2(q)) {
    num_ = q;
    --dpow_;
  }
}

namespace {
Laurent2 one_minus_x2_pow(int e) {
  Laurent2 base = Laurent2::one() - Laurent2::term(0, 2, Rat(1));
  return base.pow(static_cast<unsigned>(e));
}
}  // namespace

RationalInvariant RationalInvariant::operator+(
    const RationalInvariant& o) const {
  int d = std::max(dpow_, o.dpow_);
  Laurent2 a = num_ * one_minus_x2_pow(d - dpow_);
  Laurent2 b = o.num_ * one_minus_x2_pow(d - o.dpow_);
  return RationalInvariant(a + b, d);
}

RationalInvariant RationalInvariant::operator-(
    const RationalInvariant& o) const {
  return *this + (-o);
}

RationalInvariant RationalInvariant::operator-() const {
  RationalInvariant r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalInvariant RationalInvariant::operator*(
    const RationalInvariant& o) const {
  return RationalInvariant(num_ * o.num_, dpow_ + o.dpow_);
}

RationalInvariant RationalInvariant::operator*(const Laurent2& m) const {
  return RationalInvariant(num_ * m, dpow_);
}

RationalInvariant RationalInvariant::div_one_minus_x2() const {
  return RationalInvariant(num_, dpow_ + 1);
}

bool RationalInvariant::operator==(const RationalInvariant& o) const {
  return num_ * one_minus_x2_pow(o.dpow_) == o.num_ * one_minus_x2_pow(dpow_);
}

RationalInvariant RationalInvariant::substitute_a_to_ax() const {
  return RationalInvariant(num_.substitute_a_to_ax(), dpow_);
}

std::string RationalInvariant::to_text() const {
  std::ostringstream os;
  os << "(" << num_.to_text() << ") / (1-x^2)^" << dpow_;
  return os.str();
}

std::vector<LaurentA> series_coefficients(const RationalInvariant& v, int tmin,
                                          int tmax) {
  if (tmin > tmax) throw std::invalid_argument("tmin > tmax");
  if (!v.num().x_powers_even())
    throw std::domain_error(
        "odd x-power in substituted numerator: parity violation");
  std::vector<LaurentA> out(static_cast<size_t>(tmax - tmin + 1));
  int d = v.dpow();
  for (const auto& [jk, c] : v.num().terms()) {
    int j = jk.first;
    int m = jk.second / 2;  // numerator term contributes at x^(2m)
    if (d == 0) {
      if (m >= tmin && m <= tmax) out[m - tmin] += LaurentA::term(j, c);
      continue;
    }
    // c * x^(2m) * sum_{s>=0} binom(s+d-1, d-1) x^(2s): lands on T = m + s.
    for (int t = std::max(m, tmin); t <= tmax; ++t) {
      unsigned long s = static_cast<unsigned long>(t - m);
      Int w = binom_uint(s + d - 1, d - 1);
      out[t - tmin] += LaurentA::term(j, c * Rat(w));
    }
  }
  return out;
}

}  // namespace braidq

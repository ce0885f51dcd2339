#include "braidq/poly_t.hpp"

#include <sstream>
#include <stdexcept>

namespace braidq {

void PolyT::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyT PolyT::constant(LaurentA c) {
  PolyT p;
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

LaurentA PolyT::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return LaurentA();
  return c_[k];
}

LaurentA PolyT::leading() const {
  if (c_.empty()) throw std::logic_error("leading of zero polynomial");
  return c_.back();
}

PolyT PolyT::operator+(const PolyT& o) const {
  std::vector<LaurentA> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return PolyT(std::move(r));
}

PolyT PolyT::operator-(const PolyT& o) const { return *this + (-o); }

PolyT PolyT::operator-() const {
  std::vector<LaurentA> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return PolyT(std::move(r));
}

PolyT PolyT::operator*(const PolyT& o) const {
  if (is_zero() || o.is_zero()) return PolyT();
  std::vector<LaurentA> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return PolyT(std::move(r));
}

PolyT PolyT::scale(const LaurentA& m) const {
  std::vector<LaurentA> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * m;
  return PolyT(std::move(r));
}

PolyT PolyT::shift(int c) const {
  // (T + c)^k expanded binomially.
  std::vector<LaurentA> r(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) {
    Rat cp(1);  // c^(k-m) running power, built from the top down
    for (int m = static_cast<int>(k); m >= 0; --m) {
      Int b = binom_uint(k, static_cast<unsigned long>(m));
      r[m] += c_[k] * (Rat(b) * cp);
      cp *= c;
    }
  }
  return PolyT(std::move(r));
}

LaurentA PolyT::eval_int(long t) const {
  LaurentA v;
  Rat tr(t);
  for (size_t k = c_.size(); k-- > 0;) {
    v = v * LaurentA::term(0, tr) + c_[k];
  }
  return v;
}

std::vector<Rat> PolyT::at_alpha_one() const {
  std::vector<Rat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].eval_at_one();
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::string PolyT::to_text() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[k].to_text() << ")";
    if (k == 1) os << "*T";
    if (k > 1) os << "*T^" << k;
    first = false;
  }
  return os.str();
}

PolyT binom_poly(int shift, unsigned degree) {
  PolyT p = PolyT::constant(LaurentA::one());
  for (unsigned i = 0; i < degree; ++i) {
    // multiply by (T + shift - i)
    PolyT lin(std::vector<LaurentA>{LaurentA::term(0, Rat(shift) - Rat(i)),
                                    LaurentA::one()});
    p = p * lin;
  }
  Rat fact(1);
  for (unsigned i = 2; i <= degree; ++i) fact *= Rat(i);
  return p.scale(LaurentA::term(0, Rat(1) / fact));
}

PolyT interpolate(const std::vector<std::pair<long, LaurentA>>& points) {
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("duplicate interpolation abscissa");
  PolyT acc;
  for (size_t i = 0; i < points.size(); ++i) {
    PolyT basis = PolyT::constant(LaurentA::one());
    Rat denom(1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      PolyT lin(std::vector<LaurentA>{
          LaurentA::term(0, Rat(-points[j].first)), LaurentA::one()});
      basis = basis * lin;
      denom *= Rat(points[i].first) - Rat(points[j].first);
    }
    acc = acc + basis.scale(points[i].second * (Rat(1) / denom));
  }
  return acc;
}

PolyT antidifference(const PolyT& p) {
  // Express p in the binomial basis binom(T, m) via forward differences at
  // 0..d, then lift binom(T, m) -> binom(T+1, m+1).
  if (p.is_zero()) return PolyT();
  int d = p.degree();
  std::vector<LaurentA> diffs;
  for (long t = 0; t <= d; ++t) diffs.push_back(p.eval_int(t));
  // forward difference table at 0
  for (int lvl = 1; lvl <= d; ++lvl)
    for (int i = d; i >= lvl; --i) diffs[i] = diffs[i] - diffs[i - 1];
  PolyT acc;
  for (int m = 0; m <= d; ++m)
    acc = acc + binom_poly(1, static_cast<unsigned>(m) + 1).scale(diffs[m]);
  return acc - PolyT::constant(acc.eval_int(0));
}

}  // namespace braidq

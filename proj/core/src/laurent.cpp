#include "braidq/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace braidq {

namespace {

std::string coeff_text(const Rat& c) { return c.get_str(); }

}  // namespace

// ---------------------------------------------------------------- LaurentA

LaurentA LaurentA::term(int j, Rat c) {
  LaurentA p;
  if (c != 0) p.terms_.emplace(j, std::move(c));
  return p;
}

Rat LaurentA::coeff(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? Rat(0) : it->second;
}

int LaurentA::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentA::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentA::add_term(int j, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentA& LaurentA::operator+=(const LaurentA& o) {
  for (const auto& [j, c] : o.terms_) add_term(j, c);
  return *this;
}

LaurentA& LaurentA::operator-=(const LaurentA& o) {
  for (const auto& [j, c] : o.terms_) add_term(j, -c);
  return *this;
}

LaurentA LaurentA::operator+(const LaurentA& o) const {
  LaurentA r = *this;
  r += o;
  return r;
}

LaurentA LaurentA::operator-(const LaurentA& o) const {
  LaurentA r = *this;
  r -= o;
  return r;
}

LaurentA LaurentA::operator-() const {
  LaurentA r;
  for (const auto& [j, c] : terms_) r.terms_.emplace(j, -c);
  return r;
}

LaurentA LaurentA::operator*(const LaurentA& o) const {
  LaurentA r;
  for (const auto& [j1, c1] : terms_)
    for (const auto& [j2, c2] : o.terms_) r.add_term(j1 + j2, c1 * c2);
  return r;
}

LaurentA LaurentA::operator*(const Rat& c) const {
  LaurentA r;
  if (c == 0) return r;
  for (const auto& [j, v] : terms_) r.terms_.emplace(j, v * c);
  return r;
}

LaurentA LaurentA::pow(unsigned e) const {
  LaurentA r = one();
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Rat LaurentA::eval_at_one() const {
  Rat s(0);
  for (const auto& [j, c] : terms_) s += c;
  return s;
}

std::string LaurentA::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, c] : terms_) {
    if (!first) os << " + ";
    os << coeff_text(c) << "*a^" << j;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- Laurent2

Laurent2 Laurent2::term(int j, int k, Rat c) {
  Laurent2 p;
  if (c != 0) p.terms_.emplace(std::make_pair(j, k), std::move(c));
  return p;
}

Laurent2 Laurent2::from_a(const LaurentA& p) {
  Laurent2 r;
  for (const auto& [j, c] : p.terms_) r.terms_.emplace(std::make_pair(j, 0), c);
  return r;
}

void Laurent2::add_term(int j, int k, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(j, k);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
  for (const auto& [jk, c] : o.terms_) add_term(jk.first, jk.second, c);
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o) {
  for (const auto& [jk, c] : o.terms_) add_term(jk.first, jk.second, -c);
  return *this;
}

Laurent2 Laurent2::operator+(const Laurent2& o) const {
  Laurent2 r = *this;
  r += o;
  return r;
}

Laurent2 Laurent2::operator-(const Laurent2& o) const {
  Laurent2 r = *this;
  r -= o;
  return r;
}

Laurent2 Laurent2::operator-() const {
  Laurent2 r;
  for (const auto& [jk, c] : terms_) r.terms_.emplace(jk, -c);
  return r;
}

Laurent2 Laurent2::operator*(const Laurent2& o) const {
  Laurent2 r;
  for (const auto& [jk1, c1] : terms_)
    for (const auto& [jk2, c2] : o.terms_)
      r.add_term(jk1.first + jk2.first, jk1.second + jk2.second, c1 * c2);
  return r;
}

Laurent2 Laurent2::operator*(const Rat& c) const {
  Laurent2 r;
  if (c == 0) return r;
  for (const auto& [jk, v] : terms_) r.terms_.emplace(jk, v * c);
  return r;
}

Laurent2 Laurent2::pow(unsigned e) const {
  Laurent2 r = one();
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Laurent2 Laurent2::substitute_a_to_ax() const {
  Laurent2 r;
  for (const auto& [jk, c] : terms_)
    r.terms_.emplace(std::make_pair(jk.first, jk.first + jk.second), c);
  return r;
}

bool Laurent2::x_powers_even() const {
  for (const auto& [jk, c] : terms_)
    if (jk.second % 2 != 0) return false;
  return true;
}

bool Laurent2::try_divide_one_minus_x2(Laurent2& q) const {
  // Per a-exponent and x-parity class the division is a running prefix sum:
  // (1 - x^2) * sum_{m<=k} f_m x^m telescopes. Divisible iff each class sums
  // to zero overall.
  std::map<std::pair<int, int>, std::map<int, Rat>> classes;
  for (const auto& [jk, c] : terms_) {
    int parity = ((jk.second % 2) + 2) % 2;
    classes[{jk.first, parity}][jk.second] = c;
  }
  Laurent2 result;
  for (const auto& [cls, coeffs] : classes) {
    Rat run(0);
    int prev_k = 0;
    bool have_prev = false;
    for (const auto& [k, c] : coeffs) {
      // Carry the running sum across exponent gaps.
      if (have_prev && run != 0) {
        for (int t = prev_k + 2; t < k; t += 2)
          result.add_term(cls.first, t, run);
      }
      run += c;
      if (run != 0) result.add_term(cls.first, k, run);
      prev_k = k;
      have_prev = true;
    }
    if (run != 0) return false;  // non-terminating tail: not divisible
  }
  q = std::move(result);
  return true;
}

std::string Laurent2::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [jk, c] : terms_) {
    if (!first) os << " + ";
    os << coeff_text(c) << "*a^" << jk.first << "*x^" << jk.second;
    first = false;
  }
  return os.str();
}

}  // namespace braidq

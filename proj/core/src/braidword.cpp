#include "braidq/braidword.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidq {

BraidWord::BraidWord(int n, std::vector<int> ls)
    : strands(n), letters(std::move(ls)) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  for (int e : letters) {
    if (e == 0) throw std::invalid_argument("zero letter");
    if (std::abs(e) >= n)
      throw std::invalid_argument("letter index out of range for strands");
  }
}

bool BraidWord::positive() const {
  return std::all_of(letters.begin(), letters.end(),
                     [](int e) { return e > 0; });
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Permutation Permutation::transposition(int n, int i) {
  Permutation p = identity(n);
  std::swap(p.img[i], p.img[i + 1]);
  return p;
}

Permutation Permutation::then(const Permutation& q) const {
  Permutation r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[i] = q.img[img[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<int>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::coxeter_length() const {
  int inv = 0;
  for (size_t i = 0; i < img.size(); ++i)
    for (size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++inv;
  return inv;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(img.size(), false);
  int cycles = 0;
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = img[j]) seen[j] = true;
  }
  return cycles;
}

bool is_transverse(const MarkovMove& m) {
  return !std::holds_alternative<StabilizeNegative>(m) &&
         !std::holds_alternative<DestabilizeNegative>(m);
}

namespace {

bool inverse_pair(int a, int b) { return a == -b; }

std::optional<BraidWord> stabilize(const BraidWord& w, int sign) {
  BraidWord r(w.strands + 1, w.letters);
  r.letters.push_back(sign * w.strands);
  return r;
}

std::optional<BraidWord> destabilize(const BraidWord& w, int sign) {
  if (w.strands < 2 || w.letters.empty()) return std::nullopt;
  int top = w.strands - 1;
  if (w.letters.back() != sign * top) return std::nullopt;
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (std::abs(w.letters[i]) == top) return std::nullopt;
  std::vector<int> ls(w.letters.begin(), w.letters.end() - 1);
  return BraidWord(w.strands - 1, std::move(ls));
}

}  // namespace

std::optional<BraidWord> apply_move(const BraidWord& w, const MarkovMove& m) {
  const auto& ls = w.letters;
  const int n = static_cast<int>(ls.size());
  return std::visit(
      [&](const auto& mv) -> std::optional<BraidWord> {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, FreeReduce>) {
          if (n < 2 || mv.position < 0 || mv.position >= n)
            return std::nullopt;
          int p = mv.position, q = (mv.position + 1) % n;
          if (!inverse_pair(ls[p], ls[q])) return std::nullopt;
          std::vector<int> out;
          for (int i = 0; i < n; ++i)
            if (i != p && i != q) out.push_back(ls[i]);
          return BraidWord(w.strands, std::move(out));
        } else if constexpr (std::is_same_v<T, BraidRelationFar>) {
          if (n < 2 || mv.position < 0 || mv.position + 1 >= n)
            return std::nullopt;
          int a = ls[mv.position], b = ls[mv.position + 1];
          if (std::abs(std::abs(a) - std::abs(b)) <= 1) return std::nullopt;
          std::vector<int> out = ls;
          std::swap(out[mv.position], out[mv.position + 1]);
          return BraidWord(w.strands, std::move(out));
        } else if constexpr (std::is_same_v<T, BraidRelationAdjacent>) {
          if (n < 3 || mv.position < 0 || mv.position + 2 >= n)
            return std::nullopt;
          int a = ls[mv.position], b = ls[mv.position + 1],
              c = ls[mv.position + 2];
          bool same_sign = (a > 0) == (b > 0) && (b > 0) == (c > 0);
          if (!same_sign || a != c ||
              std::abs(std::abs(a) - std::abs(b)) != 1)
            return std::nullopt;
          std::vector<int> out = ls;
          out[mv.position] = b;
          out[mv.position + 1] = a;
          out[mv.position + 2] = b;
          return BraidWord(w.strands, std::move(out));
        } else if constexpr (std::is_same_v<T, Conjugate>) {
          if (mv.letter == 0 || std::abs(mv.letter) >= w.strands)
            return std::nullopt;
          std::vector<int> out;
          out.reserve(ls.size() + 2);
          out.push_back(-mv.letter);
          out.insert(out.end(), ls.begin(), ls.end());
          out.push_back(mv.letter);
          return BraidWord(w.strands, std::move(out));
        } else if constexpr (std::is_same_v<T, CyclicRotate>) {
          if (n == 0) return w;
          int k = ((mv.amount % n) + n) % n;
          std::vector<int> out(ls.begin() + k, ls.end());
          out.insert(out.end(), ls.begin(), ls.begin() + k);
          return BraidWord(w.strands, std::move(out));
        } else if constexpr (std::is_same_v<T, StabilizePositive>) {
          return stabilize(w, +1);
        } else if constexpr (std::is_same_v<T, DestabilizePositive>) {
          return destabilize(w, +1);
        } else if constexpr (std::is_same_v<T, StabilizeNegative>) {
          return stabilize(w, -1);
        } else {
          return destabilize(w, -1);
        }
      },
      m);
}

BraidWord parse_word(const std::string& text, int strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  std::istringstream is(text);
  std::vector<int> letters;
  std::string tok;
  while (is >> tok) {
    size_t pos = 0;
    int e;
    try {
      e = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter token: " + tok);
    }
    if (pos != tok.size())
      throw std::invalid_argument("bad letter token: " + tok);
    letters.push_back(e);
  }
  return BraidWord(strands, std::move(letters));
}

Permutation permutation(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  for (int e : w.letters)
    p = p.then(Permutation::transposition(w.strands, std::abs(e) - 1));
  return p;
}

int component_count(const BraidWord& w) {
  return permutation(w).cycle_count();
}

int writhe(const BraidWord& w) {
  int s = 0;
  for (int e : w.letters) s += (e > 0) ? 1 : -1;
  return s;
}

int self_linking(const BraidWord& w) { return writhe(w) - w.strands; }

BraidWord free_reduce_cyclic(const BraidWord& w) {
  std::vector<int> ls = w.letters;
  bool changed = true;
  while (changed) {
    changed = false;
    // interior pairs
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
      if (inverse_pair(ls[i], ls[i + 1])) {
        ls.erase(ls.begin() + i, ls.begin() + i + 2);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // wrap-around pair: cancel via a rotation (a conjugation of the closure)
    if (ls.size() >= 2 && inverse_pair(ls.back(), ls.front())) {
      ls.pop_back();
      ls.erase(ls.begin());
      changed = true;
    }
  }
  return BraidWord(w.strands, std::move(ls));
}

BraidWord cyclic_canonical(const BraidWord& w) {
  const auto& ls = w.letters;
  if (ls.size() < 2) return w;
  std::vector<int> best = ls;
  std::vector<int> rot = ls;
  for (size_t i = 1; i < ls.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(),
                                     best.end()))
      best = rot;
  }
  return BraidWord(w.strands, std::move(best));
}

std::pair<BraidWord, BraidWord> conway_split(const BraidWord& w,
                                             int position) {
  if (position < 0 || position >= static_cast<int>(w.letters.size()))
    throw std::out_of_range("split position out of range");
  std::vector<int> sw = w.letters;
  sw[position] = -sw[position];
  std::vector<int> sm = w.letters;
  sm.erase(sm.begin() + position);
  return {BraidWord(w.strands, std::move(sw)),
          BraidWord(w.strands, std::move(sm))};
}

bool is_reduced_positive(const BraidWord& w) {
  if (!w.positive()) throw std::invalid_argument("negative letter present");
  return static_cast<int>(w.letters.size()) ==
         permutation(w).coxeter_length();
}

BraidWord staircase_word(const Permutation& p) {
  int n = p.size();
  Permutation cur = p;
  std::vector<std::vector<int>> runs(n + 1);
  for (int m = n; m >= 2; --m) {
    int k = cur.img[m - 1] + 1;  // 1-based landing spot of the last strand
    if (k < m) {
      for (int g = m - 1; g >= k; --g) runs[m].push_back(g);
      // strip the descending cycle: u = cur * c^-1 fixes m-1
      Permutation cinv = Permutation::identity(n);
      for (int t = k + 1; t <= m; ++t) cinv.img[t - 1] = t - 2;
      cinv.img[k - 1] = m - 1;
      cur = cur.then(cinv);
    }
  }
  std::vector<int> word;
  for (int m = 2; m <= n; ++m)
    word.insert(word.end(), runs[m].begin(), runs[m].end());
  return BraidWord(n, std::move(word));
}

BraidWord exchange_rewrite(const BraidWord& w, int prefix_length) {
  const int k = prefix_length;
  if (!w.positive()) throw std::invalid_argument("word must be positive");
  if (k < 1 || k >= static_cast<int>(w.letters.size()))
    throw std::invalid_argument("prefix length out of range");
  std::vector<int> prefix(w.letters.begin(), w.letters.begin() + k);
  BraidWord pre(w.strands, prefix);
  if (!is_reduced_positive(pre))
    throw std::invalid_argument("prefix is not reduced");
  int i = w.letters[k];
  Permutation u = permutation(pre);
  Permutation us = u.then(Permutation::transposition(w.strands, i - 1));
  if (us.coxeter_length() >= u.coxeter_length())
    throw std::invalid_argument("appended letter does not drop the length");
  // us is one shorter; any reduced word for it, extended by i, is a reduced
  // word for the prefix element ending in i (Matsumoto connects the two
  // prefixes through braid relations alone).
  BraidWord head = staircase_word(us);
  std::vector<int> out = head.letters;
  out.push_back(i);
  out.insert(out.end(), w.letters.begin() + k, w.letters.end());
  return BraidWord(w.strands, std::move(out));
}

}  // namespace braidq

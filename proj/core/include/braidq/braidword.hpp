#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace braidq {

/// A braid word on `strands` strands. Letter e > 0 is the positive Artin
/// generator with index e, e < 0 its inverse; every |e| < strands. The empty
/// word is valid for any strands >= 1 (its closure is the full unlink).
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);

  size_t length() const { return letters.size(); }
  bool positive() const;
  bool operator==(const BraidWord& o) const = default;
};

/// Permutation of {0..n-1} stored as the image vector. Composition is
/// diagrammatic: (p.then(q))(i) = q(p(i)), matching left-to-right reading of
/// braid words.
struct Permutation {
  std::vector<int> img;

  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // swaps i, i+1 (0-based)

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }
  Permutation then(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;
  int coxeter_length() const;  // inversion count
  int cycle_count() const;
  bool operator==(const Permutation& o) const = default;
};

/// Moves on closed-braid words. The first seven preserve the transverse
/// isotopy class; the negative stabilization pair does not.
struct FreeReduce { int position; };
struct BraidRelationFar { int position; };
struct BraidRelationAdjacent { int position; };
struct Conjugate { int letter; };
struct CyclicRotate { int amount; };
struct StabilizePositive {};
struct DestabilizePositive {};
struct StabilizeNegative {};
struct DestabilizeNegative {};

using MarkovMove =
    std::variant<FreeReduce, BraidRelationFar, BraidRelationAdjacent,
                 Conjugate, CyclicRotate, StabilizePositive,
                 DestabilizePositive, StabilizeNegative, DestabilizeNegative>;

bool is_transverse(const MarkovMove& m);

/// Applies the move if its side conditions hold at the given data; returns
/// nullopt when inapplicable (e.g. no inverse pair at the position).
std::optional<BraidWord> apply_move(const BraidWord& w, const MarkovMove& m);

/// Whitespace-separated signed integers; the strand count is explicit and
/// never inferred, so trailing trivial strands stay representable.
BraidWord parse_word(const std::string& text, int strands);

Permutation permutation(const BraidWord& w);

/// Number of components of the closure (cycles of the permutation).
int component_count(const BraidWord& w);

int writhe(const BraidWord& w);
int self_linking(const BraidWord& w);  // writhe - strands

/// Removes adjacent inverse pairs, treating the word cyclically (the
/// wrap-around pair cancels via conjugation). Idempotent; the closure's
/// transverse class is unchanged.
BraidWord free_reduce_cyclic(const BraidWord& w);

/// Lexicographically least rotation of the letters. Idempotent; same
/// closure. Used as the memo key after cyclic reduction.
BraidWord cyclic_canonical(const BraidWord& w);

/// The two children of a Conway splitting at the crossing `position`:
/// (switched sign, deleted letter).
std::pair<BraidWord, BraidWord> conway_split(const BraidWord& w, int position);

/// True iff the positive word's length equals the Coxeter length of its
/// permutation. Throws on negative letters.
bool is_reduced_positive(const BraidWord& w);

/// Deterministic positive reduced word for p in the descending coset normal
/// form p = u * (s_{n-1} s_{n-2} ... s_k) with u fixing the last strand, so
/// the top generator occurs exactly once if p moves n-1 and never otherwise.
BraidWord staircase_word(const Permutation& p);

/// For a positive word whose length-k prefix is reduced while appending
/// letter w[k] drops the Coxeter length: rewrites the prefix (braid
/// relations only, same braid element) so positions k-1 and k hold the same
/// generator, exposing a square. Throws if the precondition fails.
BraidWord exchange_rewrite(const BraidWord& w, int prefix_length);

}  // namespace braidq

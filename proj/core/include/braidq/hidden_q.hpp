#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "braidq/poly_t.hpp"
#include "braidq/skein_f.hpp"

namespace braidq {

/// The coefficient sequence c_T(a) of x^(2T) in the substituted invariant,
/// over an integer window.
struct CoefficientTable {
  BraidWord word;
  int tmin = 0;
  int tmax = -1;
  std::vector<LaurentA> entries;

  const LaurentA& at(int t) const;
};

CoefficientTable c_table(const BraidWord& w, int tmin, int tmax,
                         FEvaluator& f);

/// The hidden polynomial Q(a, T) of a closed braid together with the window
/// on which it was verified against the coefficient series and the empirical
/// stabilization point. empirical_t0 == nullopt means agreement persisted
/// down to probe_floor ("at or below the probed range").
struct HiddenPolynomial {
  PolyT poly;
  int components = 1;
  int verified_lo = 0;
  int verified_hi = -1;
  bool t0_probed = false;
  int probe_floor = 0;
  std::optional<int> empirical_t0;
  LeafConvention convention = LeafConvention::Forced;

  std::string t0_text() const;
};

/// Recovers Q by exact interpolation of the coefficient series at
/// `components` consecutive T starting from length+strands, then verifies
/// `verify_extra` further points (doubling the start on mismatch, bounded
/// retries). Throws if verification never stabilizes or if the recovered
/// degree differs from components-1; both indicate an engine bug.
HiddenPolynomial recover_Q(const BraidWord& w, FEvaluator& f,
                           int verify_extra = 5);

/// Smallest T >= probe_floor with Q(T') = c_T' for every T' from T up to the
/// verified window; nullopt when agreement persists down to the floor.
/// Stores the outcome in hp as well.
std::optional<int> minimal_T0(const BraidWord& w, HiddenPolynomial& hp,
                              FEvaluator& f, int probe_floor);

/// Shift-and-scale operators of the polynomial skein calculus.
PolyT op_S_alpha(const PolyT& p);       // a^-2 p(T+1)
PolyT op_S_alpha_inv(const PolyT& p);   // a^2  p(T-1)
PolyT op_Delta_alpha(const PolyT& p);   // a (p(T) - p(T-1))

/// True when the evaluator's tree for w contains a split-union node (the one
/// place the polynomial walk needs series data).
bool tree_uses_split_union(const BraidWord& w, Strategy strategy);

/// Direct polynomial-level evaluator: walks the same computation tree as the
/// F-evaluator but combines child polynomials with the operator calculus.
/// Split-union nodes cannot be completed at polynomial level; they are
/// pinned against the coefficient series (see eval). Results equal recover_Q
/// exactly.
class QEvaluator {
 public:
  explicit QEvaluator(FEvaluator& f, int leaf_shift = 0)
      : f_(f), leaf_shift_(leaf_shift) {}

  PolyT eval(const BraidWord& w);

 private:
  PolyT eval_rec(const BraidWord& w);
  PolyT leaf_poly(int l) const;
  PolyT pinned_union(const BraidWord& combined, const BraidWord& left,
                     const BraidWord& right);

  FEvaluator& f_;
  int leaf_shift_;  // uniform leaf translation, test hook
  std::unordered_map<std::string, PolyT> memo_;
  std::mutex mu_;
};

/// eval via QEvaluator, packaged with the degree assertion.
HiddenPolynomial eval_Q_direct(const BraidWord& w, FEvaluator& f);

}  // namespace braidq

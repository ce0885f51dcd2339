#include "braidq/hidden_q.hpp"

#include <sstream>
#include <stdexcept>

namespace braidq {

const LaurentA& CoefficientTable::at(int t) const {
  if (t < tmin || t > tmax)
    throw std::out_of_range("coefficient index outside table window");
  return entries[static_cast<size_t>(t - tmin)];
}

CoefficientTable c_table(const BraidWord& w, int tmin, int tmax,
                         FEvaluator& f) {
  CoefficientTable tbl;
  tbl.word = w;
  tbl.tmin = tmin;
  tbl.tmax = tmax;
  RationalInvariant g = f.eval(w).substitute_a_to_ax();
  tbl.entries = series_coefficients(g, tmin, tmax);
  return tbl;
}

std::string HiddenPolynomial::t0_text() const {
  if (!t0_probed) return "unprobed";
  if (!empirical_t0) return "<= " + std::to_string(probe_floor);
  return std::to_string(*empirical_t0);
}

namespace {

constexpr int kMaxDoublings = 8;

struct RecoveredPoly {
  PolyT poly;
  int lo;
  int hi;
};

// Interpolate the coefficient series at degree+1 consecutive points starting
// at a conservative proxy for the stabilization point, verified on
// verify_extra further points, doubling the start on mismatch.
RecoveredPoly poly_from_series(const BraidWord& w, int degree,
                               FEvaluator& f, int verify_extra) {
  int t1 = static_cast<int>(w.length()) + w.strands;
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, t1 *= 2) {
    int hi = t1 + degree + verify_extra;
    CoefficientTable tbl = c_table(w, t1, hi, f);
    std::vector<std::pair<long, LaurentA>> pts;
    for (int t = t1; t <= t1 + degree; ++t) pts.emplace_back(t, tbl.at(t));
    PolyT poly = interpolate(pts);
    bool ok = true;
    for (int t = t1 + degree + 1; t <= hi; ++t) {
      if (poly.eval_int(t) != tbl.at(t)) {
        ok = false;
        break;
      }
    }
    if (ok) return {std::move(poly), t1, hi};
  }
  throw std::runtime_error(
      "coefficient series never stabilized onto a polynomial; "
      "this indicates an evaluator bug");
}

}  // namespace

HiddenPolynomial recover_Q(const BraidWord& w, FEvaluator& f,
                           int verify_extra) {
  if (verify_extra < 3)
    throw std::invalid_argument("verify_extra must be at least 3");
  int l = component_count(w);
  RecoveredPoly rec = poly_from_series(w, l - 1, f, verify_extra);
  if (rec.poly.degree() != l - 1) {
    std::ostringstream os;
    os << "degree law violated: deg_T Q = " << rec.poly.degree()
       << " but the closure has " << l << " components";
    throw std::logic_error(os.str());
  }
  HiddenPolynomial hp;
  hp.poly = std::move(rec.poly);
  hp.components = l;
  hp.verified_lo = rec.lo;
  hp.verified_hi = rec.hi;
  hp.convention = f.config().convention;
  return hp;
}

std::optional<int> minimal_T0(const BraidWord& w, HiddenPolynomial& hp,
                              FEvaluator& f, int probe_floor) {
  hp.t0_probed = true;
  hp.probe_floor = probe_floor;
  if (probe_floor >= hp.verified_lo) {
    // The verified window already covers the floor: agreement persists.
    hp.empirical_t0 = std::nullopt;
    return hp.empirical_t0;
  }
  CoefficientTable tbl = c_table(w, probe_floor, hp.verified_lo, f);
  int t = hp.verified_lo;
  while (t - 1 >= probe_floor && tbl.at(t - 1) == hp.poly.eval_int(t - 1))
    --t;
  if (t == probe_floor) {
    hp.empirical_t0 = std::nullopt;  // agreement persists to the floor
  } else {
    hp.empirical_t0 = t;
  }
  return hp.empirical_t0;
}

PolyT op_S_alpha(const PolyT& p) {
  return p.shift(1).scale(LaurentA::term(-2, Rat(1)));
}

PolyT op_S_alpha_inv(const PolyT& p) {
  return p.shift(-1).scale(LaurentA::term(2, Rat(1)));
}

PolyT op_Delta_alpha(const PolyT& p) {
  return (p - p.shift(-1)).scale(LaurentA::term(1, Rat(1)));
}

bool tree_uses_split_union(const BraidWord& w, Strategy strategy) {
  BraidWord canon = detail::canonicalize(w);
  detail::StepPlan plan = detail::plan_step(canon, strategy);
  switch (plan.kind) {
    case detail::StepPlan::Kind::Leaf:
      return false;
    case detail::StepPlan::Kind::SplitUnion:
      return true;
    case detail::StepPlan::Kind::Destab:
      return tree_uses_split_union(plan.child, strategy);
    case detail::StepPlan::Kind::Skein: {
      auto [sw, sm] = conway_split(plan.working, plan.position);
      return tree_uses_split_union(sw, strategy) ||
             tree_uses_split_union(sm, strategy);
    }
  }
  return false;
}

PolyT QEvaluator::leaf_poly(int l) const {
  LaurentA a_inv = LaurentA::term(-1, Rat(1));
  LaurentA c = a_inv * (LaurentA::one() + a_inv).pow(
                           static_cast<unsigned>(l - 1));
  int shift = leaf_shift_;
  if (f_.config().convention == LeafConvention::Forced) shift += l - 1;
  return binom_poly(shift, static_cast<unsigned>(l - 1)).scale(c);
}

PolyT QEvaluator::pinned_union(const BraidWord& combined,
                               const BraidWord& left,
                               const BraidWord& right) {
  const bool left_trivial = left.strands == 1;
  const bool right_trivial = right.strands == 1;
  if (left_trivial || right_trivial) {
    // Union with a single trivial strand: the polynomial satisfies
    // A(T) - A(T-1) = (1 + a^-1) q(T), so only the antidifference constant
    // is missing; pin it against the series at one large T.
    const BraidWord& other = left_trivial ? right : left;
    PolyT q = eval_rec(other);
    PolyT a = antidifference(
        q.scale(LaurentA::one() + LaurentA::term(-1, Rat(1))));
    int tstar = static_cast<int>(combined.length()) + combined.strands;
    for (int attempt = 0; attempt <= 8; ++attempt, tstar *= 2) {
      CoefficientTable tbl = c_table(combined, tstar, tstar + 3, f_);
      LaurentA c0 = tbl.at(tstar) - a.eval_int(tstar);
      bool ok = true;
      for (int d = 1; d <= 3; ++d) {
        if (a.eval_int(tstar + d) + c0 != tbl.at(tstar + d)) {
          ok = false;
          break;
        }
      }
      if (ok) return a + PolyT::constant(c0);
    }
    throw std::runtime_error("union pin never stabilized");
  }
  // General union of two nontrivial factors: the polynomial is not a
  // function of the child polynomials (the convolution mixes in series
  // history), so take it from the combined braid's series in one window.
  int degree = component_count(combined) - 1;
  RecoveredPoly rec = poly_from_series(combined, degree, f_, 3);
  return rec.poly;
}

PolyT QEvaluator::eval_rec(const BraidWord& w) {
  BraidWord canon = detail::canonicalize(w);
  std::string key;
  {
    std::ostringstream os;
    os << canon.strands << ':';
    for (int e : canon.letters) os << e << ',';
    key = os.str();
  }
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  detail::StepPlan plan = detail::plan_step(canon, f_.config().strategy);
  PolyT q;
  switch (plan.kind) {
    case detail::StepPlan::Kind::Leaf:
      q = leaf_poly(canon.strands);
      break;
    case detail::StepPlan::Kind::SplitUnion:
      q = pinned_union(canon, plan.left, plan.right);
      break;
    case detail::StepPlan::Kind::Destab: {
      PolyT c = eval_rec(plan.child);
      q = plan.destab_positive
              ? c
              : c.shift(1).scale(LaurentA::term(-1, Rat(-1)));
      break;
    }
    case detail::StepPlan::Kind::Skein: {
      auto [switched, smoothed] = conway_split(plan.working, plan.position);
      PolyT qsw = eval_rec(switched);
      PolyT qsm = eval_rec(smoothed);
      if (plan.sign > 0) {
        // Q+ = S^-1(Q-) + Delta(Q0)
        q = op_S_alpha_inv(qsw) + op_Delta_alpha(qsm);
      } else {
        // Q- = S(Q+) - S(Delta(Q0))
        q = op_S_alpha(qsw) - op_S_alpha(op_Delta_alpha(qsm));
      }
      break;
    }
  }
  std::lock_guard lock(mu_);
  memo_.emplace(std::move(key), q);
  return q;
}

PolyT QEvaluator::eval(const BraidWord& w) { return eval_rec(w); }

HiddenPolynomial eval_Q_direct(const BraidWord& w, FEvaluator& f) {
  QEvaluator qe(f);
  PolyT q = qe.eval(w);
  int l = component_count(w);
  if (q.degree() != l - 1) {
    std::ostringstream os;
    os << "degree law violated in direct evaluation: deg_T Q = " << q.degree()
       << " with " << l << " components";
    throw std::logic_error(os.str());
  }
  HiddenPolynomial hp;
  hp.poly = std::move(q);
  hp.components = l;
  hp.convention = f.config().convention;
  return hp;
}

}  // namespace braidq

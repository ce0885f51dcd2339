#include "braidq/laws.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

#include "braidq/parallel.hpp"

namespace braidq {

std::uint64_t Rng::next() {
  s_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int Rng::range(int lo, int hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<int>(next() %
                               static_cast<std::uint64_t>(hi - lo + 1));
}

std::uint64_t case_seed(const FuzzSpec& spec, int index) {
  Rng mix(spec.seed ^ (0xA076'1D64'78BD'642Full *
                       static_cast<std::uint64_t>(index + 1)));
  return mix.next();
}

BraidWord random_word(Rng& rng, const FuzzSpec& spec) {
  int active = spec.max_strands < 2
                   ? spec.max_strands
                   : rng.range(2, std::min(5, spec.max_strands));
  int n = active;
  if (spec.max_strands > active && rng.chance(1, 4))
    n = active + rng.range(1, spec.max_strands - active);
  std::vector<int> letters;
  if (active >= 2) {
    int len = rng.range(0, spec.max_length);
    letters.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
      int idx = rng.range(1, active - 1);
      letters.push_back(rng.chance(1, 2) ? idx : -idx);
    }
  }
  if (rng.chance(1, 8))
    for (int& e : letters) e = -e;
  if (rng.chance(1, 8)) std::reverse(letters.begin(), letters.end());
  return BraidWord(n, std::move(letters));
}

std::optional<BraidWord> random_transverse_step(Rng& rng, const BraidWord& w,
                                                int max_strands) {
  const int len = static_cast<int>(w.length());
  for (int tries = 0; tries < 30; ++tries) {
    MarkovMove mv = CyclicRotate{0};
    switch (rng.range(0, 6)) {
      case 0:
        if (len < 2) continue;
        mv = FreeReduce{rng.range(0, len - 1)};
        break;
      case 1:
        if (len < 2) continue;
        mv = BraidRelationFar{rng.range(0, len - 2)};
        break;
      case 2:
        if (len < 3) continue;
        mv = BraidRelationAdjacent{rng.range(0, len - 3)};
        break;
      case 3: {
        if (w.strands < 2) continue;
        int idx = rng.range(1, w.strands - 1);
        mv = Conjugate{rng.chance(1, 2) ? idx : -idx};
        break;
      }
      case 4:
        mv = CyclicRotate{rng.range(0, std::max(0, len - 1))};
        break;
      case 5:
        if (w.strands >= max_strands + 2) continue;
        mv = StabilizePositive{};
        break;
      default:
        mv = DestabilizePositive{};
        break;
    }
    if (auto r = apply_move(w, mv)) return r;
  }
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string word_text(const BraidWord& w) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < w.letters.size(); ++i)
    os << (i ? " " : "") << w.letters[i];
  os << "] on " << w.strands;
  return os.str();
}

struct CaseRunner {
  LawReport report;
  std::vector<std::optional<LawFailure>> slots;
  Clock::time_point start = Clock::now();

  explicit CaseRunner(std::string law, int n) {
    report.law = std::move(law);
    report.cases = n;
    slots.resize(static_cast<size_t>(n));
  }

  template <typename Fn>
  void run(const FuzzSpec& spec, Fn&& body) {
    parallel_for(report.cases, spec.threads, [&](int i) {
      std::uint64_t cs = case_seed(spec, i);
      Rng rng(cs);
      try {
        body(i, rng, cs);
      } catch (const std::exception& ex) {
        slots[static_cast<size_t>(i)] =
            LawFailure{BraidWord(), cs, std::string("exception: ") + ex.what()};
      }
    });
    for (auto& s : slots)
      if (s) report.failures.push_back(std::move(*s));
    report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() -
                                                               start)
                         .count();
  }
};

// (B+, B-, B0) at the chosen crossing of w.
struct SkeinTriple {
  BraidWord plus, minus, zero;
};

SkeinTriple triple_at(const BraidWord& w, int pos) {
  auto [switched, smoothed] = conway_split(w, pos);
  if (w.letters[pos] > 0) return {w, switched, smoothed};
  return {switched, w, smoothed};
}

Laurent2 a_term(int j, int k, long c) { return Laurent2::term(j, k, Rat(c)); }

}  // namespace

LawReport check_skein_identity(const FuzzSpec& spec, const EvalConfig& cfg) {
  FEvaluator f(cfg);
  CaseRunner cr("skein-identity", spec.case_count);
  cr.run(spec, [&](int i, Rng& rng, std::uint64_t cs) {
    BraidWord w = random_word(rng, spec);
    if (w.letters.empty()) return;  // vacuous: no crossing to resolve
    int pos = rng.range(0, static_cast<int>(w.length()) - 1);
    SkeinTriple tr = triple_at(w, pos);
    RationalInvariant fp = f.eval(tr.plus);
    RationalInvariant fm = f.eval(tr.minus);
    RationalInvariant f0 = f.eval(tr.zero);
    RationalInvariant lhs = fp * a_term(-1, 0, 1) - fm * a_term(1, 0, 1);
    RationalInvariant rhs = f0 * (a_term(0, -1, 1) - a_term(0, 1, 1));
    if (lhs != rhs) {
      cr.slots[static_cast<size_t>(i)] =
          LawFailure{w, cs, "F-skein mismatch at pos " + std::to_string(pos)};
      return;
    }
    PolyT qp = recover_Q(tr.plus, f).poly;
    PolyT qm = recover_Q(tr.minus, f).poly;
    PolyT q0 = recover_Q(tr.zero, f).poly;
    PolyT ql = qp.shift(1).scale(LaurentA::term(-1, Rat(1))) -
               qm.scale(LaurentA::term(1, Rat(1)));
    PolyT qr = q0.shift(1) - q0;
    if (ql != qr) {
      cr.slots[static_cast<size_t>(i)] =
          LawFailure{w, cs, "Q-skein mismatch at pos " + std::to_string(pos)};
    }
  });
  return cr.report;
}

LawReport check_transverse_invariance(const FuzzSpec& spec,
                                      const EvalConfig& cfg) {
  FEvaluator f(cfg);
  CaseRunner cr("transverse-invariance", spec.case_count);
  cr.run(spec, [&](int i, Rng& rng, std::uint64_t cs) {
    BraidWord w0 = random_word(rng, spec);
    RationalInvariant f0 = f.eval(w0);
    PolyT q0 = recover_Q(w0, f).poly;
    BraidWord w = w0;
    int moves = rng.range(0, spec.move_budget);
    for (int m = 0; m < moves; ++m) {
      if (auto stepped = random_transverse_step(rng, w, spec.max_strands))
        w = *stepped;
    }
    if (f.eval(w) != f0) {
      cr.slots[static_cast<size_t>(i)] =
          LawFailure{w0, cs, "F changed under transverse moves; reached " +
                                 word_text(w)};
      return;
    }
    if (recover_Q(w, f).poly != q0) {
      cr.slots[static_cast<size_t>(i)] =
          LawFailure{w0, cs, "Q changed under transverse moves; reached " +
                                 word_text(w)};
      return;
    }
    // Negative stabilization scales F by -a^-1 x^-1 and shifts Q.
    BraidWord wneg = *apply_move(w0, StabilizeNegative{});
    if (f.eval(wneg) != f0 * a_term(-1, -1, -1)) {
      cr.slots[static_cast<size_t>(i)] =
          LawFailure{w0, cs, "negative-stabilization law failed for F"};
      return;
    }
    PolyT expect = q0.shift(1).scale(LaurentA::term(-1, Rat(-1)));
    if (recover_Q(wneg, f).poly != expect) {
      cr.slots[static_cast<size_t>(i)] =
          LawFailure{w0, cs, "negative-stabilization law failed for Q"};
    }
  });
  return cr.report;
}

LawReport check_degree_law(const FuzzSpec& spec, const EvalConfig& cfg) {
  FEvaluator f(cfg);
  CaseRunner cr("degree-law", spec.case_count);
  cr.run(spec, [&](int i, Rng& rng, std::uint64_t cs) {
    BraidWord w = random_word(rng, spec);
    HiddenPolynomial hp = recover_Q(w, f);  // throws on degree violation
    if (hp.poly.degree() != component_count(w) - 1) {
      cr.slots[static_cast<size_t>(i)] = LawFailure{w, cs, "degree mismatch"};
    }
  });
  return cr.report;
}

namespace {

// Deterministically collects corpus words satisfying pred.
std::vector<BraidWord> filtered_corpus(const FuzzSpec& spec,
                                       bool (*pred)(const BraidWord&)) {
  std::vector<BraidWord> out;
  for (int k = 0; static_cast<int>(out.size()) < spec.case_count &&
                  k < spec.case_count * 1000;
       ++k) {
    Rng rng(case_seed(spec, k));
    BraidWord w = random_word(rng, spec);
    if (pred(w)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

LawReport check_parity_knot(const FuzzSpec& spec, const EvalConfig& cfg) {
  FEvaluator f(cfg);
  std::vector<BraidWord> knots = filtered_corpus(
      spec, [](const BraidWord& w) { return component_count(w) == 1; });
  CaseRunner cr("parity-knot", static_cast<int>(knots.size()));
  cr.run(spec, [&](int i, Rng&, std::uint64_t cs) {
    const BraidWord& w = knots[static_cast<size_t>(i)];
    PolyT q = recover_Q(w, f).poly;
    std::vector<Rat> at_one = q.at_alpha_one();
    if (at_one.size() != 1 || !is_odd_integer(at_one[0])) {
      cr.slots[static_cast<size_t>(i)] = LawFailure{
          w, cs,
          "Q(1,T) is not a constant odd integer: " +
              (at_one.empty() ? std::string("0") : rat_to_string(at_one[0]))};
    }
  });
  return cr.report;
}

LawReport check_leading_coeff_mod(const FuzzSpec& spec,
                                  const EvalConfig& cfg) {
  FEvaluator f(cfg);
  CaseRunner cr("leading-coefficient", spec.case_count);
  cr.run(spec, [&](int i, Rng& rng, std::uint64_t cs) {
    BraidWord w = random_word(rng, spec);
    int l = component_count(w);
    PolyT q = recover_Q(w, f).poly;
    std::vector<Rat> at_one = q.at_alpha_one();
    if (static_cast<int>(at_one.size()) != l) {
      cr.slots[static_cast<size_t>(i)] =
          LawFailure{w, cs, "deg_T Q(1,T) dropped below l-1"};
      return;
    }
    Rat fact(1);
    for (int m = 2; m <= l - 1; ++m) fact *= m;
    Rat k = at_one.back() * fact;
    if (!is_integer(k)) {
      cr.slots[static_cast<size_t>(i)] =
          LawFailure{w, cs, "(l-1)! * leading coefficient is not an integer"};
      return;
    }
    Int ki = k.get_num();
    Int mod = Int(1) << l;          // 2^l
    Int want = Int(1) << (l - 1);   // 2^(l-1)
    Int rem;
    mpz_mod(rem.get_mpz_t(), ki.get_mpz_t(), mod.get_mpz_t());
    if (rem != want) {
      cr.slots[static_cast<size_t>(i)] = LawFailure{
          w, cs,
          "k = " + ki.get_str() + " is not 2^(l-1) mod 2^l for l = " +
              std::to_string(l)};
    }
  });
  return cr.report;
}

LawReport check_tree_independence(const FuzzSpec& spec,
                                  LeafConvention convention) {
  EvalConfig a{convention, Strategy::StaircaseFirst, false, true};
  EvalConfig b{convention, Strategy::NegativeElimFirst, false, true};
  FEvaluator fa(a), fb(b);
  CaseRunner cr("tree-independence", spec.case_count);
  cr.report.gating = (convention == LeafConvention::Forced);
  cr.run(spec, [&](int i, Rng& rng, std::uint64_t cs) {
    BraidWord w = random_word(rng, spec);
    bool f_eq = fa.eval(w) == fb.eval(w);
    bool q_eq = recover_Q(w, fa).poly == recover_Q(w, fb).poly;
    if (!f_eq || !q_eq) {
      cr.slots[static_cast<size_t>(i)] = LawFailure{
          w, cs,
          std::string(f_eq ? "" : "F diverges between strategies; ") +
              (q_eq ? "" : "Q diverges between strategies")};
    }
  });
  return cr.report;
}

std::vector<LawReport> run_all_laws(const FuzzSpec& spec,
                                    const EvalConfig& cfg) {
  std::vector<LawReport> out;
  out.push_back(check_skein_identity(spec, cfg));
  out.push_back(check_transverse_invariance(spec, cfg));
  out.push_back(check_degree_law(spec, cfg));
  out.push_back(check_parity_knot(spec, cfg));
  out.push_back(check_leading_coeff_mod(spec, cfg));
  out.push_back(check_tree_independence(spec, cfg.convention));
  return out;
}

std::string LawReport::to_json() const {
  nlohmann::ordered_json j;
  j["law"] = law;
  j["cases"] = cases;
  j["gating"] = gating;
  j["failures"] = nlohmann::ordered_json::array();
  for (const LawFailure& fl : failures) {
    nlohmann::ordered_json e;
    e["word"] = fl.word.letters;
    e["strands"] = fl.word.strands;
    e["case_seed"] = fl.case_seed;
    e["detail"] = fl.detail;
    j["failures"].push_back(std::move(e));
  }
  j["wall_ms"] = wall_ms;
  return j.dump(2);
}

std::string LawReport::to_table_row() const {
  std::ostringstream os;
  os << law;
  for (size_t i = law.size(); i < 24; ++i) os << ' ';
  os << cases << " cases, " << failures.size() << " failures"
     << (gating ? "" : " (experiment, non-gating)");
  return os.str();
}

}  // namespace braidq

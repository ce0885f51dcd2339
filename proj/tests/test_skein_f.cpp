#include <doctest.h>

#include <thread>

#include "braidq/laws.hpp"
#include "braidq/skein_f.hpp"

using namespace braidq;

namespace {

BraidWord bw(int n, std::vector<int> ls) { return BraidWord(n, std::move(ls)); }

Laurent2 t2(int j, int k, long c) { return Laurent2::term(j, k, Rat(c)); }

RationalInvariant unknot_value() {
  return RationalInvariant(t2(-1, 1, 1), 1);  // a^-1 x / (1 - x^2)
}

}  // namespace

TEST_CASE("unlink leaf values") {
  RationalInvariant u = unknot_value();
  CHECK(leaf_unlink(1, LeafConvention::Forced) == u);
  CHECK(leaf_unlink(1, LeafConvention::Paper) == u);

  // l = 2 under the paper-table convention: a^-1 x^3 (1 + a^-1 x) / (1-x^2)^2
  RationalInvariant paper2(t2(-1, 3, 1) * (Laurent2::one() + t2(-1, 1, 1)),
                           2);
  CHECK(leaf_unlink(2, LeafConvention::Paper) == paper2);

  CHECK_THROWS_AS(leaf_unlink(0, LeafConvention::Forced),
                  std::invalid_argument);
}

TEST_CASE("forced two-strand leaf solves the skein triple") {
  // Independent oracle: resolve the crossing of the sigma_1 closure. The
  // positive side destabilizes to the unknot, the negative side is the
  // negative stabilization of the unknot, and the smoothing is the 2-unlink:
  //   a^-1 F(+) - a F(-) = (x^-1 - x) F(unlink2)
  RationalInvariant u = unknot_value();
  RationalInvariant fplus = u;
  RationalInvariant fminus = u * t2(-1, -1, -1);
  RationalInvariant lhs = fplus * t2(-1, 0, 1) - fminus * t2(1, 0, 1);
  // divide by (x^-1 - x) = (1-x^2)/x: multiply by x and bump the denominator
  RationalInvariant f0 = (lhs * t2(0, 1, 1)).div_one_minus_x2();
  CHECK(f0 == leaf_unlink(2, LeafConvention::Forced));
  CHECK(f0 != leaf_unlink(2, LeafConvention::Paper));
}

TEST_CASE("split-union combine") {
  RationalInvariant u = unknot_value();
  CHECK(split_union_combine(u, u) == leaf_unlink(2, LeafConvention::Forced));

  // adjoining an unknot multiplies by (1 + a^-1 x)/(1 - x^2)
  Rng rng(12);
  for (int i = 0; i < 30; ++i) {
    Laurent2 num;
    for (int t = 0, m = rng.range(1, 3); t < m; ++t)
      num += t2(rng.range(-2, 2), rng.range(-2, 2), rng.range(-3, 3));
    RationalInvariant f(num, rng.range(0, 2));
    RationalInvariant expect =
        (f * (Laurent2::one() + t2(-1, 1, 1))).div_one_minus_x2();
    CHECK(split_union_combine(f, u) == expect);
  }

  // associativity on three unknots
  RationalInvariant l2 = split_union_combine(u, u);
  CHECK(split_union_combine(l2, u) == leaf_unlink(3, LeafConvention::Forced));
  CHECK(split_union_combine(u, l2) == leaf_unlink(3, LeafConvention::Forced));
}

TEST_CASE("eval on the axioms' anchors") {
  FEvaluator f({});
  CHECK(f.eval(bw(1, {})) == unknot_value());
  // negative stabilization of the unknot
  CHECK(f.eval(bw(2, {-1})) == RationalInvariant(t2(-2, 0, -1), 1));
  // positive destabilization
  CHECK(f.eval(bw(2, {1})) == unknot_value());
  CHECK(f.eval(bw(3, {1, 2})) == unknot_value());
}

TEST_CASE("trefoil: engine equals the hand-resolved tree") {
  for (LeafConvention conv :
       {LeafConvention::Forced, LeafConvention::Paper}) {
    FEvaluator f({conv});
    RationalInvariant u = unknot_value();
    Laurent2 a2 = t2(2, 0, 1);
    Laurent2 askein = t2(1, 0, 1) * (t2(0, -1, 1) - t2(0, 1, 1));
    RationalInvariant f11 = leaf_unlink(2, conv) * a2 + u * askein;
    RationalInvariant f111 = u * a2 + f11 * askein;
    CHECK(f.eval(bw(2, {1, 1})) == f11);
    CHECK(f.eval(bw(2, {1, 1, 1})) == f111);
  }
}

TEST_CASE("presentation independence of the maximal trefoil") {
  FEvaluator f({});
  CHECK(self_linking(bw(2, {1, 1, 1})) == self_linking(bw(3, {1, 2, 1, 2})));
  CHECK(f.eval(bw(2, {1, 1, 1})) == f.eval(bw(3, {1, 2, 1, 2})));
}

TEST_CASE("strategies agree under the forced convention") {
  FEvaluator stair({LeafConvention::Forced, Strategy::StaircaseFirst});
  FEvaluator neg({LeafConvention::Forced, Strategy::NegativeElimFirst});
  for (const auto& w :
       {bw(2, {-1}), bw(2, {-1, -1}), bw(3, {-1, 2, -1}), bw(3, {1, -2, 1}),
        bw(4, {1, 3, -2}), bw(2, {1, 1, 1, 1, 1})}) {
    CHECK(stair.eval(w) == neg.eval(w));
  }
}

TEST_CASE("Paper-table convention diverges between strategies") {
  FEvaluator stair({LeafConvention::Paper, Strategy::StaircaseFirst});
  FEvaluator neg({LeafConvention::Paper, Strategy::NegativeElimFirst});
  // one strategy destabilizes straight to the unknot chain, the other
  // resolves the crossing and touches a 2-unlink leaf
  CHECK(stair.eval(bw(2, {-1})) != neg.eval(bw(2, {-1})));
}

TEST_CASE("skein identity and negative stabilization, fixed words") {
  FEvaluator f({});
  Laurent2 rhs_factor = t2(0, -1, 1) - t2(0, 1, 1);
  for (const auto& w : {bw(2, {1, 1, 1}), bw(3, {1, -2, 1, 2}),
                        bw(2, {-1, -1}), bw(4, {1, 2, 3})}) {
    for (int pos = 0; pos < static_cast<int>(w.length()); ++pos) {
      auto [sw, sm] = conway_split(w, pos);
      const BraidWord& plus = w.letters[pos] > 0 ? w : sw;
      const BraidWord& minus = w.letters[pos] > 0 ? sw : w;
      CHECK(f.eval(plus) * t2(-1, 0, 1) - f.eval(minus) * t2(1, 0, 1) ==
            f.eval(sm) * rhs_factor);
    }
    BraidWord stab = *apply_move(w, StabilizeNegative{});
    CHECK(f.eval(stab) == f.eval(w) * t2(-1, -1, -1));
  }
}

TEST_CASE("substituted numerators have even x-powers only") {
  FEvaluator f({});
  for (const auto& w : {bw(2, {1, 1, 1}), bw(3, {1, -2, 1, 2}), bw(4, {}),
                        bw(3, {-1, -1, -2})}) {
    CHECK(f.eval(w).substitute_a_to_ax().num().x_powers_even());
  }
}

TEST_CASE("memoization does not change values; stats move") {
  BraidWord w = bw(3, {1, -2, 1, 2, -1});
  FEvaluator with({LeafConvention::Forced, Strategy::StaircaseFirst, false,
                   true});
  FEvaluator without({LeafConvention::Forced, Strategy::StaircaseFirst, false,
                      false});
  CHECK(with.eval(w) == without.eval(w));
  CHECK(with.stats().memo_misses > 0);
  with.eval(w);
  CHECK(with.stats().memo_hits > 0);
}

TEST_CASE("concurrent evaluation is deterministic") {
  FEvaluator shared({});
  BraidWord w = bw(4, {1, -2, 3, -2, 1, 3});
  RationalInvariant expect = eval_F(w);
  std::vector<RationalInvariant> got(8);
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] { got[t] = shared.eval(w); });
  for (auto& th : pool) th.join();
  for (const auto& v : got) CHECK(v == expect);
}

TEST_CASE("tree record shapes and replay") {
  FEvaluator f({LeafConvention::Forced, Strategy::StaircaseFirst, true});

  auto [v_empty, t_empty] = f.eval_with_tree(bw(2, {}));
  REQUIRE(t_empty.nodes.size() == 1);
  CHECK(t_empty.nodes[0].kind == "leaf");
  CHECK(replay_tree(t_empty, LeafConvention::Forced) ==
        leaf_unlink(2, LeafConvention::Forced));

  auto [v_neg, t_neg] = f.eval_with_tree(bw(2, {-1}));
  REQUIRE(t_neg.root >= 0);
  CHECK(t_neg.nodes[t_neg.root].kind == "destab-neg");
  CHECK(replay_tree(t_neg, LeafConvention::Forced) == v_neg);

  auto [v_sq, t_sq] = f.eval_with_tree(bw(2, {1, 1}));
  CHECK(t_sq.nodes[t_sq.root].kind == "split");
  CHECK(t_sq.nodes[t_sq.root].children.size() == 2);
  CHECK(replay_tree(t_sq, LeafConvention::Forced) == v_sq);

  auto [v3, t3] = f.eval_with_tree(bw(2, {1, 1, 1}));
  CHECK(replay_tree(t3, LeafConvention::Forced) == v3);
  CHECK(v3 == f.eval(bw(2, {1, 1, 1})));

  auto [v_tref, t_tref] = f.eval_with_tree(bw(3, {1, 2, 1, 2}));
  CHECK(replay_tree(t_tref, LeafConvention::Forced) == v_tref);
  CHECK(v_tref == f.eval(bw(3, {1, 2, 1, 2})));

  // JSON round trip
  TreeRecord back = TreeRecord::from_json(t_tref.to_json());
  CHECK(replay_tree(back, LeafConvention::Forced) == v_tref);
  CHECK(t_tref.to_dot().find("digraph") == 0);
}

TEST_CASE("replay rejects malformed records") {
  TreeRecord t;
  t.root = 0;
  t.nodes.push_back({{}, 2, "leaf", {}, ""});
  t.nodes[0].children = {5};
  CHECK_THROWS_AS(replay_tree(t, LeafConvention::Forced),
                  std::invalid_argument);
  t.nodes[0].children = {};
  t.nodes[0].kind = "frobnicate";
  CHECK_THROWS_AS(replay_tree(t, LeafConvention::Forced),
                  std::invalid_argument);
  TreeRecord empty;
  CHECK_THROWS_AS(replay_tree(empty, LeafConvention::Forced),
                  std::invalid_argument);
}

TEST_CASE("transverse move sequences leave the value unchanged") {
  FEvaluator f({});
  BraidWord w = bw(3, {1, 2, 1, 2});
  RationalInvariant v = f.eval(w);
  // conjugate, rotate, stabilize, braid relation
  w = *apply_move(w, Conjugate{2});
  w = *apply_move(w, CyclicRotate{3});
  w = *apply_move(w, StabilizePositive{});
  CHECK(f.eval(w) == v);
  Rng rng(77);
  for (int i = 0; i < 12; ++i) {
    if (auto s = random_transverse_step(rng, w, 6)) w = *s;
    CHECK(f.eval(w) == v);
  }
}

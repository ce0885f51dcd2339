#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braidq/braidword.hpp"
#include "braidq/invariant.hpp"

namespace braidq {

/// Value assigned to crossingless unlink leaves. Forced is the assignment
/// consistent with the skein normalization (the default); Paper
/// shifts the l-strand leaf by x^(2(l-1)) and is kept to reproduce published
/// tables. The two agree for l = 1.
enum class LeafConvention { Forced, Paper };

/// Order in which the evaluator picks its next move. StaircaseFirst prefers
/// structural reduction (splits, destabilization, Coxeter normal form);
/// NegativeElimFirst resolves negative crossings before anything structural.
enum class Strategy { StaircaseFirst, NegativeElimFirst };

struct EvalConfig {
  LeafConvention convention = LeafConvention::Forced;
  Strategy strategy = Strategy::StaircaseFirst;
  bool record_tree = false;
  bool memo_enabled = true;
};

const char* to_string(LeafConvention c);
const char* to_string(Strategy s);

/// F-value of the crossingless l-strand unlink under the given convention.
RationalInvariant leaf_unlink(int l, LeafConvention convention);

/// Value of a disjoint union from the factors: f1 * f2 * (1 + a x^-1).
RationalInvariant split_union_combine(const RationalInvariant& f1,
                                      const RationalInvariant& f2);

/// Serialized computation tree. Node kinds: "leaf", "split", "destab-pos",
/// "destab-neg", "split-union", "rewrite". Split nodes carry "pos=<p>" in the
/// annotation and exactly two children, switched then smoothed.
struct TreeNode {
  std::vector<int> word;
  int strands = 1;
  std::string kind;
  std::vector<int> children;
  std::string annotation;
};

struct TreeRecord {
  std::vector<TreeNode> nodes;
  int root = -1;

  std::string to_json() const;
  static TreeRecord from_json(const std::string& text);
  std::string to_dot() const;
};

/// Recomputes the root value from leaves and annotations only. Throws on
/// malformed records (dangling child, unknown kind, wrong child count).
RationalInvariant replay_tree(const TreeRecord& t, LeafConvention convention);

namespace detail {

/// One evaluator decision for a canonical word. `working` differs from the
/// input exactly when a rewrite (exchange or staircase) was interposed.
struct StepPlan {
  enum class Kind { Leaf, SplitUnion, Destab, Skein };
  Kind kind = Kind::Leaf;
  BraidWord working;
  std::string rewrite_note;
  BraidWord left, right;                  // SplitUnion
  BraidWord child;                        // Destab
  bool destab_positive = true;            // Destab
  int position = -1;                      // Skein
  int sign = 0;                           // Skein: sign of working[position]
};

StepPlan plan_step(const BraidWord& canonical, Strategy strategy);

BraidWord canonicalize(const BraidWord& w);

}  // namespace detail

/// Memoized, provably terminating evaluator of the transverse invariant of
/// a closed braid word. The measure (negative letters, length, strands)
/// drops lexicographically along every recursion edge. One evaluator is
/// bound to one (convention, strategy) pair; its memo is shared and safe to
/// hit from concurrent workers (insert-if-absent, idempotent values).
class FEvaluator {
 public:
  explicit FEvaluator(EvalConfig cfg) : cfg_(cfg) {}

  const EvalConfig& config() const { return cfg_; }

  RationalInvariant eval(const BraidWord& w);
  std::pair<RationalInvariant, TreeRecord> eval_with_tree(const BraidWord& w);

  struct Stats {
    std::uint64_t memo_hits = 0;
    std::uint64_t memo_misses = 0;
  };
  Stats stats() const;

 private:
  struct TreeBuilder;
  RationalInvariant eval_rec(const BraidWord& w, TreeBuilder* tb,
                             int* node_out);

  struct Key {
    std::vector<int> letters;
    int strands;
    bool operator==(const Key& o) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const;
  };

  EvalConfig cfg_;
  std::unordered_map<Key, RationalInvariant, KeyHash> memo_;
  mutable std::shared_mutex mu_;
  std::atomic<std::uint64_t> hits_{0}, misses_{0};
};

/// Convenience wrapper: evaluate once with a fresh evaluator.
RationalInvariant eval_F(const BraidWord& w, const EvalConfig& cfg = {});

}  // namespace braidq

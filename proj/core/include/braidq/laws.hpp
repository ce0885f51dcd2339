#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidq/hidden_q.hpp"
#include "braidq/skein_f.hpp"

namespace braidq {

/// Deterministic corpus description: identical FuzzSpec, identical corpus.
struct FuzzSpec {
  std::uint64_t seed = 7;
  int max_strands = 6;
  int max_length = 12;
  int case_count = 200;
  int move_budget = 10;
  int threads = 1;
};

struct LawFailure {
  BraidWord word;
  std::uint64_t case_seed = 0;
  std::string detail;
};

struct LawReport {
  std::string law;
  int cases = 0;
  std::vector<LawFailure> failures;
  double wall_ms = 0;
  bool gating = true;  // experiment reports never gate

  bool ok() const { return !gating || failures.empty(); }
  std::string to_json() const;
  std::string to_table_row() const;
};

/// splitmix64; self-contained so corpora are reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi], inclusive.
  int range(int lo, int hi);
  bool chance(int num, int den) { return range(1, den) <= num; }

 private:
  std::uint64_t s_;
};

/// Seed for case `index` of a corpus; stable and independent per index.
std::uint64_t case_seed(const FuzzSpec& spec, int index);

/// Random word: strand count biased to 2..5 with occasional trailing trivial
/// strands; mirrors and reverses injected to exercise both skein
/// orientations.
BraidWord random_word(Rng& rng, const FuzzSpec& spec);

/// Random applicable transverse move (never a negative stabilization pair).
std::optional<BraidWord> random_transverse_step(Rng& rng, const BraidWord& w,
                                                int max_strands);

LawReport check_skein_identity(const FuzzSpec& spec, const EvalConfig& cfg);
LawReport check_transverse_invariance(const FuzzSpec& spec,
                                      const EvalConfig& cfg);
LawReport check_degree_law(const FuzzSpec& spec, const EvalConfig& cfg);
LawReport check_parity_knot(const FuzzSpec& spec, const EvalConfig& cfg);
LawReport check_leading_coeff_mod(const FuzzSpec& spec, const EvalConfig& cfg);

/// Compares the two strategies. Gating under the forced convention; under
/// Paper it runs in experiment mode and records divergence witnesses
/// without failing.
LawReport check_tree_independence(const FuzzSpec& spec,
                                  LeafConvention convention);

/// All suites in a fixed order (tree-independence runs under the given
/// convention; the rest under cfg).
std::vector<LawReport> run_all_laws(const FuzzSpec& spec,
                                    const EvalConfig& cfg);

}  // namespace braidq

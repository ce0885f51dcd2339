#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "braidq/laws.hpp"

namespace braidq::cli {

/// Exit codes: 0 success, 1 gating law failure, 2 input error.
inline constexpr int kOk = 0;
inline constexpr int kLawFailure = 1;
inline constexpr int kInputError = 2;

struct Options {
  LeafConvention convention = LeafConvention::Forced;
  Strategy strategy = Strategy::StaircaseFirst;
  std::optional<int> tmax;
  std::optional<int> probe_floor;
  int verify_extra = 5;
  std::uint64_t seed = 7;
  int cases = 200;
  int threads = 1;
  std::string emit = "text";  // text | json
};

EvalConfig to_eval_config(const Options& o);

/// Deterministic payload goes to `out`; timing and memo statistics to `err`.
int cmd_eval(const std::string& word_text, int strands, const Options& o,
             std::ostream& out, std::ostream& err);

int cmd_table(const std::string& family, int kmin, int kmax,
              const Options& o, std::ostream& out, std::ostream& err);

int cmd_tree(const std::string& word_text, int strands,
             const std::string& format, const Options& o, std::ostream& out,
             std::ostream& err);

int cmd_verify(const std::string& suite, const Options& o,
               const std::string& report_dir, std::ostream& out,
               std::ostream& err);

int cmd_corpus(const std::string& path, const Options& o, std::ostream& out,
               std::ostream& err);

}  // namespace braidq::cli

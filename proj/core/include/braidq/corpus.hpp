#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braidq/hidden_q.hpp"

namespace braidq {

/// One line of a corpus file: `name ; strands ; letters ; [expected-Q]`.
/// `#` starts a comment, blank lines are skipped.
struct CorpusEntry {
  std::string name;
  int strands = 1;
  std::vector<int> letters;
  std::optional<std::string> expected_q;
};

/// Parses one non-comment line; throws std::invalid_argument on bad input.
CorpusEntry parse_corpus_line(const std::string& line);

struct CorpusLoad {
  std::vector<CorpusEntry> entries;
  std::vector<std::pair<int, std::string>> line_errors;  // (line no, message)
};

CorpusLoad load_corpus(std::istream& in);

struct CorpusResult {
  std::string name;
  bool ok = false;
  std::string error;
  int components = 0;
  int self_linking = 0;
  int degree = -1;
  std::string q_text;
  std::string t0_text;
  bool expected_checked = false;
  bool expected_matched = false;
};

/// Evaluates entries on a worker pool sharing one evaluator; results are
/// ordered by input index regardless of scheduling.
std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                     const EvalConfig& cfg, int threads,
                                     int verify_extra = 5);

/// Deterministic JSON-lines rendering of one result (no timing fields).
std::string corpus_result_jsonl(const CorpusResult& r);

}  // namespace braidq

#include "commands.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "braidq/corpus.hpp"
#include "braidq/render_json.hpp"

namespace braidq::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string word_display(const BraidWord& w) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < w.letters.size(); ++i)
    os << (i ? " " : "") << w.letters[i];
  os << "] on " << w.strands << " strands";
  return os.str();
}

void print_stats(std::ostream& err, const FEvaluator& f,
                 Clock::time_point start) {
  auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start);
  auto st = f.stats();
  err << "# " << ms.count() << " ms, memo hits " << st.memo_hits
      << ", misses " << st.memo_misses << "\n";
}

// Q of the two-strand closure with k crossings, in closed form.
PolyT two_strand_closed_form(int k, LeafConvention conv) {
  LaurentA one_plus_ainv = LaurentA::one() + LaurentA::term(-1, Rat(1));
  if (k % 2 != 0) {
    int m = (k - 1) / 2;  // k = 2m+1
    LaurentA c = LaurentA::term(2 * m, Rat(m)) +
                 LaurentA::term(2 * m - 1, Rat(m + 1));
    return PolyT::constant(c);
  }
  int m = k / 2;  // k = 2m
  int shift = conv == LeafConvention::Paper ? -m : -m + 1;
  PolyT lin(std::vector<LaurentA>{LaurentA::term(0, Rat(shift)),
                                  LaurentA::one()});
  return lin.scale(one_plus_ainv * LaurentA::term(2 * m - 1, Rat(1)));
}

BraidWord two_strand_word(int k) {
  std::vector<int> ls(static_cast<size_t>(std::abs(k)), k >= 0 ? 1 : -1);
  return BraidWord(2, std::move(ls));
}

}  // namespace

EvalConfig to_eval_config(const Options& o) {
  EvalConfig cfg;
  cfg.convention = o.convention;
  cfg.strategy = o.strategy;
  return cfg;
}

int cmd_eval(const std::string& word_text, int strands, const Options& o,
             std::ostream& out, std::ostream& err) {
  BraidWord w = parse_word(word_text, strands);
  auto start = Clock::now();
  FEvaluator f(to_eval_config(o));
  RationalInvariant fv = f.eval(w);
  HiddenPolynomial hp = recover_Q(w, f, o.verify_extra);
  int floor = o.probe_floor.value_or(
      -(static_cast<int>(w.length()) + w.strands));
  minimal_T0(w, hp, f, floor);
  int tmax = o.tmax.value_or(hp.verified_lo);
  int tmin = std::min(floor, 0);
  CoefficientTable tbl = c_table(w, tmin, std::max(tmin, tmax), f);

  if (o.emit == "json") {
    nlohmann::ordered_json j;
    j["word"] = w.letters;
    j["strands"] = w.strands;
    j["convention"] = to_string(o.convention);
    j["strategy"] = to_string(o.strategy);
    j["self_linking"] = self_linking(w);
    j["components"] = hp.components;
    j["F"] = invariant_json(fv);
    nlohmann::ordered_json ct;
    ct["tmin"] = tbl.tmin;
    ct["tmax"] = tbl.tmax;
    ct["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : tbl.entries) ct["entries"].push_back(laurent_a_json(e));
    j["c_table"] = std::move(ct);
    j["Q"] = hidden_polynomial_json(hp);
    j["deg_T"] = hp.poly.degree();
    out << j.dump(2) << "\n";
  } else {
    out << "word: " << word_display(w) << "\n";
    out << "self-linking: " << self_linking(w) << "\n";
    out << "components: " << hp.components << "\n";
    out << "convention: " << to_string(o.convention)
        << ", strategy: " << to_string(o.strategy) << "\n";
    out << "F = " << fv.to_text() << "\n";
    for (int t = tbl.tmin; t <= tbl.tmax; ++t)
      out << "c[" << t << "] = " << tbl.at(t).to_text() << "\n";
    out << "Q = " << hp.poly.to_text() << "\n";
    out << "deg_T Q = " << hp.poly.degree() << "\n";
    out << "T0 = " << hp.t0_text() << "\n";
  }
  print_stats(err, f, start);
  return kOk;
}

int cmd_table(const std::string& family, int kmin, int kmax,
              const Options& o, std::ostream& out, std::ostream& err) {
  if (family != "two-strand") {
    err << "unknown family: " << family << "\n";
    return kInputError;
  }
  if (kmin > kmax) {
    err << "empty k range\n";
    return kInputError;
  }
  FEvaluator f(to_eval_config(o));
  bool all_match = true;
  for (int k = kmin; k <= kmax; ++k) {
    BraidWord w = two_strand_word(k);
    PolyT got = recover_Q(w, f, o.verify_extra).poly;
    PolyT expect = two_strand_closed_form(k, o.convention);
    bool match = got == expect;
    all_match = all_match && match;
    out << "k=" << k << "  Q = " << got.to_text()
        << (match ? "" : "  [MISMATCH vs closed form: " + expect.to_text() +
                             "]")
        << "\n";
  }
  return all_match ? kOk : kLawFailure;
}

int cmd_tree(const std::string& word_text, int strands,
             const std::string& format, const Options& o, std::ostream& out,
             std::ostream& err) {
  if (format != "json" && format != "dot") {
    err << "unknown tree format: " << format << "\n";
    return kInputError;
  }
  BraidWord w = parse_word(word_text, strands);
  EvalConfig cfg = to_eval_config(o);
  cfg.record_tree = true;
  FEvaluator f(cfg);
  auto [value, tree] = f.eval_with_tree(w);
  if (replay_tree(tree, o.convention) != value) {
    err << "internal error: tree replay disagrees with evaluation\n";
    return kLawFailure;
  }
  out << (format == "json" ? tree.to_json() : tree.to_dot());
  if (format == "json") out << "\n";
  return kOk;
}

int cmd_verify(const std::string& suite, const Options& o,
               const std::string& report_dir, std::ostream& out,
               std::ostream& err) {
  FuzzSpec spec;
  spec.seed = o.seed;
  spec.case_count = o.cases;
  spec.threads = o.threads;
  EvalConfig cfg = to_eval_config(o);

  std::vector<LawReport> reports;
  if (suite == "all") {
    reports = run_all_laws(spec, cfg);
  } else if (suite == "skein") {
    reports.push_back(check_skein_identity(spec, cfg));
  } else if (suite == "invariance") {
    reports.push_back(check_transverse_invariance(spec, cfg));
  } else if (suite == "degree") {
    reports.push_back(check_degree_law(spec, cfg));
  } else if (suite == "parity") {
    reports.push_back(check_parity_knot(spec, cfg));
  } else if (suite == "leading") {
    reports.push_back(check_leading_coeff_mod(spec, cfg));
  } else if (suite == "tree-independence") {
    reports.push_back(check_tree_independence(spec, cfg.convention));
  } else {
    err << "unknown suite: " << suite << "\n";
    return kInputError;
  }

  bool failed = false;
  for (const LawReport& r : reports) {
    if (o.emit == "json") {
      out << r.to_json() << "\n";
    } else {
      out << r.to_table_row() << "\n";
      for (const LawFailure& fl : r.failures)
        out << "    " << word_display(fl.word) << "  seed=" << fl.case_seed
            << "  " << fl.detail << "\n";
    }
    failed = failed || !r.ok();
    if (!report_dir.empty()) {
      std::filesystem::create_directories(report_dir);
      std::ofstream of(std::filesystem::path(report_dir) /
                       ("law-" + r.law + ".json"));
      of << r.to_json() << "\n";
    }
  }
  return failed ? kLawFailure : kOk;
}

int cmd_corpus(const std::string& path, const Options& o, std::ostream& out,
               std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open corpus file: " << path << "\n";
    return kInputError;
  }
  CorpusLoad load = load_corpus(in);
  for (const auto& [line, message] : load.line_errors) {
    nlohmann::ordered_json j;
    j["line"] = line;
    j["error"] = message;
    out << j.dump() << "\n";
  }
  auto results =
      run_corpus(load.entries, to_eval_config(o), o.threads, o.verify_extra);
  bool any_bad = !load.line_errors.empty();
  for (const CorpusResult& r : results) {
    out << corpus_result_jsonl(r) << "\n";
    any_bad = any_bad || !r.ok || (r.expected_checked && !r.expected_matched);
  }
  err << "# " << results.size() << " entries, " << load.line_errors.size()
      << " malformed lines\n";
  return any_bad ? kLawFailure : kOk;
}

}  // namespace braidq::cli

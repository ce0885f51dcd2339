#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

using namespace braidq;

namespace {

void add_common(CLI::App* app, cli::Options& o, std::string& convention,
                std::string& strategy) {
  app->add_option("--convention", convention,
                  "unlink leaf convention: forced|paper")
      ->check(CLI::IsMember({"forced", "paper"}));
  app->add_option("--strategy", strategy,
                  "evaluation strategy: staircase|negfirst")
      ->check(CLI::IsMember({"staircase", "negfirst"}));
  app->add_option("--verify-extra", o.verify_extra,
                  "extra verification points past the interpolation window")
      ->check(CLI::Range(3, 1000));
  app->add_option("--threads", o.threads, "worker count")
      ->check(CLI::Range(1, 256));
  app->add_option("--emit", o.emit, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
}

void finalize(cli::Options& o, const std::string& convention,
              const std::string& strategy) {
  o.convention = convention == "paper" ? LeafConvention::Paper
                                       : LeafConvention::Forced;
  o.strategy = strategy == "negfirst" ? Strategy::NegativeElimFirst
                                      : Strategy::StaircaseFirst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact transverse invariant and hidden polynomial of closed "
               "braids"};
  app.require_subcommand(1);

  cli::Options opts;
  std::string convention = "forced", strategy = "staircase";

  std::string word_text;
  int strands = 1;
  int tmax_flag = 0;
  int probe_floor_flag = 0;

  auto* eval = app.add_subcommand("eval", "evaluate one braid word");
  eval->add_option("--word", word_text, "whitespace-separated letters")
      ->required();
  eval->add_option("--strands", strands, "strand count")->required();
  auto* tmax_opt =
      eval->add_option("--tmax", tmax_flag, "top of the printed c-range");
  auto* floor_opt = eval->add_option("--probe-floor", probe_floor_flag,
                                     "lowest T probed when locating T0");
  add_common(eval, opts, convention, strategy);

  std::string family = "two-strand";
  int kmin = -3, kmax = 3;
  auto* table = app.add_subcommand("table", "closed-form regression table");
  table->add_option("--family", family, "word family (two-strand)");
  table->add_option("--kmin", kmin, "lowest crossing count");
  table->add_option("--kmax", kmax, "highest crossing count");
  add_common(table, opts, convention, strategy);

  std::string format = "json";
  auto* tree = app.add_subcommand("tree", "emit the computation tree");
  tree->add_option("--word", word_text, "whitespace-separated letters")
      ->required();
  tree->add_option("--strands", strands, "strand count")->required();
  tree->add_option("--format", format, "json|dot");
  add_common(tree, opts, convention, strategy);

  std::string suite = "all";
  std::string report_dir;
  auto* verify = app.add_subcommand("verify", "run law suites");
  verify->add_option(
      "--suite", suite,
      "all|skein|invariance|degree|parity|leading|tree-independence");
  verify->add_option("--seed", opts.seed, "corpus seed");
  verify->add_option("--cases", opts.cases, "corpus size")
      ->check(CLI::Range(1, 100000));
  verify->add_option("--report-dir", report_dir,
                     "directory for law report JSON files");
  add_common(verify, opts, convention, strategy);

  std::string corpus_path;
  auto* corpus = app.add_subcommand("corpus", "evaluate a corpus file");
  corpus->add_option("path", corpus_path, "corpus file")->required();
  add_common(corpus, opts, convention, strategy);

  CLI11_PARSE(app, argc, argv);
  finalize(opts, convention, strategy);
  if (*tmax_opt) opts.tmax = tmax_flag;
  if (*floor_opt) opts.probe_floor = probe_floor_flag;

  try {
    if (eval->parsed())
      return cli::cmd_eval(word_text, strands, opts, std::cout, std::cerr);
    if (table->parsed())
      return cli::cmd_table(family, kmin, kmax, opts, std::cout, std::cerr);
    if (tree->parsed())
      return cli::cmd_tree(word_text, strands, format, opts, std::cout,
                           std::cerr);
    if (verify->parsed())
      return cli::cmd_verify(suite, opts, report_dir, std::cout, std::cerr);
    if (corpus->parsed())
      return cli::cmd_corpus(corpus_path, opts, std::cout, std::cerr);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return cli::kInputError;
  }
  return cli::kInputError;
}

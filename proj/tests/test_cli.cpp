#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace braidq;

namespace {

std::string temp_corpus(const std::string& body) {
  std::string path =
      (std::filesystem::temp_directory_path() / "braidq_test_corpus.txt")
          .string();
  std::ofstream of(path);
  of << body;
  return path;
}

}  // namespace

TEST_CASE("cmd_eval text and json") {
  cli::Options o;
  std::ostringstream out, err;
  CHECK(cli::cmd_eval("1 1 1", 2, o, out, err) == cli::kOk);
  std::string text = out.str();
  CHECK(text.find("Q = (2*a^1 + 1*a^2)") != std::string::npos);
  CHECK(text.find("components: 1") != std::string::npos);
  CHECK(text.find("self-linking: 1") != std::string::npos);

  std::ostringstream jout, jerr;
  o.emit = "json";
  CHECK(cli::cmd_eval("1 1 1", 2, o, jout, jerr) == cli::kOk);
  auto j = nlohmann::json::parse(jout.str());
  CHECK(j["components"] == 1);
  CHECK(j["deg_T"] == 0);
  CHECK(j["Q"]["convention"] == "forced");
  // Q = 2a + a^2: coefficient row [0, [[1,"2","1"],[2,"1","1"]]]
  CHECK(j["Q"]["coeffs"][0][0] == 0);
  CHECK(j["Q"]["coeffs"][0][1][0][0] == 1);
  CHECK(j["Q"]["coeffs"][0][1][0][1] == "2");
  CHECK(j["Q"]["coeffs"][0][1][1][0] == 2);
  CHECK(j["Q"]["coeffs"][0][1][1][1] == "1");
}

TEST_CASE("cmd_eval rejects bad input via exceptions") {
  cli::Options o;
  std::ostringstream out, err;
  CHECK_THROWS_AS(cli::cmd_eval("0", 2, o, out, err), std::invalid_argument);
  CHECK_THROWS_AS(cli::cmd_eval("2", 2, o, out, err), std::invalid_argument);
}

TEST_CASE("cmd_table reproduces the closed forms") {
  cli::Options o;
  std::ostringstream out, err;
  CHECK(cli::cmd_table("two-strand", -3, 3, o, out, err) == cli::kOk);
  CHECK(out.str().find("MISMATCH") == std::string::npos);

  std::ostringstream pout, perr;
  o.convention = LeafConvention::Paper;
  CHECK(cli::cmd_table("two-strand", -3, 3, o, pout, perr) == cli::kOk);

  std::ostringstream bout, berr;
  CHECK(cli::cmd_table("nope", 0, 1, o, bout, berr) == cli::kInputError);
}

TEST_CASE("cmd_tree emits replayable json and labeled dot") {
  cli::Options o;
  std::ostringstream out, err;
  CHECK(cli::cmd_tree("-1", 2, "json", o, out, err) == cli::kOk);
  TreeRecord t = TreeRecord::from_json(out.str());
  REQUIRE(t.root >= 0);
  CHECK(t.nodes[t.root].kind == "destab-neg");
  CHECK(t.nodes.size() == 2);
  FEvaluator f(cli::to_eval_config(o));
  CHECK(replay_tree(t, o.convention) == f.eval(BraidWord(2, {-1})));

  std::ostringstream dout, derr;
  CHECK(cli::cmd_tree("-1", 2, "dot", o, dout, derr) == cli::kOk);
  CHECK(dout.str().find("factor=-a^-1*x^-1") != std::string::npos);

  std::ostringstream sout, serr;
  CHECK(cli::cmd_tree("1 1", 2, "json", o, sout, serr) == cli::kOk);
  TreeRecord ts = TreeRecord::from_json(sout.str());
  CHECK(ts.nodes[ts.root].kind == "split");
  CHECK(ts.nodes[ts.root].children.size() == 2);

  std::ostringstream bout, berr;
  CHECK(cli::cmd_tree("1", 2, "svg", o, bout, berr) == cli::kInputError);
}

TEST_CASE("cmd_verify gates on law failures only") {
  cli::Options o;
  o.cases = 25;
  o.threads = 2;
  std::ostringstream out, err;
  CHECK(cli::cmd_verify("skein", o, "", out, err) == cli::kOk);
  CHECK(out.str().find("0 failures") != std::string::npos);

  // experiment mode: divergence witnesses do not fail the run
  std::ostringstream pout, perr;
  o.convention = LeafConvention::Paper;
  CHECK(cli::cmd_verify("tree-independence", o, "", pout, perr) == cli::kOk);
  CHECK(pout.str().find("experiment, non-gating") != std::string::npos);

  std::ostringstream bout, berr;
  CHECK(cli::cmd_verify("nonsense", o, "", bout, berr) == cli::kInputError);
}

TEST_CASE("cmd_corpus evaluates entries, flags mismatches, survives junk") {
  std::string path = temp_corpus(
      "# demo corpus\n"
      "trefoil ; 2 ; 1 1 1 ; (1*a^1 + 2*a^2)\n"
      "unknot ; 1 ; ;\n"
      "bad line without fields\n"
      "mismatch ; 2 ; -1 ; (1*a^0)\n");
  cli::Options o;
  std::ostringstream out, err;
  int rc = cli::cmd_corpus(path, o, out, err);
  CHECK(rc == cli::kLawFailure);  // one malformed line + one expected mismatch
  std::istringstream lines(out.str());
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(lines, line))
    rows.push_back(nlohmann::json::parse(line));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].contains("error"));  // the malformed line, reported first
  CHECK(rows[1]["name"] == "trefoil");
  CHECK(rows[1]["expected_matched"] == false);  // rendering is canonical
  CHECK(rows[2]["name"] == "unknot");
  CHECK(rows[2]["Q"] == "(1*a^-1)");
  CHECK(rows[3]["name"] == "mismatch");
  CHECK(rows[3]["expected_matched"] == false);
}

TEST_CASE("corpus expected field uses the canonical rendering") {
  std::string path = temp_corpus("trefoil ; 2 ; 1 1 1 ; (2*a^1 + 1*a^2)\n");
  cli::Options o;
  std::ostringstream out, err;
  CHECK(cli::cmd_corpus(path, o, out, err) == cli::kOk);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["expected_matched"] == true);
}

TEST_CASE("corpus output is byte-identical across worker counts") {
  std::string path = temp_corpus(
      "trefoil ; 2 ; 1 1 1 ;\n"
      "mirror ; 2 ; -1 -1 -1 ;\n"
      "unlink3 ; 3 ; ;\n"
      "hopf ; 2 ; 1 1 ;\n"
      "twist ; 3 ; 1 -2 1 2 ;\n"
      "wide ; 5 ; 1 1 4 4 ;\n");
  std::string first;
  for (int threads : {1, 2, 8}) {
    cli::Options o;
    o.threads = threads;
    std::ostringstream out, err;
    CHECK(cli::cmd_corpus(path, o, out, err) == cli::kOk);
    if (threads == 1)
      first = out.str();
    else
      CHECK(out.str() == first);
  }
  CHECK(!first.empty());
}

TEST_CASE("empty corpus produces an empty report") {
  std::string path = temp_corpus("# nothing here\n");
  cli::Options o;
  std::ostringstream out, err;
  CHECK(cli::cmd_corpus(path, o, out, err) == cli::kOk);
  CHECK(out.str().empty());
}

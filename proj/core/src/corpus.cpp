#include "braidq/corpus.hpp"

#include <json.hpp>

#include <istream>
#include <sstream>
#include <stdexcept>

#include "braidq/parallel.hpp"

namespace braidq {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

CorpusEntry parse_corpus_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ';') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  if (fields.size() < 3 || fields.size() > 4)
    throw std::invalid_argument("expected 3 or 4 ';'-separated fields");
  CorpusEntry e;
  e.name = strip(fields[0]);
  if (e.name.empty()) throw std::invalid_argument("empty entry name");
  try {
    e.strands = std::stoi(strip(fields[1]));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad strand count: " + strip(fields[1]));
  }
  BraidWord w = parse_word(fields[2], e.strands);  // validates letters
  e.letters = std::move(w.letters);
  if (fields.size() == 4) {
    std::string q = strip(fields[3]);
    if (!q.empty()) e.expected_q = q;
  }
  return e;
}

CorpusLoad load_corpus(std::istream& in) {
  CorpusLoad out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    try {
      out.entries.push_back(parse_corpus_line(s));
    } catch (const std::exception& ex) {
      out.line_errors.emplace_back(lineno, ex.what());
    }
  }
  return out;
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                     const EvalConfig& cfg, int threads,
                                     int verify_extra) {
  FEvaluator f(cfg);
  std::vector<CorpusResult> results(entries.size());
  parallel_for(static_cast<int>(entries.size()), threads, [&](int i) {
    const CorpusEntry& e = entries[static_cast<size_t>(i)];
    CorpusResult& r = results[static_cast<size_t>(i)];
    r.name = e.name;
    try {
      BraidWord w(e.strands, e.letters);
      HiddenPolynomial hp = recover_Q(w, f, verify_extra);
      minimal_T0(w, hp, f,
                 -(static_cast<int>(w.length()) + w.strands));
      r.components = hp.components;
      r.self_linking = self_linking(w);
      r.degree = hp.poly.degree();
      r.q_text = hp.poly.to_text();
      r.t0_text = hp.t0_text();
      if (e.expected_q) {
        r.expected_checked = true;
        r.expected_matched = (*e.expected_q == r.q_text);
      }
      r.ok = true;
    } catch (const std::exception& ex) {
      r.ok = false;
      r.error = ex.what();
    }
  });
  return results;
}

std::string corpus_result_jsonl(const CorpusResult& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["error"] = r.error;
  } else {
    j["components"] = r.components;
    j["self_linking"] = r.self_linking;
    j["degree"] = r.degree;
    j["Q"] = r.q_text;
    j["T0"] = r.t0_text;
    if (r.expected_checked) j["expected_matched"] = r.expected_matched;
  }
  return j.dump();
}

}  // namespace braidq

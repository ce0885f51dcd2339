#include "braidq/skein_f.hpp"

#include <json.hpp>

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace braidq {

const char* to_string(LeafConvention c) {
  return c == LeafConvention::Forced ? "forced" : "paper";
}

const char* to_string(Strategy s) {
  return s == Strategy::StaircaseFirst ? "staircase" : "negfirst";
}

namespace {

Laurent2 a_pow(int j) { return Laurent2::term(j, 0, Rat(1)); }

// a^-1 (x^-1 - x)
Laurent2 skein_rhs_factor() {
  return Laurent2::term(0, -1, Rat(1)) - Laurent2::term(0, 1, Rat(1));
}

}  // namespace

RationalInvariant leaf_unlink(int l, LeafConvention convention) {
  if (l < 1) throw std::invalid_argument("unlink needs at least one strand");
  Laurent2 ax = Laurent2::term(-1, 1, Rat(1));  // a^-1 x
  Laurent2 num = ax * (Laurent2::one() + ax).pow(static_cast<unsigned>(l - 1));
  if (convention == LeafConvention::Paper && l > 1)
    num = num * Laurent2::term(0, 2 * (l - 1), Rat(1));
  return RationalInvariant(num, l);
}

RationalInvariant split_union_combine(const RationalInvariant& f1,
                                      const RationalInvariant& f2) {
  return (f1 * f2) * (Laurent2::one() + Laurent2::term(1, -1, Rat(1)));
}

namespace detail {

BraidWord canonicalize(const BraidWord& w) {
  return cyclic_canonical(free_reduce_cyclic(w));
}

namespace {

// Smallest generator index absent from the word, if any.
std::optional<int> first_unused_generator(const BraidWord& w) {
  if (w.strands < 2) return std::nullopt;
  std::vector<bool> used(w.strands, false);
  for (int e : w.letters) used[std::abs(e)] = true;
  for (int i = 1; i <= w.strands - 1; ++i)
    if (!used[i]) return i;
  return std::nullopt;
}

std::pair<BraidWord, BraidWord> split_at_unused(const BraidWord& w, int i) {
  std::vector<int> lo, hi;
  for (int e : w.letters) {
    if (std::abs(e) < i)
      lo.push_back(e);
    else
      hi.push_back(e > 0 ? e - i : e + i);
  }
  return {BraidWord(i, std::move(lo)), BraidWord(w.strands - i, std::move(hi))};
}

// If the top generator occurs exactly once, the conjugated word with it at
// the end, minus that letter, on one fewer strand.
std::optional<std::pair<BraidWord, bool>> try_destab(const BraidWord& w) {
  if (w.strands < 2) return std::nullopt;
  int top = w.strands - 1;
  int count = 0, at = -1;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (std::abs(w.letters[i]) == top) {
      ++count;
      at = static_cast<int>(i);
    }
  }
  if (count != 1) return std::nullopt;
  std::vector<int> rest(w.letters.begin() + at + 1, w.letters.end());
  rest.insert(rest.end(), w.letters.begin(), w.letters.begin() + at);
  bool positive = w.letters[at] > 0;
  return std::make_pair(BraidWord(w.strands - 1, std::move(rest)), positive);
}

std::optional<int> first_negative(const BraidWord& w) {
  for (size_t i = 0; i < w.letters.size(); ++i)
    if (w.letters[i] < 0) return static_cast<int>(i);
  return std::nullopt;
}

// Shortest prefix of a positive non-reduced word whose extension drops the
// Coxeter length; that prefix length is the exchange point.
int first_descent(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  int len = 0;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    Permutation q =
        p.then(Permutation::transposition(w.strands, w.letters[i] - 1));
    int ql = q.coxeter_length();
    if (ql < len + 1) return static_cast<int>(i);
    p = q;
    len = ql;
  }
  throw std::logic_error("first_descent called on a reduced word");
}

}  // namespace

StepPlan plan_step(const BraidWord& canonical, Strategy strategy) {
  StepPlan plan;
  BraidWord w = canonical;
  std::string note;
  for (;;) {
    plan.working = w;
    plan.rewrite_note = note;
    if (w.letters.empty()) {
      plan.kind = StepPlan::Kind::Leaf;
      return plan;
    }
    std::optional<int> neg = first_negative(w);
    if (strategy == Strategy::NegativeElimFirst && neg) {
      plan.kind = StepPlan::Kind::Skein;
      plan.position = *neg;
      plan.sign = -1;
      return plan;
    }
    if (auto i = first_unused_generator(w)) {
      plan.kind = StepPlan::Kind::SplitUnion;
      auto [lo, hi] = split_at_unused(w, *i);
      plan.left = std::move(lo);
      plan.right = std::move(hi);
      return plan;
    }
    if (auto d = try_destab(w)) {
      plan.kind = StepPlan::Kind::Destab;
      plan.child = std::move(d->first);
      plan.destab_positive = d->second;
      return plan;
    }
    if (neg) {
      plan.kind = StepPlan::Kind::Skein;
      plan.position = *neg;
      plan.sign = -1;
      return plan;
    }
    // positive word from here on
    if (!is_reduced_positive(w)) {
      int k = first_descent(w);
      BraidWord rewritten = exchange_rewrite(w, k);
      plan.kind = StepPlan::Kind::Skein;
      plan.position = k - 1;
      plan.sign = +1;
      if (rewritten.letters != w.letters) {
        std::ostringstream os;
        os << "exchange@" << k;
        plan.rewrite_note = note.empty() ? os.str() : note + "," + os.str();
      }
      plan.working = std::move(rewritten);
      return plan;
    }
    // positive and reduced: pass to the staircase normal form, after which
    // the top generator occurs at most once and a split or destabilization
    // applies. Strands never grow, so this rewrite happens at most once.
    BraidWord stair = staircase_word(permutation(w));
    if (stair.letters == w.letters)
      throw std::logic_error("staircase rewrite made no progress");
    w = std::move(stair);
    note = note.empty() ? "staircase" : note + ",staircase";
  }
}

}  // namespace detail

// ----------------------------------------------------------- tree building

struct FEvaluator::TreeBuilder {
  TreeRecord rec;
  int add(TreeNode n) {
    rec.nodes.push_back(std::move(n));
    return static_cast<int>(rec.nodes.size()) - 1;
  }
};

size_t FEvaluator::KeyHash::operator()(const Key& k) const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<size_t>(k.strands));
  for (int e : k.letters) mix(static_cast<size_t>(e + (1 << 16)));
  return h;
}

RationalInvariant FEvaluator::eval(const BraidWord& w) {
  return eval_rec(w, nullptr, nullptr);
}

std::pair<RationalInvariant, TreeRecord> FEvaluator::eval_with_tree(
    const BraidWord& w) {
  TreeBuilder tb;
  int root = -1;
  RationalInvariant v = eval_rec(w, &tb, &root);
  tb.rec.root = root;
  return {std::move(v), std::move(tb.rec)};
}

FEvaluator::Stats FEvaluator::stats() const {
  return {hits_.load(), misses_.load()};
}

RationalInvariant FEvaluator::eval_rec(const BraidWord& w, TreeBuilder* tb,
                                       int* node_out) {
  BraidWord canon = detail::canonicalize(w);
  Key key{canon.letters, canon.strands};
  // Tree recording bypasses memo reads so every subtree is materialized.
  if (cfg_.memo_enabled && tb == nullptr) {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
  }
  misses_.fetch_add(1, std::memory_order_relaxed);

  detail::StepPlan plan = detail::plan_step(canon, cfg_.strategy);
  RationalInvariant value;
  TreeNode self;
  self.word = plan.working.letters;
  self.strands = plan.working.strands;

  switch (plan.kind) {
    case detail::StepPlan::Kind::Leaf: {
      value = leaf_unlink(canon.strands, cfg_.convention);
      if (tb) {
        self.kind = "leaf";
        self.annotation = "unlink l=" + std::to_string(canon.strands);
      }
      break;
    }
    case detail::StepPlan::Kind::SplitUnion: {
      int cl = -1, cr = -1;
      RationalInvariant fl = eval_rec(plan.left, tb, tb ? &cl : nullptr);
      RationalInvariant fr = eval_rec(plan.right, tb, tb ? &cr : nullptr);
      value = split_union_combine(fl, fr);
      if (tb) {
        self.kind = "split-union";
        self.children = {cl, cr};
        self.annotation = "factor=1+a*x^-1";
      }
      break;
    }
    case detail::StepPlan::Kind::Destab: {
      int c = -1;
      RationalInvariant f = eval_rec(plan.child, tb, tb ? &c : nullptr);
      if (plan.destab_positive) {
        value = f;
      } else {
        value = f * Laurent2::term(-1, -1, Rat(-1));
      }
      if (tb) {
        self.kind = plan.destab_positive ? "destab-pos" : "destab-neg";
        self.children = {c};
        self.annotation =
            plan.destab_positive ? "factor=1" : "factor=-a^-1*x^-1";
      }
      break;
    }
    case detail::StepPlan::Kind::Skein: {
      auto [switched, smoothed] = conway_split(plan.working, plan.position);
      int cs = -1, cm = -1;
      RationalInvariant fsw = eval_rec(switched, tb, tb ? &cs : nullptr);
      RationalInvariant fsm = eval_rec(smoothed, tb, tb ? &cm : nullptr);
      if (plan.sign > 0) {
        value = fsw * a_pow(2) + fsm * (a_pow(1) * skein_rhs_factor());
      } else {
        value = fsw * a_pow(-2) - fsm * (a_pow(-1) * skein_rhs_factor());
      }
      if (tb) {
        self.kind = "split";
        self.children = {cs, cm};
        self.annotation = "pos=" + std::to_string(plan.position);
      }
      break;
    }
  }

  if (tb) {
    int self_idx = tb->add(std::move(self));
    if (!plan.rewrite_note.empty()) {
      TreeNode rewrite;
      rewrite.word = canon.letters;
      rewrite.strands = canon.strands;
      rewrite.kind = "rewrite";
      rewrite.children = {self_idx};
      rewrite.annotation = "moves=" + plan.rewrite_note;
      self_idx = tb->add(std::move(rewrite));
    }
    if (node_out) *node_out = self_idx;
  }

  if (cfg_.memo_enabled) {
    std::unique_lock lock(mu_);
    memo_.emplace(std::move(key), value);
  }
  return value;
}

RationalInvariant eval_F(const BraidWord& w, const EvalConfig& cfg) {
  FEvaluator ev(cfg);
  return ev.eval(w);
}

// -------------------------------------------------------------- tree record

namespace {

int parse_pos_annotation(const std::string& a) {
  auto at = a.find("pos=");
  if (at == std::string::npos)
    throw std::invalid_argument("split node lacks pos= annotation");
  return std::stoi(a.substr(at + 4));
}

RationalInvariant replay_node(const TreeRecord& t, int idx,
                              LeafConvention conv, std::vector<int>& state) {
  if (idx < 0 || idx >= static_cast<int>(t.nodes.size()))
    throw std::invalid_argument("dangling child index in tree record");
  if (state[idx] == 1)
    throw std::invalid_argument("cycle in tree record");
  state[idx] = 1;
  const TreeNode& n = t.nodes[idx];
  auto expect_children = [&](size_t c) {
    if (n.children.size() != c)
      throw std::invalid_argument("node '" + n.kind +
                                  "' has wrong child count");
  };
  RationalInvariant v;
  if (n.kind == "leaf") {
    expect_children(0);
    v = leaf_unlink(n.strands, conv);
  } else if (n.kind == "split") {
    expect_children(2);
    int pos = parse_pos_annotation(n.annotation);
    if (pos < 0 || pos >= static_cast<int>(n.word.size()))
      throw std::invalid_argument("split position outside node word");
    int sign = n.word[pos] > 0 ? +1 : -1;
    RationalInvariant sw = replay_node(t, n.children[0], conv, state);
    RationalInvariant sm = replay_node(t, n.children[1], conv, state);
    Laurent2 rhs = Laurent2::term(0, -1, Rat(1)) - Laurent2::term(0, 1, Rat(1));
    v = sign > 0 ? sw * Laurent2::term(2, 0, Rat(1)) +
                       sm * (Laurent2::term(1, 0, Rat(1)) * rhs)
                 : sw * Laurent2::term(-2, 0, Rat(1)) -
                       sm * (Laurent2::term(-1, 0, Rat(1)) * rhs);
  } else if (n.kind == "destab-pos") {
    expect_children(1);
    v = replay_node(t, n.children[0], conv, state);
  } else if (n.kind == "destab-neg") {
    expect_children(1);
    v = replay_node(t, n.children[0], conv, state) *
        Laurent2::term(-1, -1, Rat(-1));
  } else if (n.kind == "split-union") {
    expect_children(2);
    v = split_union_combine(replay_node(t, n.children[0], conv, state),
                            replay_node(t, n.children[1], conv, state));
  } else if (n.kind == "rewrite") {
    expect_children(1);
    v = replay_node(t, n.children[0], conv, state);
  } else {
    throw std::invalid_argument("unknown node kind: " + n.kind);
  }
  state[idx] = 2;
  return v;
}

}  // namespace

RationalInvariant replay_tree(const TreeRecord& t, LeafConvention conv) {
  if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size()))
    throw std::invalid_argument("tree record has no valid root");
  std::vector<int> state(t.nodes.size(), 0);
  return replay_node(t, t.root, conv, state);
}

std::string TreeRecord::to_json() const {
  nlohmann::ordered_json j;
  j["root"] = root;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const TreeNode& n : nodes) {
    nlohmann::ordered_json node;
    node["word"] = n.word;
    node["strands"] = n.strands;
    node["kind"] = n.kind;
    node["children"] = n.children;
    node["annotation"] = n.annotation;
    j["nodes"].push_back(std::move(node));
  }
  return j.dump(2);
}

TreeRecord TreeRecord::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  TreeRecord t;
  t.root = j.at("root").get<int>();
  for (const auto& node : j.at("nodes")) {
    TreeNode n;
    n.word = node.at("word").get<std::vector<int>>();
    n.strands = node.at("strands").get<int>();
    n.kind = node.at("kind").get<std::string>();
    n.children = node.at("children").get<std::vector<int>>();
    n.annotation = node.at("annotation").get<std::string>();
    t.nodes.push_back(std::move(n));
  }
  return t;
}

std::string TreeRecord::to_dot() const {
  std::ostringstream os;
  os << "digraph tree {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t i = 0; i < nodes.size(); ++i) {
    const TreeNode& n = nodes[i];
    os << "  n" << i << " [label=\"";
    for (size_t k = 0; k < n.word.size(); ++k)
      os << (k ? " " : "") << n.word[k];
    if (n.word.empty()) os << "(empty)";
    os << " | n=" << n.strands << "\\n" << n.kind << "\"];\n";
    for (size_t c = 0; c < n.children.size(); ++c) {
      os << "  n" << i << " -> n" << n.children[c] << " [label=\"";
      if (n.kind == "split") {
        os << (c == 0 ? "switch" : "smooth");
      } else if (!n.annotation.empty()) {
        os << n.annotation;
      }
      os << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace braidq

#include "hypolog/meta.hpp"

#include <algorithm>
#include <unordered_map>

#include "hypolog/builtins.hpp"
#include "hypolog/printer.hpp"
#include "hypolog/store.hpp"

namespace hypolog {

namespace {

using Key = uint64_t;

Key key_of(Symbol s, size_t arity) { return (uint64_t{s.id()} << 32) | arity; }

struct Candidate {
  const Rule* rule;
  int num_vars;
  double degree;  // proximity of the goal predicate to the rule head
};

struct Hypothesis {
  RulePtr rule;
  int num_vars;
};

// Ordered rule list: program rules sorted by key, each hypothesis placed
// after the rules already present for its key.
struct ListNode {
  Key key;
  const Rule* rule;
  int num_vars;
  RulePtr owned;  // set for hypotheses
  std::shared_ptr<const ListNode> next;
};
using ListPtr = std::shared_ptr<const ListNode>;

// Persistent AVL tree from key to the hypotheses assumed for it.
struct TreeNode {
  Key key;
  std::shared_ptr<const std::vector<Hypothesis>> rules;
  int height;
  std::shared_ptr<const TreeNode> left, right;
};
using TreePtr = std::shared_ptr<const TreeNode>;

int height(const TreePtr& t) { return t ? t->height : 0; }

TreePtr make_node(Key key, std::shared_ptr<const std::vector<Hypothesis>> rules, TreePtr l, TreePtr r) {
  int h = 1 + std::max(height(l), height(r));
  return std::make_shared<const TreeNode>(TreeNode{key, std::move(rules), h, std::move(l), std::move(r)});
}

TreePtr rotate_right(const TreePtr& t) {
  const TreePtr& l = t->left;
  return make_node(l->key, l->rules, l->left, make_node(t->key, t->rules, l->right, t->right));
}

TreePtr rotate_left(const TreePtr& t) {
  const TreePtr& r = t->right;
  return make_node(r->key, r->rules, make_node(t->key, t->rules, t->left, r->left), r->right);
}

TreePtr balance(TreePtr t) {
  int bf = height(t->left) - height(t->right);
  if (bf > 1) {
    if (height(t->left->left) < height(t->left->right))
      t = make_node(t->key, t->rules, rotate_left(t->left), t->right);
    return rotate_right(t);
  }
  if (bf < -1) {
    if (height(t->right->right) < height(t->right->left))
      t = make_node(t->key, t->rules, t->left, rotate_right(t->right));
    return rotate_left(t);
  }
  return t;
}

TreePtr tree_insert(const TreePtr& t, Key key, const Hypothesis& h) {
  if (!t) return make_node(key, std::make_shared<const std::vector<Hypothesis>>(1, h), nullptr, nullptr);
  if (key < t->key) return balance(make_node(t->key, t->rules, tree_insert(t->left, key, h), t->right));
  if (key > t->key) return balance(make_node(t->key, t->rules, t->left, tree_insert(t->right, key, h)));
  auto grown = std::make_shared<std::vector<Hypothesis>>(*t->rules);
  grown->push_back(h);
  return make_node(key, std::move(grown), t->left, t->right);
}

const std::vector<Hypothesis>* tree_find(const TreeNode* t, Key key) {
  while (t) {
    if (key < t->key) t = t->left.get();
    else if (key > t->key) t = t->right.get();
    else return t->rules.get();
  }
  return nullptr;
}

void tree_walk(const TreeNode* t, std::vector<const Rule*>& out) {
  if (!t) return;
  tree_walk(t->left.get(), out);
  for (const auto& h : *t->rules) out.push_back(h.rule.get());
  tree_walk(t->right.get(), out);
}

}  // namespace

struct MetaEngine::Index {
  ListPtr list;
  std::unordered_map<Key, std::vector<Candidate>> statics;
};

namespace {

/// Versioned hypothesis store of one run. Version 0 holds no hypotheses.
class HypothesisStore {
 public:
  virtual ~HypothesisStore() = default;
  virtual uint32_t assume(uint32_t version, const Hypothesis& h) = 0;
  virtual void gather(uint32_t version, Key key, double degree, std::vector<Candidate>& out) const = 0;
  virtual void hypotheses(uint32_t version, std::vector<const Rule*>& out) const = 0;
  virtual size_t versions() const = 0;
  virtual void truncate(size_t n) = 0;
};

class ListStore final : public HypothesisStore {
 public:
  explicit ListStore(ListPtr root) { roots_.push_back(std::move(root)); }

  uint32_t assume(uint32_t version, const Hypothesis& h) override {
    Key key = key_of(h.rule->head.predicate, h.rule->head.arity());
    std::vector<const ListNode*> prefix;
    const ListNode* n = roots_[version].get();
    ListPtr rest;
    while (n && n->key <= key) {
      prefix.push_back(n);
      n = n->next.get();
    }
    rest = prefix.empty() ? roots_[version] : prefix.back()->next;
    ListPtr built = std::make_shared<const ListNode>(ListNode{key, h.rule.get(), h.num_vars, h.rule, rest});
    for (size_t i = prefix.size(); i-- > 0;) {
      ListNode copy = *prefix[i];
      copy.next = built;
      built = std::make_shared<const ListNode>(std::move(copy));
    }
    roots_.push_back(std::move(built));
    return static_cast<uint32_t>(roots_.size() - 1);
  }

  void gather(uint32_t version, Key key, double degree, std::vector<Candidate>& out) const override {
    const ListNode* n = roots_[version].get();
    while (n && n->key < key) n = n->next.get();
    for (; n && n->key == key; n = n->next.get()) out.push_back({n->rule, n->num_vars, degree});
  }

  void hypotheses(uint32_t version, std::vector<const Rule*>& out) const override {
    for (const ListNode* n = roots_[version].get(); n; n = n->next.get())
      if (n->owned) out.push_back(n->rule);
  }

  size_t versions() const override { return roots_.size(); }
  void truncate(size_t n) override { roots_.resize(n); }

 private:
  std::vector<ListPtr> roots_;
};

class TreeStore final : public HypothesisStore {
 public:
  explicit TreeStore(const std::unordered_map<Key, std::vector<Candidate>>& statics) : statics_(statics) {
    roots_.emplace_back();
  }

  uint32_t assume(uint32_t version, const Hypothesis& h) override {
    Key key = key_of(h.rule->head.predicate, h.rule->head.arity());
    roots_.push_back(tree_insert(roots_[version], key, h));
    return static_cast<uint32_t>(roots_.size() - 1);
  }

  void gather(uint32_t version, Key key, double degree, std::vector<Candidate>& out) const override {
    if (auto it = statics_.find(key); it != statics_.end())
      for (const auto& c : it->second) out.push_back({c.rule, c.num_vars, degree});
    if (const auto* hs = tree_find(roots_[version].get(), key))
      for (const auto& h : *hs) out.push_back({h.rule.get(), h.num_vars, degree});
  }

  void hypotheses(uint32_t version, std::vector<const Rule*>& out) const override {
    tree_walk(roots_[version].get(), out);
  }

  size_t versions() const override { return roots_.size(); }
  void truncate(size_t n) override { roots_.resize(n); }

 private:
  const std::unordered_map<Key, std::vector<Candidate>>& statics_;
  std::vector<TreePtr> roots_;
};

/// Copies clause-local syntax under the current bindings of `env`. Unbound
/// variables are renumbered from 0.
class Snapshot {
 public:
  Snapshot(const rt::Store& store, rt::Ref env) : reader_(store), env_(env) {}

  Term term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var: return reader_.read(env_ + static_cast<rt::Ref>(t.var_id()));
      case Term::Kind::Compound: {
        std::vector<Term> args;
        args.reserve(t.arity());
        for (const Term& a : t.args()) args.push_back(term(a));
        return Term::compound(t.functor(), std::move(args));
      }
      default: return t;
    }
  }

  Atom atom(const Atom& a) {
    Atom out{a.predicate, {}};
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) out.args.push_back(term(t));
    return out;
  }

  GoalPtr goal(const Goal& g) {
    switch (g.kind) {
      case Goal::Kind::True: return Goal::truth();
      case Goal::Kind::Atom: return Goal::call(atom(g.atom));
      case Goal::Kind::Builtin: return Goal::builtin(atom(g.atom));
      case Goal::Kind::Conj: {
        GoalPtr l = goal(*g.left);
        return Goal::conj(std::move(l), goal(*g.right));
      }
      case Goal::Kind::Disj: {
        GoalPtr l = goal(*g.left);
        return Goal::disj(std::move(l), goal(*g.right));
      }
      case Goal::Kind::Implication: {
        RulePtr h = rule(*g.hypothesis);
        return Goal::implication(std::move(h), goal(*g.right));
      }
    }
    return Goal::truth();
  }

  RulePtr rule(const Rule& r) {
    auto out = std::make_shared<Rule>();
    out->head = atom(r.head);
    out->body = goal(*r.body);
    out->grade = r.grade;
    return out;
  }

  int num_vars() const { return reader_.next_id(); }

 private:
  rt::Reader reader_;
  rt::Ref env_;
};

constexpr int32_t kDone = -1;

struct Frame {
  enum class Kind : uint8_t { Solve, Exit };
  Kind kind;
  uint32_t version;
  const Goal* goal;
  rt::Ref env;
  int32_t next;
  double saved_alpha;
};

struct Choice {
  enum class Kind : uint8_t { Clauses, Alternative };
  Kind kind;
  rt::Mark mark;
  size_t frames;
  size_t versions;
  size_t cands_begin;
  double alpha;
  uint32_t depth;
  int nest;
  size_t cand_next;
  size_t cand_end;
  int32_t frame;
};

class MetaRun final : public AnswerStream {
 public:
  MetaRun(const MetaEngine::Index& index, const ProximityRelation& relation, const SolveOptions& options,
          Strategy strategy, const Query& query, TraceSink trace)
      : relation_(relation), options_(options), query_(query), trace_(std::move(trace)) {
    if (strategy == Strategy::List) hyps_ = std::make_unique<ListStore>(index.list);
    else hyps_ = std::make_unique<TreeStore>(index.statics);
    weak_ = !relation.is_identity();
    params_ = {&relation_, options_.lambda, options_.tnorm};
    query_env_ = store_.alloc_env(static_cast<size_t>(query_.num_vars));
    cont_ = push_solve(query_.goal.get(), query_env_, 0, kDone);
    if (trace_) pending_start_ = TraceEvent{"start", 0, state()};
  }

  std::optional<Answer> next() override {
    if (done_) return std::nullopt;
    if (started_ && !backtrack()) {
      done_ = true;
      return std::nullopt;
    }
    started_ = true;
    if (!run()) {
      done_ = true;
      return std::nullopt;
    }
    return read_answer(store_, query_env_, query_, alpha_);
  }

  const EngineStats& stats() const override { return stats_; }

 private:
  bool ok(double a) const { return a > 0.0 && a >= options_.lambda; }

  int32_t push_solve(const Goal* g, rt::Ref env, uint32_t version, int32_t next) {
    frames_.push_back(Frame{Frame::Kind::Solve, version, g, env, next, 0.0});
    return static_cast<int32_t>(frames_.size() - 1);
  }

  Choice make_choice(Choice::Kind kind, int32_t frame) const {
    return Choice{kind,  store_.mark(), frames_.size(), hyps_->versions(), cands_.size(), alpha_, depth_, nest_,
                  0,     0,             frame};
  }

  void restore(const Choice& c) {
    store_.undo(c.mark);
    frames_.resize(c.frames);
    hyps_->truncate(c.versions);
    alpha_ = c.alpha;
    depth_ = c.depth;
    nest_ = c.nest;
  }

  bool backtrack() {
    while (!choices_.empty()) {
      Choice& c = choices_.back();
      restore(c);
      if (c.kind == Choice::Kind::Alternative) {
        cont_ = c.frame;
        cands_.resize(c.cands_begin);
        choices_.pop_back();
        return true;
      }
      size_t i = c.cand_next++;
      int32_t frame = c.frame;
      Candidate cand = cands_[i];
      if (c.cand_next == c.cand_end) {
        cands_.resize(c.cands_begin);
        choices_.pop_back();
      }
      if (resolve(frame, cand)) return true;
    }
    return false;
  }

  // Resolution of the atom goal in `frame` with a candidate rule.
  bool resolve(int32_t frame, const Candidate& cand) {
    const Frame f = frames_[static_cast<size_t>(frame)];
    if (options_.depth_budget && depth_ >= *options_.depth_budget) {
      stats_.budget_hit = true;
      return false;
    }
    const Rule& r = *cand.rule;
    const Atom& goal = f.goal->atom;
    double a = options_.tnorm(alpha_, r.grade);
    if (!ok(a)) return false;
    a = options_.tnorm(a, cand.degree);
    if (!ok(a)) return false;
    rt::Ref env = store_.alloc_env(static_cast<size_t>(cand.num_vars));
    for (size_t i = 0; i < goal.args.size(); ++i) {
      rt::Ref g = store_.put(goal.args[i], f.env);
      rt::Ref h = store_.put(r.head.args[i], env);
      if (weak_) {
        auto d = store_.weak_unify(g, h, params_, options_.occurs_check);
        if (!d) return false;
        a = options_.tnorm(a, *d);
        if (!ok(a)) return false;
      } else if (!store_.unify(g, h, options_.occurs_check)) {
        return false;
      }
    }
    ++depth_;
    ++stats_.resolutions;
    alpha_ = a;
    cont_ = r.body->kind == Goal::Kind::True ? f.next : push_solve(r.body.get(), env, f.version, f.next);
    emit("rule 1");
    return true;
  }

  // Runs until the continuation is empty (an answer) or the search space is
  // exhausted.
  bool run() {
    while (cont_ != kDone) {
      if (options_.step_limit && stats_.steps >= *options_.step_limit)
        throw BudgetExceeded("step limit of " + std::to_string(*options_.step_limit) + " exceeded");
      ++stats_.steps;
      if (!step() && !backtrack()) return false;
    }
    return true;
  }

  bool step() {
    const Frame f = frames_[static_cast<size_t>(cont_)];
    if (f.kind == Frame::Kind::Exit) {
      alpha_ = options_.tnorm(f.saved_alpha, alpha_);
      if (!ok(alpha_)) return false;
      --nest_;
      cont_ = f.next;
      emit("rule 2");
      return true;
    }
    const Goal& g = *f.goal;
    switch (g.kind) {
      case Goal::Kind::True:
        cont_ = f.next;
        emit("true");
        return true;
      case Goal::Kind::Conj: {
        int32_t right = push_solve(g.right.get(), f.env, f.version, f.next);
        cont_ = push_solve(g.left.get(), f.env, f.version, right);
        return true;
      }
      case Goal::Kind::Disj: {
        int32_t alt = push_solve(g.right.get(), f.env, f.version, f.next);
        choices_.push_back(make_choice(Choice::Kind::Alternative, alt));
        cont_ = push_solve(g.left.get(), f.env, f.version, f.next);
        return true;
      }
      case Goal::Kind::Builtin: {
        args_.clear();
        for (const Term& t : g.atom.args) args_.push_back(store_.put(t, f.env));
        if (!run_builtin(store_, g.atom.predicate, args_.data(), args_.size())) return false;
        cont_ = f.next;
        emit("builtin");
        return true;
      }
      case Goal::Kind::Implication: {
        Snapshot snap(store_, f.env);
        Hypothesis h{snap.rule(*g.hypothesis), 0};
        h.num_vars = snap.num_vars();
        uint32_t version = hyps_->assume(f.version, h);
        frames_.push_back(Frame{Frame::Kind::Exit, version, nullptr, 0, f.next, alpha_});
        int32_t exit = static_cast<int32_t>(frames_.size() - 1);
        alpha_ = 1.0;
        ++nest_;
        cont_ = push_solve(g.right.get(), f.env, version, exit);
        if (trace_) pending_start_ = TraceEvent{"start", nest_, state()};
        return true;
      }
      case Goal::Kind::Atom: break;
    }
    size_t begin = cands_.size();
    uint32_t arity = static_cast<uint32_t>(g.atom.arity());
    hyps_->gather(f.version, key_of(g.atom.predicate, arity), 1.0, cands_);
    if (weak_)
      for (const auto& [q, d] : relation_.neighbors(g.atom.predicate))
        if (ok(d)) hyps_->gather(f.version, key_of(q, arity), d, cands_);
    size_t end = cands_.size();
    if (begin == end) return false;
    Candidate first = cands_[begin];
    if (end - begin == 1) {
      cands_.resize(begin);
    } else {
      Choice c = make_choice(Choice::Kind::Clauses, cont_);
      c.cands_begin = begin;
      c.cand_next = begin + 1;
      c.cand_end = end;
      choices_.push_back(c);
    }
    return resolve(cont_, first);
  }

  void emit(const char* label) {
    if (!trace_) return;
    if (pending_start_) {
      trace_(*pending_start_);
      pending_start_.reset();
    }
    trace_(TraceEvent{label, nest_, state()});
  }

  std::string state() const {
    rt::Reader reader(store_);
    VarNamer namer = [](int id) { return "_G" + std::to_string(id); };
    std::string goals;
    uint32_t version = 0;
    bool have_version = false;
    for (int32_t i = cont_; i != kDone;) {
      const Frame& f = frames_[static_cast<size_t>(i)];
      if (f.kind == Frame::Kind::Exit) {
        if (!have_version) version = f.version;
        break;
      }
      if (!have_version) {
        version = f.version;
        have_version = true;
      }
      Snapshot snap(store_, f.env);
      if (!goals.empty()) goals += ", ";
      goals += format_goal(*snap.goal(*f.goal), namer);
      i = f.next;
    }
    if (goals.empty()) goals = "□";
    std::vector<const Rule*> hyps;
    hyps_->hypotheses(version, hyps);
    std::string program = "Π";
    if (!hyps.empty()) {
      program += " ∪ {";
      for (size_t i = 0; i < hyps.size(); ++i) {
        if (i) program += ", ";
        program += format_rule(*hyps[i], namer);
      }
      program += "}";
    }
    Answer theta = read_answer(store_, query_env_, query_, alpha_);
    std::string subst = "{";
    for (size_t i = 0; i < theta.bindings.size(); ++i) {
      if (i) subst += ", ";
      subst += theta.bindings[i].first + "/" + format_term(theta.bindings[i].second, namer);
    }
    subst += "}";
    return "⟨" + goals + ", " + program + ", " + subst + ", " + format_number(alpha_, false) + "⟩";
  }

  const ProximityRelation& relation_;
  const SolveOptions& options_;
  const Query query_;
  TraceSink trace_;
  std::unique_ptr<HypothesisStore> hyps_;
  bool weak_ = false;
  rt::WeakParams params_;

  rt::Store store_;
  std::vector<Frame> frames_;
  std::vector<Choice> choices_;
  std::vector<Candidate> cands_;
  std::vector<rt::Ref> args_;
  rt::Ref query_env_ = 0;
  int32_t cont_ = kDone;
  double alpha_ = 1.0;
  uint32_t depth_ = 0;
  int nest_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::optional<TraceEvent> pending_start_;
  EngineStats stats_;
};

}  // namespace

MetaEngine::MetaEngine(Program program, ProximityRelation relation, SolveOptions options, Strategy strategy)
    : program_(std::move(program)),
      relation_(std::move(relation)),
      options_(options),
      strategy_(strategy),
      index_(std::make_unique<Index>()) {
  std::vector<std::pair<Key, const Clause*>> sorted;
  for (const auto& c : program_.clauses) {
    Key k = key_of(c.rule->head.predicate, c.rule->head.arity());
    sorted.emplace_back(k, &c);
    index_->statics[k].push_back({c.rule.get(), c.num_vars, 1.0});
  }
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ListPtr list;
  for (size_t i = sorted.size(); i-- > 0;)
    list = std::make_shared<const ListNode>(
        ListNode{sorted[i].first, sorted[i].second->rule.get(), sorted[i].second->num_vars, nullptr, list});
  index_->list = std::move(list);
}

MetaEngine::~MetaEngine() = default;

std::unique_ptr<AnswerStream> MetaEngine::solve(const Query& query, TraceSink trace) const {
  return std::make_unique<MetaRun>(*index_, relation_, options_, strategy_, query, std::move(trace));
}

}  // namespace hypolog

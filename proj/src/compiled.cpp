#include "hypolog/compiled.hpp"

#include "hypolog/builtins.hpp"
#include "hypolog/store.hpp"

namespace hypolog {

bool over_lambda(double beta, double lambda) { return beta >= lambda; }

namespace {

using Key = CompiledEngine::Key;

Key key_of(Symbol s, size_t arity) { return (uint64_t{s.id()} << 32) | arity; }

using Index = std::unordered_map<Key, std::vector<const TranslatedClause*>>;

constexpr int32_t kDone = -1;

struct Frame {
  enum class Kind : uint8_t { Seq, Exit };
  Kind kind;
  uint32_t pos;
  const TSequence* seq;
  rt::Ref env;
  int32_t next;
  double saved_alpha;
  ContextId ctx;
};

struct Choice {
  enum class Kind : uint8_t { Clauses, Registrations, Alternative };
  Kind kind;
  rt::Mark mark;
  size_t frames;
  size_t reg_log;
  size_t cands_begin;
  double alpha;
  uint32_t depth;
  size_t next;
  size_t end;
  int32_t frame;
};

Term resolve(rt::Reader& reader, const Term& t, rt::Ref env) {
  switch (t.kind()) {
    case Term::Kind::Var: return reader.read(env + static_cast<rt::Ref>(t.var_id()));
    case Term::Kind::Compound: {
      std::vector<Term> args;
      args.reserve(t.arity());
      for (const Term& a : t.args()) args.push_back(resolve(reader, a, env));
      return Term::compound(t.functor(), std::move(args));
    }
    default: return t;
  }
}

class Run final : public CompiledRun {
 public:
  Run(const std::unordered_map<Key, std::vector<const TranslatedClause*>>& index, Dialect dialect,
      const ProximityRelation& relation, const SolveOptions& options, const CompiledEngine::Config& config,
      const Query& query, TranslatedQuery translated)
      : index_(index),
        options_(options),
        config_(config),
        query_(query),
        tq_(std::move(translated)),
        params_{&relation, options.lambda, options.tnorm} {
    crisp_ = dialect == Dialect::Crisp;
    for (const auto& c : tq_.hypotheses) local_[key_of(c.predicate, c.head_args.size())].push_back(&c);
    query_env_ = store_.alloc_env(static_cast<size_t>(tq_.num_vars));
    cont_ = tq_.body.empty() ? kDone : push_seq(&tq_.body, 0, query_env_, ContextId(), kDone);
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
  const RegistrationStore& registrations() const override { return regs_; }

 private:
  bool ok(double a) const { return a > 0.0 && a >= options_.lambda; }

  int32_t push_seq(const TSequence* seq, uint32_t pos, rt::Ref env, const ContextId& ctx, int32_t next) {
    frames_.push_back(Frame{Frame::Kind::Seq, pos, seq, env, next, 0.0, ctx});
    return static_cast<int32_t>(frames_.size() - 1);
  }

  // Continuation after the goal at `f.pos`.
  int32_t rest(const Frame& f) {
    if (f.pos + 1 < f.seq->size()) return push_seq(f.seq, f.pos + 1, f.env, f.ctx, f.next);
    return f.next;
  }

  Choice make_choice(Choice::Kind kind, int32_t frame) const {
    return Choice{kind, store_.mark(), frames_.size(), regs_.log_position(), cands_.size(), alpha_, depth_, 0, 0,
                  frame};
  }

  void restore(const Choice& c) {
    store_.undo(c.mark);
    frames_.resize(c.frames);
    if (config_.trim_registrations) regs_.trim(c.reg_log);
    alpha_ = c.alpha;
    depth_ = c.depth;
  }

  bool backtrack() {
    while (!choices_.empty()) {
      Choice& c = choices_.back();
      restore(c);
      const int32_t frame = c.frame;
      switch (c.kind) {
        case Choice::Kind::Alternative:
          cont_ = frame;
          choices_.pop_back();
          return true;
        case Choice::Kind::Clauses: {
          const TranslatedClause* clause = cands_[c.next++];
          if (c.next == c.end) {
            cands_.resize(c.cands_begin);
            choices_.pop_back();
          }
          if (unfold(frame, *clause)) return true;
          break;
        }
        case Choice::Kind::Registrations: {
          const Frame f = frames_[static_cast<size_t>(frame)];
          const TGoal& g = (*f.seq)[f.pos];
          const size_t i = c.next;
          const size_t end = c.end;
          size_t j = next_registration(g.rule_id, f.ctx, i + 1, end);
          if (j < end) c.next = j;
          else choices_.pop_back();
          if (apply_registration(f, g, i)) return true;
          break;
        }
      }
    }
    return false;
  }

  bool run() {
    while (cont_ != kDone) {
      if (options_.step_limit && stats_.steps >= *options_.step_limit)
        throw BudgetExceeded("step limit of " + std::to_string(*options_.step_limit) + " exceeded");
      ++stats_.steps;
      if (!step() && !backtrack()) return false;
    }
    return true;
  }

  bool first_arg_matches(const TranslatedClause& c, rt::Ref call_arg) const {
    const Term& h = c.head_args[0];
    if (h.is_var()) return true;
    const rt::Cell& cell = store_.cell(store_.deref(call_arg));
    switch (cell.tag) {
      case rt::Cell::Tag::Var: return true;
      case rt::Cell::Tag::Atom: return h.kind() == Term::Kind::Atom && h.functor().id() == cell.sym;
      case rt::Cell::Tag::Int: return h.kind() == Term::Kind::Int && h.int_value() == cell.ival;
      case rt::Cell::Tag::Float: return h.kind() == Term::Kind::Float && h.float_value() == cell.fval;
      case rt::Cell::Tag::Struct:
        return h.kind() == Term::Kind::Compound && h.functor().id() == cell.sym && h.arity() == cell.arity;
    }
    return true;
  }

  void gather(const Atom& call, rt::Ref env) {
    const Key key = key_of(call.predicate, call.arity());
    const bool filter = crisp_ && config_.first_arg_index && call.arity() > 0;
    rt::Ref first = 0;
    if (filter) first = store_.put(call.args[0], env);
    for (const auto* table : {&index_, static_cast<const Index*>(&local_)}) {
      auto it = table->find(key);
      if (it == table->end()) continue;
      for (const TranslatedClause* c : it->second)
        if (!filter || first_arg_matches(*c, first)) cands_.push_back(c);
    }
  }

  // Clause unfolding: grade and proximity entry, then head unification.
  bool unfold(int32_t frame, const TranslatedClause& c) {
    const Frame f = frames_[static_cast<size_t>(frame)];
    if (options_.depth_budget && depth_ >= *options_.depth_budget) {
      stats_.budget_hit = true;
      return false;
    }
    double a = options_.tnorm(alpha_, c.grade);
    if (!ok(a)) return false;
    a = options_.tnorm(a, c.beta);
    if (!ok(a)) return false;
    const Atom& call = (*f.seq)[f.pos].atom;
    rt::Ref env = store_.alloc_env(static_cast<size_t>(c.num_vars));
    for (size_t i = 0; i < call.args.size(); ++i)
      if (!store_.unify(store_.put(call.args[i], f.env), store_.put(c.head_args[i], env), options_.occurs_check))
        return false;
    ++depth_;
    ++stats_.resolutions;
    alpha_ = a;
    int32_t after = rest(f);
    cont_ = c.body.empty() ? after : push_seq(&c.body, 0, env, f.ctx, after);
    return true;
  }

  size_t next_registration(int rule_id, const ContextId& ctx, size_t from, size_t end) const {
    const auto& entries = regs_.lookup(rule_id);
    for (size_t i = from; i < end; ++i)
      if (config_.context_check(entries[i].context, ctx)) return i;
    return end;
  }

  bool apply_registration(const Frame& f, const TGoal& g, size_t i) {
    const auto& entry = regs_.lookup(g.rule_id)[i];
    rt::Ref env = store_.alloc_env(static_cast<size_t>(entry.num_vars));
    for (size_t k = 0; k < g.shared.size(); ++k)
      if (!store_.unify(store_.put(g.shared[k], f.env), store_.put(entry.shared[k], env), options_.occurs_check))
        return false;
    cont_ = rest(f);
    return true;
  }

  bool step() {
    const Frame f = frames_[static_cast<size_t>(cont_)];
    if (f.kind == Frame::Kind::Exit) {
      alpha_ = options_.tnorm(f.saved_alpha, alpha_);
      if (!ok(alpha_)) return false;
      cont_ = f.next;
      return true;
    }
    const TGoal& g = (*f.seq)[f.pos];
    switch (g.kind) {
      case TGoal::Kind::Builtin: {
        args_.clear();
        for (const Term& t : g.atom.args) args_.push_back(store_.put(t, f.env));
        if (!run_builtin(store_, g.atom.predicate, args_.data(), args_.size())) return false;
        cont_ = rest(f);
        return true;
      }
      case TGoal::Kind::OverLambda:
        if (!over_lambda(g.value, options_.lambda)) return false;
        cont_ = rest(f);
        return true;
      case TGoal::Kind::DegreeComp:
        cont_ = rest(f);
        return true;
      case TGoal::Kind::UnifyArgs: {
        double a = alpha_;
        for (const auto& p : g.pairs) {
          auto d = store_.weak_unify(f.env + static_cast<rt::Ref>(p.head_var), store_.put(p.source, f.env), params_,
                                     options_.occurs_check);
          if (!d) return false;
          a = options_.tnorm(a, *d);
          if (!ok(a)) return false;
        }
        alpha_ = a;
        cont_ = rest(f);
        return true;
      }
      case TGoal::Kind::RegLookup: {
        const size_t end = regs_.count(g.rule_id);
        size_t i = next_registration(g.rule_id, f.ctx, 0, end);
        if (i == end) return false;
        size_t j = next_registration(g.rule_id, f.ctx, i + 1, end);
        if (j < end) {
          Choice c = make_choice(Choice::Kind::Registrations, cont_);
          c.next = j;
          c.end = end;
          choices_.push_back(c);
        }
        return apply_registration(f, g, i);
      }
      case TGoal::Kind::Implication: {
        const ContextId inner = f.ctx.extend(regs_.fresh_index());
        rt::Reader reader(store_);
        RegistrationStore::Entry entry;
        entry.shared.reserve(g.shared.size());
        for (const Term& t : g.shared) entry.shared.push_back(resolve(reader, t, f.env));
        entry.num_vars = reader.next_id();
        entry.context = inner;
        regs_.register_rule(g.rule_id, std::move(entry));
        ++stats_.registrations;
        const int32_t after = rest(f);
        frames_.push_back(Frame{Frame::Kind::Exit, 0, nullptr, 0, after, alpha_, ContextId()});
        const int32_t exit = static_cast<int32_t>(frames_.size() - 1);
        alpha_ = 1.0;
        cont_ = g.inner.empty() ? exit : push_seq(&g.inner, 0, f.env, inner, exit);
        return true;
      }
      case TGoal::Kind::Disj: {
        const int32_t after = rest(f);
        const int32_t alt = g.alternative.empty() ? after : push_seq(&g.alternative, 0, f.env, f.ctx, after);
        choices_.push_back(make_choice(Choice::Kind::Alternative, alt));
        cont_ = g.inner.empty() ? after : push_seq(&g.inner, 0, f.env, f.ctx, after);
        return true;
      }
      case TGoal::Kind::Call: break;
    }
    const size_t begin = cands_.size();
    gather(g.atom, f.env);
    const size_t end = cands_.size();
    if (begin == end) return false;
    const TranslatedClause* first = cands_[begin];
    if (end - begin == 1) {
      cands_.resize(begin);
    } else {
      Choice c = make_choice(Choice::Kind::Clauses, cont_);
      c.cands_begin = begin;
      c.next = begin + 1;
      c.end = end;
      choices_.push_back(c);
    }
    return unfold(cont_, *first);
  }

  const std::unordered_map<Key, std::vector<const TranslatedClause*>>& index_;
  std::unordered_map<Key, std::vector<const TranslatedClause*>> local_;
  const SolveOptions& options_;
  const CompiledEngine::Config& config_;
  const Query query_;
  const TranslatedQuery tq_;
  rt::WeakParams params_;
  bool crisp_ = true;

  rt::Store store_;
  RegistrationStore regs_;
  std::vector<Frame> frames_;
  std::vector<Choice> choices_;
  std::vector<const TranslatedClause*> cands_;
  std::vector<rt::Ref> args_;
  rt::Ref query_env_ = 0;
  int32_t cont_ = kDone;
  double alpha_ = 1.0;
  uint32_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
  EngineStats stats_;
};

}  // namespace

CompiledEngine::CompiledEngine(TranslatedProgram program, ProximityRelation relation, SolveOptions options)
    : CompiledEngine(std::move(program), std::move(relation), options, Config{}) {}

CompiledEngine::CompiledEngine(TranslatedProgram program, ProximityRelation relation, SolveOptions options,
                               Config config)
    : program_(std::move(program)), relation_(std::move(relation)), options_(options), config_(config) {
  for (const auto& c : program_.clauses) index_[key_of(c.predicate, c.head_args.size())].push_back(&c);
}

CompiledEngine CompiledEngine::from_program(const Program& program, ProximityRelation relation, SolveOptions options,
                                            Config config) {
  Dialect d = relation.is_identity() ? Dialect::Crisp : Dialect::Fuzzy;
  TranslatedProgram tp = translate_program(program, relation, options.lambda, d);
  return CompiledEngine(std::move(tp), std::move(relation), options, config);
}

std::unique_ptr<CompiledRun> CompiledEngine::solve(const Query& query) const {
  TranslatedQuery tq = translate_goal(query, program_, relation_);
  return std::make_unique<Run>(index_, program_.dialect, relation_, options_, config_, query, std::move(tq));
}

}  // namespace hypolog

#include "hypolog/emit.hpp"

#include <cctype>
#include <map>

#include "hypolog/printer.hpp"

namespace hypolog {

namespace {

Term var(int v) { return Term::var(v); }

Term conjunction(const std::vector<Term>& goals) {
  if (goals.empty()) return Term::atom("true");
  Term t = goals.back();
  for (size_t i = goals.size() - 1; i-- > 0;) t = Term::compound(kComma, {goals[i], t});
  return t;
}

Term number(double v) {
  if (v == static_cast<double>(static_cast<int64_t>(v))) return Term::integer(static_cast<int64_t>(v));
  return Term::real(v);
}

Term with_args(Symbol pred, const std::vector<Term>& args, std::initializer_list<Term> extra) {
  std::vector<Term> all = args;
  all.insert(all.end(), extra.begin(), extra.end());
  return Term::compound(pred, std::move(all));
}

class ClauseWriter {
 public:
  explicit ClauseWriter(bool fuzzy) : fuzzy_(fuzzy) {}

  void sequence(const TSequence& seq, std::vector<Term>& out) const {
    for (const TGoal& g : seq) goal(g, out, seq.size() > 1);
  }

  Term body(const TSequence& seq) const {
    std::vector<Term> goals;
    sequence(seq, goals);
    return conjunction(goals);
  }

  void goal(const TGoal& g, std::vector<Term>& out, bool in_conjunction) const {
    switch (g.kind) {
      case TGoal::Kind::Builtin: out.push_back(g.atom.as_term()); return;
      case TGoal::Kind::Call:
        if (fuzzy_)
          out.push_back(with_args(g.atom.predicate, g.atom.args,
                                  {var(g.list_var), var(g.index_var), var(g.context_var), g.context, var(g.degree_var)}));
        else
          out.push_back(with_args(g.atom.predicate, g.atom.args,
                                  {var(g.list_var), var(g.index_var), var(g.context_var), g.context}));
        return;
      case TGoal::Kind::Implication: {
        Term call = Term::compound("=>", {Term::integer(g.rule_id), Term::list(g.shared), body(g.inner),
                                          var(g.index_var), g.context});
        out.push_back(in_conjunction ? Term::compound("$paren", {call}) : call);
        return;
      }
      case TGoal::Kind::OverLambda: out.push_back(Term::compound("over_lambda", {number(g.value)})); return;
      case TGoal::Kind::RegLookup:
        out.push_back(Term::compound("reg", {Term::integer(g.rule_id), Term::list(g.shared), var(g.context_var)}));
        out.push_back(Term::compound("chk", {var(g.context_var), g.context}));
        return;
      case TGoal::Kind::UnifyArgs: {
        std::vector<Term> triples;
        for (const auto& p : g.pairs)
          triples.push_back(
              Term::compound(kComma, {var(p.head_var), Term::compound(kComma, {p.source, var(p.degree_var)})}));
        out.push_back(Term::compound("unify", {Term::list(triples)}));
        return;
      }
      case TGoal::Kind::DegreeComp: {
        std::vector<Term> inputs;
        for (const Term& t : g.inputs) inputs.push_back(t.kind() == Term::Kind::Float ? number(t.float_value()) : t);
        out.push_back(Term::compound("degree_comp", {Term::list(inputs), var(g.degree_var)}));
        return;
      }
      case TGoal::Kind::Disj:
        out.push_back(Term::compound(";", {body(g.inner), body(g.alternative)}));
        return;
    }
  }

  Term clause(const TranslatedClause& c) const {
    Term head = fuzzy_ ? with_args(c.predicate, c.head_args,
                                   {Term::list(c.shared), Term::integer(c.rule_id), c.rule_context,
                                    var(c.context_var), var(c.degree_var)})
                       : with_args(c.predicate, c.head_args,
                                   {Term::list(c.shared), Term::integer(c.rule_id), c.rule_context, var(c.context_var)});
    if (c.body.empty()) return head;
    return Term::compound(":-", {head, body(c.body)});
  }

 private:
  bool fuzzy_;
};

// Letters for variables occurring more than once; '_' for the rest.
std::string write_clause(const Term& clause) {
  std::map<int, int> counts;
  std::vector<int> order;
  auto count = [&](auto&& self, const Term& t) -> void {
    if (t.is_var()) {
      if (counts[t.var_id()]++ == 0) order.push_back(t.var_id());
    } else if (t.kind() == Term::Kind::Compound) {
      for (const Term& a : t.args()) self(self, a);
    }
  };
  count(count, clause);
  std::map<int, std::string> names;
  int next = 0;
  for (int v : order) {
    if (counts[v] < 2) continue;
    int n = next++;
    std::string name(1, static_cast<char>('A' + n % 26));
    if (n >= 26) name += std::to_string(n / 26);
    names[v] = name;
  }
  VarNamer namer = [&](int id) {
    auto it = names.find(id);
    return it == names.end() ? std::string("_") : it->second;
  };
  return format_term(clause, namer) + ".";
}

// Hypotheses asserted at run time (propositional and predicate forms).
class AssertWriter {
 public:
  explicit AssertWriter(int first_var) : next_(first_var) {}

  Term rule(const Rule& r) {
    int s = next_++;
    Term head = with_args(r.head.predicate, r.head.args, {Term(), var(s)});
    if (r.body->kind == Goal::Kind::True) return head;
    return Term::compound(":-", {head, goal(*r.body, var(s))});
  }

  Term goal(const Goal& g, const Term& ctx) {
    switch (g.kind) {
      case Goal::Kind::True: return Term::atom("true");
      case Goal::Kind::Builtin: return g.atom.as_term();
      case Goal::Kind::Atom: return with_args(g.atom.predicate, g.atom.args, {var(next_++), ctx});
      case Goal::Kind::Conj: {
        Term l = goal(*g.left, ctx);
        return Term::compound(kComma, {l, goal(*g.right, ctx)});
      }
      case Goal::Kind::Disj: {
        Term l = goal(*g.left, ctx);
        return Term::compound(";", {l, goal(*g.right, ctx)});
      }
      case Goal::Kind::Implication: {
        Term inner = Term::list({var(next_++)}, ctx);
        const Rule& h = *g.hypothesis;
        int current = next_++;
        Term head = with_args(h.head.predicate, h.head.args, {inner, var(current)});
        std::vector<Term> body{Term::compound("chk", {inner, var(current)})};
        if (h.body->kind != Goal::Kind::True) body.push_back(goal(*h.body, var(current)));
        Term hyp = Term::compound(":-", {head, conjunction(body)});
        return Term::compound("=>", {hyp, goal(*g.right, inner)});
      }
    }
    return Term::atom("true");
  }

 private:
  int next_;
};

}  // namespace

std::optional<EmitDialect> parse_emit_dialect(std::string_view name) {
  if (name == "crisp-prop") return EmitDialect::CrispProp;
  if (name == "crisp-pred") return EmitDialect::CrispPred;
  if (name == "crisp") return EmitDialect::Crisp;
  if (name == "fuzzy") return EmitDialect::Fuzzy;
  return std::nullopt;
}

std::string emit_prolog(const TranslatedProgram& program) {
  ClauseWriter w(program.dialect == Dialect::Fuzzy);
  std::string out;
  for (const auto& c : program.clauses) out += write_clause(w.clause(c)) + "\n";
  return out;
}

std::string emit_prolog(const Program& program, const ProximityRelation& relation, double lambda,
                        EmitDialect dialect) {
  switch (dialect) {
    case EmitDialect::CrispProp:
    case EmitDialect::CrispPred: {
      std::string out;
      for (const auto& c : program.clauses) {
        AssertWriter w(c.num_vars);
        out += write_clause(w.rule(*c.rule)) + "\n";
      }
      return out;
    }
    case EmitDialect::Crisp:
      return emit_prolog(translate_program(program, ProximityRelation(), lambda, Dialect::Crisp));
    case EmitDialect::Fuzzy: return emit_prolog(translate_program(program, relation, lambda, Dialect::Fuzzy));
  }
  return {};
}

std::string emit_prelude(EmitDialect dialect) {
  std::string out =
      ":- dynamic reg/3, ci/1.\n"
      "chk(S1, S2) :- append(_, S1, S2).\n"
      "get_ci(I) :- ( retract(ci(I)) -> true ; I = 0 ), I1 is I + 1, assertz(ci(I1)).\n";
  if (dialect == EmitDialect::CrispProp || dialect == EmitDialect::CrispPred) {
    out += ":- op(1050, xfy, =>).\n";
    out += "(H => G) :- get_ci(I), add_context(G, I, G1), asserta(H, Ref), ( call(G1) ; erase(Ref), fail ).\n";
    return out;
  }
  out += "reg_rule(IR, Shared, IC, SC) :- assertz(reg(IR, Shared, [IC|SC])).\n";
  out += "'=>'(IR, Shared, G, IC, SC) :- get_ci(IC), reg_rule(IR, Shared, IC, SC), call(G).\n";
  if (dialect == EmitDialect::Fuzzy) {
    out += "over_lambda(B) :- lambda_cut(L), B >= L.\n";
    out += "unify([]).\n";
    out += "unify([(X, S, D)|Ps]) :- weak_unify(X, S, D), unify(Ps).\n";
    out += "degree_comp(Ds, D) :- t_norm(T), foldl(T, Ds, 1, D).\n";
  }
  return out;
}

std::string normalize_listing(std::string_view text) {
  std::string out;
  std::map<std::string, int> names;
  size_t i = 0;
  auto ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '\'') {
      size_t j = i + 1;
      while (j < text.size() && text[j] != '\'') ++j;
      out.append(text.substr(i, j + 1 - i));
      i = j + 1;
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() && ident(text[j])) ++j;
      std::string name(text.substr(i, j - i));
      if (name == "_") {
        out += "_";
      } else {
        auto [it, fresh] = names.emplace(name, static_cast<int>(names.size()));
        out += "V" + std::to_string(it->second);
      }
      i = j;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && ident(text[j])) ++j;
      out.append(text.substr(i, j - i));
      i = j;
      continue;
    }
    if (c == '.' && (i + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) names.clear();
    out += c;
    ++i;
  }
  return out;
}

bool same_listing(std::string_view a, std::string_view b) { return normalize_listing(a) == normalize_listing(b); }

}  // namespace hypolog

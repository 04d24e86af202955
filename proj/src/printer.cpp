#include "hypolog/printer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>

namespace hypolog {

std::string format_number(double v, bool keep_float) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  if (keep_float && std::isfinite(v) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string format_atom_name(Symbol sym) {
  const std::string& n = sym.name();
  if (n == "[]") return n;
  bool plain = !n.empty() && std::islower(static_cast<unsigned char>(n[0]));
  for (char c : n)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') plain = false;
  if (plain) return n;
  std::string out = "'";
  for (char c : n) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

namespace {

struct OpInfo {
  int priority;
  int left;
  int right;
};

const OpInfo* infix_op(const std::string& name) {
  static const OpInfo xfx1200{1200, 1199, 1199}, xfy1100{1100, 1099, 1100}, xfy1050{1050, 1049, 1050},
      xfy1000{1000, 999, 1000}, xfx700{700, 699, 699}, yfx500{500, 500, 499}, yfx400{400, 400, 399};
  if (name == ":-") return &xfx1200;
  if (name == ";") return &xfy1100;
  if (name == "=>") return &xfy1050;
  if (name == ",") return &xfy1000;
  if (name == "=" || name == "\\=" || name == "is" || name == "<" || name == ">" || name == "=<" ||
      name == ">=" || name == "~")
    return &xfx700;
  if (name == "+" || name == "-") return &yfx500;
  if (name == "*" || name == "//") return &yfx400;
  return nullptr;
}

bool symbolic(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name)
    if (!std::strchr("+-*/\\^<>=~:.?@#&$", c)) return false;
  return true;
}

class Writer {
 public:
  explicit Writer(const VarNamer& namer) : namer_(namer) {}

  void write(const Term& t, int max_priority) {
    switch (t.kind()) {
      case Term::Kind::Var: out_ += namer_(t.var_id()); return;
      case Term::Kind::Atom: out_ += format_atom_name(t.functor()); return;
      case Term::Kind::Int: out_ += std::to_string(t.int_value()); return;
      case Term::Kind::Float: out_ += format_number(t.float_value()); return;
      case Term::Kind::Compound: break;
    }
    const std::string& name = t.functor().name();
    if (t.functor() == kCons && t.arity() == 2) {
      write_list(t);
      return;
    }
    if (name == "$paren" && t.arity() == 1) {
      out_ += '(';
      write(t.arg(0), 1200);
      out_ += ')';
      return;
    }
    if (const OpInfo* op = infix_op(name); op && t.arity() == 2) {
      bool paren = op->priority > max_priority;
      if (paren) out_ += '(';
      write(t.arg(0), op->left);
      if (name == ",") out_ += ", ";
      else if (name == "is") out_ += " is ";
      else out_ += " " + name + " ";
      write(t.arg(1), op->right);
      if (paren) out_ += ')';
      return;
    }
    out_ += symbolic(name) ? name : format_atom_name(t.functor());
    out_ += '(';
    for (size_t i = 0; i < t.arity(); ++i) {
      if (i) out_ += ',';
      write(t.arg(i), 999);
    }
    out_ += ')';
  }

  std::string take() { return std::move(out_); }

 private:
  void write_list(const Term& t) {
    out_ += '[';
    Term cur = t;
    bool first = true;
    while (cur.kind() == Term::Kind::Compound && cur.functor() == kCons && cur.arity() == 2) {
      if (!first) out_ += ',';
      first = false;
      write(cur.arg(0), 999);
      cur = cur.arg(1);
    }
    if (!(cur.kind() == Term::Kind::Atom && cur.functor() == kNil)) {
      out_ += '|';
      write(cur, 999);
    }
    out_ += ']';
  }

  const VarNamer& namer_;
  std::string out_;
};

// Goal printing mirrors the parser: '=>' binds tighter than ',' and ';'.
enum class Ctx { Top, Conj, ImplLeft, ImplRight };

void write_goal(std::string& out, const Goal& g, const VarNamer& namer, Ctx ctx);

void write_hypothesis(std::string& out, const Rule& r, const VarNamer& namer) {
  bool bare = r.body->kind == Goal::Kind::True && r.grade == 1.0;
  if (bare) {
    out += format_term(r.head.as_term(), namer);
    return;
  }
  out += '(';
  out += format_rule(r, namer);
  out += ')';
}

void write_goal(std::string& out, const Goal& g, const VarNamer& namer, Ctx ctx) {
  switch (g.kind) {
    case Goal::Kind::True: out += "true"; return;
    case Goal::Kind::Atom:
    case Goal::Kind::Builtin: out += format_term(g.atom.as_term(), namer); return;
    case Goal::Kind::Conj: {
      bool paren = ctx == Ctx::ImplRight || ctx == Ctx::ImplLeft;
      if (paren) out += '(';
      write_goal(out, *g.left, namer, Ctx::Conj);
      out += ", ";
      write_goal(out, *g.right, namer, Ctx::Conj);
      if (paren) out += ')';
      return;
    }
    case Goal::Kind::Disj: {
      bool paren = ctx != Ctx::Top;
      if (paren) out += '(';
      write_goal(out, *g.left, namer, Ctx::Conj);
      out += "; ";
      write_goal(out, *g.right, namer, Ctx::Top);
      if (paren) out += ')';
      return;
    }
    case Goal::Kind::Implication: {
      write_hypothesis(out, *g.hypothesis, namer);
      out += " => ";
      write_goal(out, *g.right, namer, Ctx::ImplRight);
      return;
    }
  }
}

VarNamer clause_namer(const std::vector<std::string>& names) {
  return [&names](int id) {
    if (id >= 0 && static_cast<size_t>(id) < names.size() && !names[static_cast<size_t>(id)].empty())
      return names[static_cast<size_t>(id)];
    return "_V" + std::to_string(id);
  };
}

}  // namespace

std::string format_term(const Term& t, const VarNamer& namer) {
  Writer w(namer);
  w.write(t, 1200);
  return w.take();
}

std::string format_goal(const Goal& g, const VarNamer& namer) {
  std::string out;
  write_goal(out, g, namer, Ctx::Top);
  return out;
}

std::string format_rule(const Rule& r, const VarNamer& namer) {
  std::string out = format_term(r.head.as_term(), namer);
  if (r.body->kind != Goal::Kind::True) {
    out += " :- ";
    write_goal(out, *r.body, namer, Ctx::Top);
  }
  if (r.grade != 1.0) out += " with " + format_number(r.grade, false);
  return out;
}

std::string format_clause(const Clause& c) { return format_rule(*c.rule, clause_namer(c.var_names)) + "."; }

std::string format_query(const Query& q) { return format_goal(*q.goal, clause_namer(q.var_names)) + "."; }

std::string format_program(const Program& p) {
  std::string out;
  if (p.lambda_cut) out += ":- lambda_cut(" + format_number(*p.lambda_cut, false) + ").\n";
  if (p.tnorm) {
    const char* n = *p.tnorm == TNormKind::Min ? "min" : *p.tnorm == TNormKind::Product ? "product" : "luka";
    out += std::string(":- t_norm(") + n + ").\n";
  }
  if (p.transitive) out += std::string(":- transitivity(") + (*p.transitive ? "yes" : "no") + ").\n";
  for (const auto& e : p.proximity)
    out += format_atom_name(e.left) + " ~ " + format_atom_name(e.right) + " = " + format_number(e.degree, false) +
           ".\n";
  for (const auto& c : p.clauses) out += format_clause(c) + "\n";
  return out;
}

}  // namespace hypolog

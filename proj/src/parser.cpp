#include "hypolog/parser.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <unordered_map>
#include <variant>

namespace hypolog {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool is_builtin(Symbol name, size_t arity) {
  static const Symbol kFail("fail"), kTrue("true");
  static const Symbol ops[] = {Symbol("="), Symbol("\\="), Symbol("is"), Symbol("<"),
                               Symbol(">"), Symbol("=<"), Symbol(">=")};
  if (arity == 0) return name == kFail || name == kTrue;
  if (arity == 2)
    for (auto op : ops)
      if (op == name) return true;
  return false;
}

namespace {

enum class Tok { Atom, Var, Int, Float, Punct, End, Eof };

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  int line = 1;
  int col = 1;
  bool quoted = false;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_layout();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number(t);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        advance();
      t.text = std::string(src_.substr(start, pos_ - start));
      t.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::Var : Tok::Atom;
      return t;
    }
    if (c == '\'') return quoted(t);
    if (c == '.') {
      advance();
      if (pos_ >= src_.size() || std::isspace(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '%') {
        t.kind = Tok::End;
        t.text = ".";
        return t;
      }
      throw ParseError(t.line, t.col, "unexpected '.'");
    }
    static const char* puncts[] = {":-", "=>", "=<", ">=", "\\=", "//", "(", ")", "[", "]", "|", ",",
                                   ";",  "=",  "<",  ">",  "~",   "+",  "-", "*"};
    for (const char* p : puncts) {
      std::string_view pv(p);
      if (src_.substr(pos_, pv.size()) == pv) {
        for (size_t i = 0; i < pv.size(); ++i) advance();
        t.kind = Tok::Punct;
        t.text = std::string(pv);
        return t;
      }
    }
    throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_layout() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token number(Token t) {
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    bool is_float = false;
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      is_float = true;
      advance();
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      size_t save = pos_;
      int sl = line_, sc = col_;
      advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        is_float = true;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
      } else {
        pos_ = save;
        line_ = sl;
        col_ = sc;
      }
    }
    t.text = std::string(src_.substr(start, pos_ - start));
    t.kind = is_float ? Tok::Float : Tok::Int;
    return t;
  }

  Token quoted(Token t) {
    advance();
    std::string out;
    while (true) {
      if (pos_ >= src_.size()) throw ParseError(t.line, t.col, "unterminated quoted atom");
      char c = src_[pos_];
      advance();
      if (c == '\'') {
        if (pos_ < src_.size() && src_[pos_] == '\'') {
          out.push_back('\'');
          advance();
          continue;
        }
        break;
      }
      out.push_back(c);
    }
    t.kind = Tok::Atom;
    t.text = std::move(out);
    t.quoted = true;
    return t;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Result of parsing a parenthesised unit: either a goal or a rule that is
// only legal as the left operand of '=>'.
using Unit = std::variant<GoalPtr, RulePtr>;

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

  Program program() {
    Program p;
    while (tok_.kind != Tok::Eof) clause(p);
    return p;
  }

  Query query() {
    reset_vars();
    Query q;
    q.goal = body();
    if (tok_.kind == Tok::End) shift();
    if (tok_.kind != Tok::Eof) fail("unexpected '" + tok_.text + "' after goal");
    q.num_vars = static_cast<int>(names_.size());
    q.var_names = names_;
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_.line, tok_.col, msg); }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.col, msg);
  }

  void shift() { tok_ = lex_.next(); }
  bool is_punct(std::string_view p) const { return tok_.kind == Tok::Punct && tok_.text == p; }
  bool is_word(std::string_view w) const { return tok_.kind == Tok::Atom && !tok_.quoted && tok_.text == w; }
  void expect(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "' but found '" + describe() + "'");
    shift();
  }
  void expect_end() {
    if (tok_.kind != Tok::End) fail("expected '.' but found '" + describe() + "'");
    shift();
  }
  std::string describe() const { return tok_.kind == Tok::Eof ? "end of input" : tok_.text; }

  void reset_vars() {
    vars_.clear();
    names_.clear();
  }

  int variable(const std::string& name) {
    if (name != "_") {
      auto it = vars_.find(name);
      if (it != vars_.end()) return it->second;
    }
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    if (name != "_") vars_.emplace(name, id);
    return id;
  }

  double degree(const char* what) {
    Token t = tok_;
    double d = 0;
    if (tok_.kind == Tok::Int || tok_.kind == Tok::Float) {
      d = std::strtod(tok_.text.c_str(), nullptr);
      shift();
    } else {
      fail(std::string("expected a number for ") + what);
    }
    if (!(d > 0.0 && d <= 1.0)) fail_at(t, std::string(what) + " " + t.text + " outside (0,1]");
    return d;
  }

  void clause(Program& p) {
    reset_vars();
    if (is_punct(":-")) {
      shift();
      directive(p);
      expect_end();
      return;
    }
    Token start = tok_;
    if (is_punct("(")) fail("implication in head position");
    Term head = term();
    if (is_punct("=>")) fail_at(start, "implication in head position");
    if (is_punct("~")) {
      shift();
      if (head.kind() != Term::Kind::Atom) fail_at(start, "proximity equations relate symbols");
      Token rt = tok_;
      Term right = term();
      if (right.kind() != Term::Kind::Atom) fail_at(rt, "proximity equations relate symbols");
      expect("=");
      double d = degree("proximity degree");
      expect_end();
      p.proximity.push_back({head.functor(), right.functor(), d});
      return;
    }
    Rule r;
    r.head = head_atom(head, start);
    if (is_punct(":-")) {
      shift();
      r.body = body();
    }
    if (is_word("with")) {
      shift();
      r.grade = degree("grade");
    }
    expect_end();
    Clause c;
    c.rule = std::make_shared<const Rule>(std::move(r));
    c.num_vars = static_cast<int>(names_.size());
    c.var_names = names_;
    p.clauses.push_back(std::move(c));
  }

  void directive(Program& p) {
    Token t = tok_;
    Term d = term();
    const std::string& name = d.functor().name();
    if (d.kind() != Term::Kind::Compound || d.arity() != 1) fail_at(t, "unknown directive");
    const Term& a = d.arg(0);
    if (name == "lambda_cut") {
      double v = 0;
      if (a.kind() == Term::Kind::Int) v = static_cast<double>(a.int_value());
      else if (a.kind() == Term::Kind::Float) v = a.float_value();
      else fail_at(t, "lambda_cut expects a number");
      if (v < 0.0 || v > 1.0) fail_at(t, "lambda_cut outside [0,1]");
      p.lambda_cut = v;
    } else if (name == "t_norm") {
      std::string n = a.kind() == Term::Kind::Atom ? a.functor().name() : "";
      if (n == "min") p.tnorm = TNormKind::Min;
      else if (n == "product") p.tnorm = TNormKind::Product;
      else if (n == "luka") p.tnorm = TNormKind::Luka;
      else fail_at(t, "t_norm expects min, product or luka");
    } else if (name == "transitivity") {
      std::string n = a.kind() == Term::Kind::Atom ? a.functor().name() : "";
      if (n == "yes") p.transitive = true;
      else if (n == "no") p.transitive = false;
      else fail_at(t, "transitivity expects yes or no");
    } else {
      fail_at(t, "unknown directive " + name);
    }
  }

  Atom head_atom(const Term& t, const Token& at) const {
    if (t.kind() != Term::Kind::Atom && t.kind() != Term::Kind::Compound) fail_at(at, "rule head must be an atom");
    Atom a{t.functor(), t.kind() == Term::Kind::Compound ? t.args() : std::vector<Term>{}};
    if (is_builtin(a.predicate, a.arity())) fail_at(at, "cannot redefine builtin " + a.predicate.name());
    return a;
  }

  GoalPtr body() { return disj(); }

  GoalPtr disj() {
    GoalPtr l = conj();
    if (is_punct(";")) {
      shift();
      return Goal::disj(std::move(l), disj());
    }
    return l;
  }

  GoalPtr conj() {
    GoalPtr l = impl();
    if (is_punct(",")) {
      shift();
      return Goal::conj(std::move(l), conj());
    }
    return l;
  }

  GoalPtr impl() {
    Token start = tok_;
    Unit u = unit();
    if (is_punct("=>")) {
      shift();
      RulePtr hyp = as_hypothesis(u, start);
      GoalPtr consequent = impl();
      return Goal::implication(std::move(hyp), std::move(consequent));
    }
    if (auto* r = std::get_if<RulePtr>(&u)) {
      (void)r;
      fail_at(start, "a rule is only allowed as the hypothesis of '=>'");
    }
    return std::get<GoalPtr>(u);
  }

  RulePtr as_hypothesis(const Unit& u, const Token& at) const {
    if (auto* r = std::get_if<RulePtr>(&u)) return *r;
    const GoalPtr& g = std::get<GoalPtr>(u);
    if (g->kind != Goal::Kind::Atom) fail_at(at, "hypothesis must be an atom or a rule");
    auto r = std::make_shared<Rule>();
    r->head = g->atom;
    return r;
  }

  Unit unit() {
    if (is_punct("(")) {
      Token open = tok_;
      shift();
      GoalPtr g = body();
      if (is_punct(":-") || is_word("with")) {
        auto r = std::make_shared<Rule>();
        if (g->kind != Goal::Kind::Atom) fail_at(open, "hypothesis head must be an atom");
        r->head = g->atom;
        if (is_punct(":-")) {
          shift();
          r->body = body();
        }
        if (is_word("with")) {
          shift();
          r->grade = degree("grade");
        }
        expect(")");
        return RulePtr(std::move(r));
      }
      expect(")");
      return g;
    }
    return goal_term();
  }

  GoalPtr goal_term() {
    Token start = tok_;
    Term lhs = expr();
    static const char* ops[] = {"=", "\\=", "<", ">", "=<", ">="};
    std::string op;
    if (tok_.kind == Tok::Punct)
      for (const char* o : ops)
        if (tok_.text == o) op = o;
    if (op.empty() && is_word("is")) op = "is";
    if (!op.empty()) {
      shift();
      Term rhs = expr();
      return Goal::builtin(Atom{Symbol(op), {lhs, rhs}});
    }
    if (lhs.kind() != Term::Kind::Atom && lhs.kind() != Term::Kind::Compound) fail_at(start, "goal must be an atom");
    Atom a{lhs.functor(), lhs.kind() == Term::Kind::Compound ? lhs.args() : std::vector<Term>{}};
    if (a.arity() == 0 && a.predicate.name() == "true") return Goal::truth();
    if (is_builtin(a.predicate, a.arity())) return Goal::builtin(std::move(a));
    return Goal::call(std::move(a));
  }

  Term expr() {
    Term l = mul();
    while (is_punct("+") || is_punct("-")) {
      std::string op = tok_.text;
      shift();
      l = Term::compound(op, {l, mul()});
    }
    return l;
  }

  Term mul() {
    Term l = unary();
    while (is_punct("*") || is_punct("//")) {
      std::string op = tok_.text;
      shift();
      l = Term::compound(op, {l, unary()});
    }
    return l;
  }

  Term unary() {
    if (is_punct("-")) {
      shift();
      if (tok_.kind == Tok::Int) {
        Term t = Term::integer(-parse_int(tok_));
        shift();
        return t;
      }
      if (tok_.kind == Tok::Float) {
        Term t = Term::real(-std::strtod(tok_.text.c_str(), nullptr));
        shift();
        return t;
      }
      return Term::compound("-", {unary()});
    }
    return term();
  }

  int64_t parse_int(const Token& t) const {
    int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) fail_at(t, "integer out of range");
    return v;
  }

  Term term() {
    switch (tok_.kind) {
      case Tok::Int: {
        Term t = Term::integer(parse_int(tok_));
        shift();
        return t;
      }
      case Tok::Float: {
        Term t = Term::real(std::strtod(tok_.text.c_str(), nullptr));
        shift();
        return t;
      }
      case Tok::Var: {
        Term t = Term::var(variable(tok_.text));
        shift();
        return t;
      }
      case Tok::Atom: {
        std::string name = tok_.text;
        shift();
        if (is_punct("(")) {
          shift();
          std::vector<Term> args;
          args.push_back(expr());
          while (is_punct(",")) {
            shift();
            args.push_back(expr());
          }
          expect(")");
          return Term::compound(name, std::move(args));
        }
        return Term::atom(name);
      }
      case Tok::Punct:
        if (is_punct("[")) return list();
        if (is_punct("(")) {
          shift();
          Term t = expr();
          expect(")");
          return t;
        }
        break;
      default: break;
    }
    fail("unexpected '" + describe() + "'");
  }

  Term list() {
    expect("[");
    if (is_punct("]")) {
      shift();
      return Term::atom(kNil);
    }
    std::vector<Term> items{expr()};
    while (is_punct(",")) {
      shift();
      items.push_back(expr());
    }
    Term tail = Term::atom(kNil);
    if (is_punct("|")) {
      shift();
      tail = expr();
    }
    expect("]");
    return Term::list(items, tail);
  }

  Lexer lex_;
  Token tok_;
  std::unordered_map<std::string, int> vars_;
  std::vector<std::string> names_;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

Query parse_goal(std::string_view text) { return Parser(text).query(); }

}  // namespace hypolog

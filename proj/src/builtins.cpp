#include "hypolog/builtins.hpp"

#include <variant>

#include "hypolog/parser.hpp"
#include "hypolog/printer.hpp"

namespace hypolog {

namespace {

using Number = std::variant<int64_t, double>;

double as_double(const Number& n) {
  return std::holds_alternative<int64_t>(n) ? static_cast<double>(std::get<int64_t>(n)) : std::get<double>(n);
}

std::string describe(const rt::Store& store, rt::Ref r) {
  rt::Reader reader(store);
  return format_term(reader.read(r), [](int id) { return "_G" + std::to_string(id); });
}

Number eval(const rt::Store& store, rt::Ref r) {
  r = store.deref(r);
  const rt::Cell& c = store.cell(r);
  switch (c.tag) {
    case rt::Cell::Tag::Int: return c.ival;
    case rt::Cell::Tag::Float: return c.fval;
    case rt::Cell::Tag::Var: throw EvalError("arithmetic on an unbound variable");
    case rt::Cell::Tag::Atom: throw EvalError("not a number: " + describe(store, r));
    case rt::Cell::Tag::Struct: break;
  }
  const std::string& op = Symbol::from_id(c.sym).name();
  if (c.arity == 1 && op == "-") {
    Number x = eval(store, c.args);
    if (auto* i = std::get_if<int64_t>(&x)) return -*i;
    return -std::get<double>(x);
  }
  if (c.arity != 2) throw EvalError("unknown arithmetic function: " + describe(store, r));
  Number x = eval(store, c.args);
  Number y = eval(store, c.args + 1);
  const bool ints = std::holds_alternative<int64_t>(x) && std::holds_alternative<int64_t>(y);
  if (op == "//") {
    if (!ints) throw EvalError("'//' expects integers");
    if (std::get<int64_t>(y) == 0) throw EvalError("division by zero");
    return std::get<int64_t>(x) / std::get<int64_t>(y);
  }
  if (op == "+") return ints ? Number(std::get<int64_t>(x) + std::get<int64_t>(y)) : Number(as_double(x) + as_double(y));
  if (op == "-") return ints ? Number(std::get<int64_t>(x) - std::get<int64_t>(y)) : Number(as_double(x) - as_double(y));
  if (op == "*") return ints ? Number(std::get<int64_t>(x) * std::get<int64_t>(y)) : Number(as_double(x) * as_double(y));
  throw EvalError("unknown arithmetic function: " + describe(store, r));
}

int compare(const Number& x, const Number& y) {
  if (std::holds_alternative<int64_t>(x) && std::holds_alternative<int64_t>(y)) {
    int64_t a = std::get<int64_t>(x), b = std::get<int64_t>(y);
    return a < b ? -1 : a > b ? 1 : 0;
  }
  double a = as_double(x), b = as_double(y);
  return a < b ? -1 : a > b ? 1 : 0;
}

}  // namespace

bool run_builtin(rt::Store& store, Symbol name, const rt::Ref* args, size_t n) {
  const std::string& op = name.name();
  if (n == 0) {
    if (op == "true") return true;
    if (op == "fail") return false;
  } else if (n == 2) {
    if (op == "=") return store.unify(args[0], args[1]);
    if (op == "\\=") {
      rt::Mark m = store.mark();
      bool ok = store.unify(args[0], args[1]);
      store.undo(m);
      return !ok;
    }
    if (op == "is") {
      Number v = eval(store, args[1]);
      Term t = std::holds_alternative<int64_t>(v) ? Term::integer(std::get<int64_t>(v)) : Term::real(std::get<double>(v));
      return store.unify(args[0], store.put(t, 0));
    }
    int c = compare(eval(store, args[0]), eval(store, args[1]));
    if (op == "<") return c < 0;
    if (op == ">") return c > 0;
    if (op == "=<") return c <= 0;
    if (op == ">=") return c >= 0;
  }
  throw EvalError("unknown builtin " + op + "/" + std::to_string(n));
}

}  // namespace hypolog

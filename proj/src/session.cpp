#include "hypolog/session.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypolog/bench.hpp"
#include "hypolog/parser.hpp"
#include "hypolog/proximity.hpp"

namespace hypolog {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::pair<std::string_view, std::string_view> split_word(std::string_view s) {
  s = trim(s);
  const auto space = s.find_first_of(" \t");
  if (space == std::string_view::npos) return {s, {}};
  return {s.substr(0, space), trim(s.substr(space))};
}

double parse_degree(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw std::invalid_argument("expected a number");
  return v;
}

bool parse_switch(std::string_view v) {
  if (v == "on" || v == "yes" || v == "true") return true;
  if (v == "off" || v == "no" || v == "false") return false;
  throw std::invalid_argument("expected on or off");
}

}  // namespace

Session::Session(std::ostream& out, SessionConfig config) : out_(out), config_(config) {}

Session::~Session() = default;

SolverSettings Session::settings() const { return effective_settings(program_, config_.settings); }

void Session::load_text(std::string_view text) {
  Program p = parse_program(text);
  auto solver = std::make_unique<Solver>(p, config_.engine, effective_settings(p, config_.settings));
  pending_.reset();
  program_ = std::move(p);
  solver_ = std::move(solver);
}

void Session::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  load_text(text.str());
}

void Session::set(std::string_view key, std::string_view value) {
  SessionConfig next = config_;
  if (key == "lambda") {
    const double v = parse_degree(value);
    if (v < 0.0 || v > 1.0) throw std::invalid_argument("lambda must lie in [0,1]");
    next.settings.lambda = v;
  } else if (key == "tnorm") {
    next.settings.tnorm = TNorm::parse(value);
  } else if (key == "engine") {
    next.engine = parse_engine(value);
  } else if (key == "transitive") {
    next.settings.transitive = parse_switch(value);
  } else if (key == "trace") {
    next.trace = parse_switch(value);
  } else if (key == "limit") {
    if (value == "all") next.limit.reset();
    else next.limit = static_cast<size_t>(std::stoul(std::string(value)));
  } else {
    throw std::invalid_argument("unknown setting '" + std::string(key) + "'");
  }
  // Session values replace the loaded file's directives.
  Program p = program_;
  if (key == "lambda") p.lambda_cut.reset();
  if (key == "tnorm") p.tnorm.reset();
  if (key == "transitive") p.transitive.reset();
  solver_ = std::make_unique<Solver>(p, next.engine, effective_settings(p, next.settings));
  pending_.reset();
  program_ = std::move(p);
  config_ = next;
}

std::vector<Answer> Session::run_goal(std::string_view goal) {
  if (!solver_) solver_ = std::make_unique<Solver>(program_, config_.engine, settings());
  pending_.reset();
  query_ = std::make_unique<Query>(parse_goal(goal));
  TraceSink sink;
  if (config_.trace) {
    if (config_.engine == EngineKind::Compiled)
      out_ << "% trace is available for the meta engines only\n";
    else
      sink = [this](const TraceEvent& e) {
        out_ << std::string(static_cast<size_t>(e.depth) * 2, ' ') << e.label << ": " << e.state << "\n";
      };
  }
  auto stream = solver_->solve(*query_, std::move(sink));
  std::vector<Answer> answers;
  const size_t limit = config_.limit.value_or(static_cast<size_t>(-1));
  while (answers.size() < limit) {
    auto a = stream->next();
    if (!a) break;
    out_ << a->to_string() << "\n";
    answers.push_back(std::move(*a));
  }
  if (answers.empty()) out_ << "no\n";
  else if (answers.size() == limit) pending_ = std::move(stream);
  return answers;
}

void Session::next_answer() {
  if (!pending_) {
    out_ << "no\n";
    return;
  }
  auto a = pending_->next();
  if (a) {
    out_ << a->to_string() << "\n";
  } else {
    pending_.reset();
    out_ << "no\n";
  }
}

void Session::emit(std::optional<EmitDialect> dialect) {
  const auto s = settings();
  const auto relation = ProximityRelation::build(program_.proximity, s.tnorm, s.transitive);
  const EmitDialect d = dialect.value_or(relation.is_identity() ? EmitDialect::Crisp : EmitDialect::Fuzzy);
  out_ << emit_prolog(program_, relation, s.lambda, d);
}

void Session::bench(std::string_view name, int size) {
  const auto report = run_bench({std::string(name)}, {EngineKind::MetaList, EngineKind::MetaTree, EngineKind::Compiled},
                                {size});
  out_ << report.to_text();
}

bool Session::execute(std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() == '%') return true;
  try {
    auto [word, rest] = split_word(line);
    if (word == "quit" || word == "quit." || word == "halt" || word == "halt.") return false;
    if (word == ";") {
      next_answer();
    } else if (word == "load") {
      load_file(std::string(rest));
      out_ << "% loaded " << program_.clauses.size() << " clauses\n";
    } else if (word == "set") {
      auto [key, value] = split_word(rest);
      set(key, value);
    } else if (word == "trace") {
      set("trace", rest.empty() ? "on" : rest);
    } else if (word == "emit") {
      std::optional<EmitDialect> d;
      if (!rest.empty()) {
        d = parse_emit_dialect(rest);
        if (!d) throw std::invalid_argument("unknown dialect '" + std::string(rest) + "'");
      }
      emit(d);
    } else if (word == "bench") {
      auto [name, size] = split_word(rest);
      bench(name, size.empty() ? 100 : std::stoi(std::string(size)));
    } else {
      if (line.starts_with("?-")) line = trim(line.substr(2));
      run_goal(line);
    }
  } catch (const std::exception& e) {
    pending_.reset();
    out_ << "error: " << e.what() << "\n";
  }
  return true;
}

void Session::repl(std::istream& in, bool prompt) {
  std::string line;
  while (true) {
    if (prompt) out_ << (pending_ ? "" : "?- ") << std::flush;
    if (!std::getline(in, line)) break;
    if (!execute(line)) break;
  }
}

}  // namespace hypolog

#include "hypolog/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <memory>
#include <sstream>

namespace hypolog {

namespace {

GoalPtr call(const std::string& name, std::vector<Term> args = {}) {
  return Goal::call(Atom{Symbol(name), std::move(args)});
}

RulePtr fact(const std::string& name) {
  auto r = std::make_shared<Rule>();
  r->head = Atom{Symbol(name), {}};
  return r;
}

Clause clause(RulePtr rule, int num_vars = 0, std::vector<std::string> names = {}) {
  return Clause{std::move(rule), num_vars, std::move(names)};
}

Query goal(GoalPtr g, int num_vars = 0, std::vector<std::string> names = {}) {
  return Query{std::move(g), num_vars, std::move(names)};
}

// p :- a1 => ... => an => (a1, ..., an).
BenchProgram hypo1(int n) {
  GoalPtr conj = call("a" + std::to_string(n));
  for (int i = n - 1; i >= 1; --i) conj = Goal::conj(call("a" + std::to_string(i)), conj);
  GoalPtr body = conj;
  for (int i = n; i >= 1; --i) body = Goal::implication(fact("a" + std::to_string(i)), body);
  auto p = std::make_shared<Rule>();
  p->head = Atom{Symbol("p"), {}};
  p->body = body;
  BenchProgram b{"hypo1", n, {}, goal(call("p"))};
  b.program.clauses.push_back(clause(p));
  return b;
}

// p(0) :- a.  p(N) :- N > 0, N1 is N - 1, (a => p(N1)).
BenchProgram hypo2(int n) {
  auto base = std::make_shared<Rule>();
  base->head = Atom{Symbol("p"), {Term::integer(0)}};
  base->body = call("a");
  const Term v = Term::var(0), v1 = Term::var(1);
  auto step = std::make_shared<Rule>();
  step->head = Atom{Symbol("p"), {v}};
  step->body = Goal::conj(
      Goal::builtin(Atom{Symbol(">"), {v, Term::integer(0)}}),
      Goal::conj(Goal::builtin(Atom{Symbol("is"), {v1, Term::compound("-", {v, Term::integer(1)})}}),
                 Goal::implication(fact("a"), call("p", {v1}))));
  BenchProgram b{"hypo2", n, {}, goal(call("p", {Term::integer(n)}))};
  b.program.clauses.push_back(clause(base));
  b.program.clauses.push_back(clause(step, 2, {"N", "N1"}));
  return b;
}

// p :- a => ... => a => a, with n assumptions.
BenchProgram hypo3(int n) {
  GoalPtr body = call("a");
  for (int i = 0; i < n; ++i) body = Goal::implication(fact("a"), body);
  auto p = std::make_shared<Rule>();
  p->head = Atom{Symbol("p"), {}};
  p->body = body;
  BenchProgram b{"hypo3", n, {}, goal(call("p"))};
  b.program.clauses.push_back(clause(p));
  return b;
}

struct Measured {
  std::vector<Answer> answers;
  uint64_t inferences = 0;
  double ms = 0.0;
};

Measured measure(const BenchProgram& b, const Solver& solver) {
  const auto start = std::chrono::steady_clock::now();
  auto stream = solver.solve(b.query);
  Measured m;
  m.answers = collect(*stream);
  m.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  m.inferences = stream->stats().inferences();
  return m;
}

std::string diff(const std::string& a, const std::vector<Answer>& x, const std::string& b,
                 const std::vector<Answer>& y) {
  std::ostringstream os;
  os << a << " (" << x.size() << " answers):\n" << format_answers(x) << b << " (" << y.size() << " answers):\n"
     << format_answers(y);
  return os.str();
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out(1);
  for (char c : line) {
    if (c == ',') out.emplace_back();
    else if (c != '\r') out.back() += c;
  }
  return out;
}

}  // namespace

BenchProgram gen_bench(std::string_view name, int n) {
  if (n < 1) throw std::invalid_argument("benchmark size must be at least 1");
  if (name == "hypo1") return hypo1(n);
  if (name == "hypo2") return hypo2(n);
  if (name == "hypo3") return hypo3(n);
  throw std::invalid_argument("unknown benchmark '" + std::string(name) + "'");
}

BenchReport run_bench(const std::vector<std::string>& names, const std::vector<EngineKind>& engines,
                      const std::vector<int>& sizes, int trials) {
  BenchReport report;
  if (engines.empty()) return report;
  trials = std::max(trials, 1);
  for (const auto& name : names) {
    for (int size : sizes) {
      const BenchProgram b = gen_bench(name, size);
      std::vector<std::unique_ptr<Solver>> solvers;
      std::vector<Measured> first;
      for (EngineKind e : engines) {
        solvers.push_back(std::make_unique<Solver>(b.program, e, SolverSettings{}));
        first.push_back(measure(b, *solvers.back()));
      }
      for (size_t i = 1; i < engines.size(); ++i)
        if (!same_answers(first[0].answers, first[i].answers))
          throw EngineDisagreement(name + " size " + std::to_string(size) + ": engines disagree\n" +
                                   diff(engine_name(engines[0]), first[0].answers, engine_name(engines[i]),
                                        first[i].answers));
      for (size_t i = 0; i < engines.size(); ++i) {
        std::vector<double> times{first[i].ms};
        for (int t = 1; t < trials; ++t) times.push_back(measure(b, *solvers[i]).ms);
        std::sort(times.begin(), times.end());
        report.rows.push_back(BenchRow{name, engine_name(engines[i]), size, times[times.size() / 2],
                                       first[i].answers.size(), first[i].inferences});
      }
    }
  }
  return report;
}

std::string BenchReport::to_text() const {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-8s %-9s %7s %12s %8s %12s\n", "program", "engine", "size", "time(ms)",
                "answers", "inferences");
  os << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-8s %-9s %7d %12.3f %8zu %12llu\n", r.program.c_str(), r.engine.c_str(),
                  r.size, r.cputime_ms, r.answers, static_cast<unsigned long long>(r.inferences));
    os << line;
  }
  return os.str();
}

std::string BenchReport::to_csv() const {
  std::ostringstream os;
  os << kBenchCsvHeader << "\n";
  os.precision(17);
  for (const auto& r : rows)
    os << r.program << ',' << r.engine << ',' << r.size << ',' << r.cputime_ms << ',' << r.answers << ','
       << r.inferences << "\n";
  return os.str();
}

BenchReport BenchReport::from_csv(std::string_view text) {
  BenchReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || split(line) != split(kBenchCsvHeader))
    throw std::invalid_argument("missing bench CSV header");
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto f = split(line);
    if (f.size() != 6) throw std::invalid_argument("bad bench CSV row: " + line);
    try {
      report.rows.push_back(BenchRow{f[0], f[1], std::stoi(f[2]), std::stod(f[3]),
                                     static_cast<size_t>(std::stoull(f[4])), std::stoull(f[5])});
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad bench CSV row: " + line);
    }
  }
  return report;
}

}  // namespace hypolog

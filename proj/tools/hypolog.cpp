#include <unistd.h>

#include <CLI11.hpp>
#include <iostream>

#include "hypolog/bench.hpp"
#include "hypolog/session.hpp"

int main(int argc, char** argv) {
  using namespace hypolog;
  CLI::App app{"hypolog: hypothetical fuzzy logic programming"};

  std::string file, engine = "meta-b", tnorm = "min", goal, bench, emit_dialect;
  double lambda = 0.0;
  bool all = false, trace = false, transitive = false, csv = false;
  size_t count = 1;
  int size = 100;
  app.add_option("program", file, "Program file to load");
  app.add_option("--engine", engine, "meta-a, meta-b or compiled")->check(CLI::IsMember({"meta-a", "meta-b", "compiled"}));
  app.add_option("--lambda", lambda, "Lambda cut")->check(CLI::Range(0.0, 1.0));
  app.add_option("--tnorm", tnorm, "min, product or luka")->check(CLI::IsMember({"min", "product", "luka"}));
  app.add_option("--goal", goal, "Solve this goal and exit");
  auto* all_flag = app.add_flag("--all", all, "Print every answer");
  app.add_option("-n", count, "Print at most N answers")->excludes(all_flag);
  auto* emit_opt = app.add_option("--emit", emit_dialect, "Print the translated program (crisp-prop, crisp-pred, crisp, fuzzy)")
                       ->expected(0, 1);
  app.add_option("--bench", bench, "Run a benchmark: hypo1, hypo2 or hypo3");
  app.add_option("--size", size, "Benchmark size")->check(CLI::PositiveNumber);
  app.add_flag("--csv", csv, "Benchmark report as CSV");
  app.add_flag("--trace", trace, "Print derivation steps (meta engines)");
  app.add_flag("--transitive", transitive, "Close the proximity relation under the t-norm");
  CLI11_PARSE(app, argc, argv);

  SessionConfig config;
  config.engine = parse_engine(engine);
  config.settings.lambda = lambda;
  config.settings.tnorm = TNorm::parse(tnorm);
  config.settings.transitive = transitive;
  config.trace = trace;
  config.limit = all ? std::nullopt : std::optional<size_t>(count);
  Session session(std::cout, config);

  try {
    if (!bench.empty()) {
      const auto report =
          run_bench({bench}, {EngineKind::MetaList, EngineKind::MetaTree, EngineKind::Compiled}, {size});
      std::cout << (csv ? report.to_csv() : report.to_text());
      return 0;
    }
    if (!file.empty()) session.load_file(file);
    if (emit_opt->count() > 0) {
      std::optional<EmitDialect> d;
      if (!emit_dialect.empty()) {
        d = parse_emit_dialect(emit_dialect);
        if (!d) throw std::invalid_argument("unknown dialect '" + emit_dialect + "'");
      }
      session.emit(d);
      return 0;
    }
    if (!goal.empty()) return session.run_goal(goal).empty() ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  session.repl(std::cin, isatty(STDIN_FILENO) != 0);
  return 0;
}

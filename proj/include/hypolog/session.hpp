#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypolog/emit.hpp"
#include "hypolog/solver.hpp"

namespace hypolog {

struct SessionConfig {
  EngineKind engine = EngineKind::MetaTree;
  SolverSettings settings;
  /// Answers printed per goal; empty means all. One means interactive `;`.
  std::optional<size_t> limit = 1;
  bool trace = false;
};

/// Line-oriented front end shared by the REPL and batch mode.
class Session {
 public:
  Session(std::ostream& out, SessionConfig config = {});
  ~Session();

  /// Runs one command or goal; false after `quit`.
  bool execute(std::string_view line);
  /// Reads lines until end of input or `quit`.
  void repl(std::istream& in, bool prompt);

  void load_file(const std::string& path);
  void load_text(std::string_view text);
  /// Applies `set KEY VALUE`; throws std::invalid_argument on bad input.
  void set(std::string_view key, std::string_view value);

  /// Solves `goal` and prints up to the configured number of answers.
  std::vector<Answer> run_goal(std::string_view goal);
  void emit(std::optional<EmitDialect> dialect = std::nullopt);
  void bench(std::string_view name, int size);

  const SessionConfig& config() const { return config_; }
  const Program& program() const { return program_; }

 private:
  void next_answer();
  SolverSettings settings() const;

  std::ostream& out_;
  SessionConfig config_;
  Program program_;
  std::unique_ptr<Solver> solver_;
  std::unique_ptr<Query> query_;
  std::unique_ptr<AnswerStream> pending_;
};

}  // namespace hypolog

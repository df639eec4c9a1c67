#pragma once

#include <span>
#include <string>
#include <vector>

#include "argsat/af.hpp"
#include "argsat/encodings.hpp"
#include "argsat/reasoner.hpp"

namespace argsat::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Supported tasks as printed by `--problems`.
std::string problems_line();
std::string formats_line();

/// Renders an answer as a single output line (without the newline):
/// `[a,b]` in declaration order, `NO` for a missing extension, a decimal
/// count, or `YES`/`NO`.
std::string render(const ArgumentationFramework& af, const Answer& answer);

/// The encoding a task's solvers start from; written by `--dimacs-dump`.
enc::Cnf base_encoding(const ArgumentationFramework& af, const TaskSpec& task);

/// Runs one invocation. `args` excludes the program name.
///   --problems | --formats
///   -p <TASK> -f <FILE> -fo <tgf|apx> [-a <ARG>] [--dimacs-dump <PATH>]
RunResult run(std::span<const std::string> args);

}  // namespace argsat::cli

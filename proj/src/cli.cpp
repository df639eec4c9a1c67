#include "argsat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace argsat::cli {

namespace {

constexpr const char* kUsage =
    "usage: argsat --problems | --formats\n"
    "       argsat -p <TASK> -f <FILE> -fo <tgf|apx> [-a <ARG>] [--dimacs-dump <PATH>]\n";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  bool problems = false;
  bool formats = false;
  std::map<std::string, std::string> values;  // -p, -f, -fo, -a, --dimacs-dump
};

Invocation parse_args(std::span<const std::string> args) {
  static const std::vector<std::string> kValueFlags{"-p", "-f", "-fo", "-a", "--dimacs-dump"};
  Invocation inv;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& flag = args[i];
    if (flag == "--problems" || flag == "--formats") {
      bool& set = flag == "--problems" ? inv.problems : inv.formats;
      if (set) throw UsageError("repeated flag " + flag);
      set = true;
      continue;
    }
    if (std::find(kValueFlags.begin(), kValueFlags.end(), flag) == kValueFlags.end()) {
      throw UsageError("unknown argument '" + flag + "'");
    }
    if (i + 1 >= args.size()) throw UsageError("flag " + flag + " needs a value");
    if (!inv.values.emplace(flag, args[++i]).second) throw UsageError("repeated flag " + flag);
  }
  const int modes = (inv.problems ? 1 : 0) + (inv.formats ? 1 : 0);
  if (modes > 1 || (modes == 1 && !inv.values.empty())) {
    throw UsageError("--problems and --formats take no other arguments");
  }
  if (modes == 0) {
    for (const char* required : {"-p", "-f", "-fo"}) {
      if (!inv.values.contains(required)) throw UsageError(std::string("missing ") + required);
    }
  }
  return inv;
}

std::pair<Problem, Semantics> parse_task(const std::string& text) {
  const auto dash = text.find('-');
  if (dash != std::string::npos) {
    const auto problem = parse_problem(std::string_view(text).substr(0, dash));
    const auto semantics = parse_semantics(std::string_view(text).substr(dash + 1));
    if (problem && semantics) return {*problem, *semantics};
  }
  throw UsageError("unsupported problem '" + text + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string problems_line() {
  return "[DC-CO,DC-GR,DC-ID,DC-PR,DC-ST,DS-CO,DS-GR,DS-ID,DS-PR,DS-ST,"
         "SE-CO,SE-GR,SE-ID,SE-PR,SE-ST,CE-CO,CE-GR,CE-ID,CE-PR,CE-ST]";
}

std::string formats_line() { return "[tgf,apx]"; }

std::string render(const ArgumentationFramework& af, const Answer& answer) {
  struct Visitor {
    const ArgumentationFramework& af;
    std::string operator()(const ArgSet& ext) const {
      std::string out = "[";
      bool first = true;
      ext.for_each([&](ArgIndex a) {
        if (!first) out += ',';
        out += af.name(a);
        first = false;
      });
      return out + "]";
    }
    std::string operator()(NoExtension) const { return "NO"; }
    std::string operator()(Count c) const { return std::to_string(c.value); }
    std::string operator()(Verdict v) const { return v.value ? "YES" : "NO"; }
  };
  return std::visit(Visitor{af}, answer);
}

enc::Cnf base_encoding(const ArgumentationFramework& af, const TaskSpec& task) {
  switch (task.semantics()) {
    case Semantics::Stable:
      return enc::encode_stable(af);
    case Semantics::Complete:
    case Semantics::Grounded:
      return enc::encode_complete(af);
    case Semantics::Preferred:
    case Semantics::Ideal:
      return enc::encode_admissible(af);
  }
  throw std::logic_error("unhandled semantics");
}

RunResult run(std::span<const std::string> args) {
  RunResult result;
  try {
    const Invocation inv = parse_args(args);
    if (inv.problems) {
      result.out = problems_line() + "\n";
      return result;
    }
    if (inv.formats) {
      result.out = formats_line() + "\n";
      return result;
    }

    const auto [problem, semantics] = parse_task(inv.values.at("-p"));
    const auto format = parse_format(inv.values.at("-fo"));
    if (!format) throw UsageError("unsupported format '" + inv.values.at("-fo") + "'");
    const bool decision = problem == Problem::Credulous || problem == Problem::Skeptical;
    if (decision != inv.values.contains("-a")) {
      throw UsageError(decision ? "-a <ARG> is required for DC/DS problems"
                                : "-a is only valid for DC/DS problems");
    }

    const std::string& path = inv.values.at("-f");
    ArgumentationFramework af;
    try {
      af = parse(read_file(path), *format);
    } catch (const ParseError& e) {
      throw std::runtime_error(path + ": " + e.what());
    }

    std::optional<ArgIndex> query;
    if (decision) query = af.index_of(inv.values.at("-a"));
    const TaskSpec task(problem, semantics, query);

    if (const auto it = inv.values.find("--dimacs-dump"); it != inv.values.end()) {
      std::ofstream dump(it->second);
      if (!dump) throw std::runtime_error("cannot write " + it->second);
      enc::write_dimacs(dump, base_encoding(af, task));
    }

    result.out = render(af, answer(af, task)) + "\n";
  } catch (const UsageError& e) {
    result = {1, "", std::string("error: ") + e.what() + "\n" + kUsage};
  } catch (const std::exception& e) {
    result = {1, "", std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace argsat::cli

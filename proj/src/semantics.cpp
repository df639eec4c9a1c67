#include "argsat/semantics.hpp"

namespace argsat {

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::Complete: return "CO";
    case Semantics::Grounded: return "GR";
    case Semantics::Stable: return "ST";
    case Semantics::Preferred: return "PR";
    case Semantics::Ideal: return "ID";
  }
  return "??";
}

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::SomeExtension: return "SE";
    case Problem::Count: return "CE";
    case Problem::Credulous: return "DC";
    case Problem::Skeptical: return "DS";
  }
  return "??";
}

std::optional<Semantics> parse_semantics(std::string_view s) {
  for (const Semantics sigma : kAllSemantics) {
    if (to_string(sigma) == s) return sigma;
  }
  return std::nullopt;
}

std::optional<Problem> parse_problem(std::string_view s) {
  for (const Problem p : kAllProblems) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

}  // namespace argsat

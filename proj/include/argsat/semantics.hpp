#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace argsat {

enum class Semantics { Complete, Grounded, Stable, Preferred, Ideal };
enum class Problem { SomeExtension, Count, Credulous, Skeptical };

inline constexpr std::array kAllSemantics{Semantics::Complete, Semantics::Grounded,
                                          Semantics::Stable, Semantics::Preferred,
                                          Semantics::Ideal};
inline constexpr std::array kAllProblems{Problem::SomeExtension, Problem::Count,
                                         Problem::Credulous, Problem::Skeptical};

/// "CO", "GR", "ST", "PR", "ID".
std::string_view to_string(Semantics s);
/// "SE", "CE", "DC", "DS".
std::string_view to_string(Problem p);
std::optional<Semantics> parse_semantics(std::string_view s);
std::optional<Problem> parse_problem(std::string_view s);

/// Semantics with a unique extension, where credulous and skeptical coincide.
constexpr bool is_unique_status(Semantics s) {
  return s == Semantics::Grounded || s == Semantics::Ideal;
}

}  // namespace argsat

#pragma once

#include <vector>

#include "argsat/af.hpp"
#include "argsat/semantics.hpp"

// Reference semantics by explicit subset enumeration. Deliberately shares
// no code with the SAT-based reasoner beyond the framework type.
namespace argsat::oracle {

inline constexpr std::size_t kMaxArguments = 20;

struct ExtensionFamily {
  Semantics semantics;
  /// Sorted by canonical_less.
  std::vector<ArgSet> extensions;
};

bool is_conflict_free(const ArgumentationFramework& af, const ArgSet& s);
bool is_admissible(const ArgumentationFramework& af, const ArgSet& s);
bool is_complete(const ArgumentationFramework& af, const ArgSet& s);
bool is_stable(const ArgumentationFramework& af, const ArgSet& s);

/// All admissible sets, canonically ordered.
std::vector<ArgSet> admissible_sets(const ArgumentationFramework& af);

/// Throws std::length_error above kMaxArguments arguments.
ExtensionFamily enumerate(const ArgumentationFramework& af, Semantics sigma);

bool credulously_accepted(const ExtensionFamily& family, ArgIndex a);
/// Vacuously true for an empty family.
bool skeptically_accepted(const ExtensionFamily& family, ArgIndex a);

}  // namespace argsat::oracle

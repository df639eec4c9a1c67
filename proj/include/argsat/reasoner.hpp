#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "argsat/af.hpp"
#include "argsat/semantics.hpp"

namespace argsat {

/// A reasoning task. Credulous queries under grounded or ideal semantics are
/// stored as skeptical ones, since both semantics have a unique extension.
class TaskSpec {
 public:
  /// Throws std::invalid_argument unless a query is given exactly for DC/DS.
  TaskSpec(Problem problem, Semantics semantics, std::optional<ArgIndex> query = std::nullopt);

  [[nodiscard]] Problem problem() const { return problem_; }
  [[nodiscard]] Semantics semantics() const { return semantics_; }
  [[nodiscard]] std::optional<ArgIndex> query() const { return query_; }

 private:
  Problem problem_;
  Semantics semantics_;
  std::optional<ArgIndex> query_;
};

struct NoExtension {
  friend bool operator==(NoExtension, NoExtension) = default;
};
struct Count {
  std::uint64_t value;
  friend bool operator==(Count, Count) = default;
};
struct Verdict {
  bool value;
  friend bool operator==(Verdict, Verdict) = default;
};

/// SE -> ArgSet or NoExtension, CE -> Count, DC/DS -> Verdict.
using Answer = std::variant<ArgSet, NoExtension, Count, Verdict>;

/// Least fixpoint of the defense operator.
ArgSet grounded(const ArgumentationFramework& af);

/// Some extension, or nullopt if none exists (only possible for stable).
std::optional<ArgSet> some_extension(const ArgumentationFramework& af, Semantics sigma);

/// Grows an admissible `seed` to a preferred extension containing it.
/// Throws std::invalid_argument if `seed` is not admissible.
ArgSet maximize_admissible(const ArgumentationFramework& af, const ArgSet& seed);

/// All preferred extensions in discovery order.
std::vector<ArgSet> preferred_extensions(const ArgumentationFramework& af);

std::uint64_t count_extensions(const ArgumentationFramework& af, Semantics sigma);

/// Throws UnknownArgument for an index outside the framework.
bool credulous(const ArgumentationFramework& af, Semantics sigma, ArgIndex a);
bool skeptical(const ArgumentationFramework& af, Semantics sigma, ArgIndex a);

struct DsPreferredStats {
  std::uint64_t candidates = 0;  ///< counterexample candidates proposed
  std::uint64_t refinements = 0;
};

/// Skeptical preferred acceptance without computing preferred extensions.
///
/// `a` is accepted iff some admissible set contains it and, for every
/// admissible S' that attacks an admissible set containing `a`, S' + {a}
/// extends to an admissible set. A two-copy solver proposes attacker sets
/// S'; each is checked for extendability, and a successful witness Z blocks
/// every future candidate contained in Z.
bool ds_preferred(const ArgumentationFramework& af, ArgIndex a,
                  DsPreferredStats* stats = nullptr);

struct IdealTrace {
  ArgSet credulous;           ///< arguments in some admissible set
  ArgSet candidates;          ///< arguments with no credulous attacker
  std::vector<ArgSet> rounds; ///< shrinking sequence, starting at candidates
  ArgSet result;
};

/// The ideal extension: the largest admissible subset of the arguments not
/// attacked by any credulously accepted argument.
IdealTrace ideal_trace(const ArgumentationFramework& af);
ArgSet ideal(const ArgumentationFramework& af);

Answer answer(const ArgumentationFramework& af, const TaskSpec& task);

}  // namespace argsat

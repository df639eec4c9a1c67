#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "argsat/af.hpp"
#include "argsat/sat.hpp"

namespace argsat::enc {

/// Variable layout of an encoding. In-variables come first (copy X, then
/// copy Y for two-copy encodings), followed by auxiliaries in registration
/// order.
class VarMap {
 public:
  struct Aux {
    std::string label;
    sat::Var var;
  };

  VarMap() = default;

  /// Allocates one in-variable per argument for a new copy; returns the copy number.
  std::size_t add_copy(std::size_t num_args);
  sat::Var add_aux(std::string label);

  [[nodiscard]] std::size_t num_vars() const { return num_vars_; }
  [[nodiscard]] std::size_t num_copies() const { return copies_.size(); }
  [[nodiscard]] sat::Var in_var(ArgIndex a, std::size_t copy = 0) const;
  [[nodiscard]] std::span<const sat::Var> in_vars(std::size_t copy = 0) const;
  [[nodiscard]] std::span<const Aux> aux() const { return aux_; }

 private:
  std::size_t num_vars_ = 0;
  std::vector<std::vector<sat::Var>> copies_;
  std::vector<Aux> aux_;
};

inline constexpr std::size_t kCopyX = 0;
inline constexpr std::size_t kCopyY = 1;

struct Cnf {
  VarMap vars;
  std::vector<sat::Clause> clauses;
};

/// {~in_a | ~in_b} for every attack (a, b).
Cnf encode_conflict_free(const ArgumentationFramework& af);
/// Conflict-freeness plus (in_a | in_b1 | ... ) over the attackers b of each a.
Cnf encode_stable(const ArgumentationFramework& af);
/// Conflict-freeness plus, per attack (b, a), the defense clause
/// (~in_a | in_c1 | ...) over the attackers c of b.
Cnf encode_admissible(const ArgumentationFramework& af);
/// Admissibility plus att_b <-> OR in_c for every b with an outgoing attack,
/// and per argument a the clause (in_a | ~att_b1 | ...) over attackers of a.
Cnf encode_complete(const ArgumentationFramework& af);

/// Models are pairs (S, S') of admissible sets with `a` in S and S' attacking S.
/// Copy X holds S, copy Y holds S'; one selector per attack picks the witness.
Cnf encode_counterexample_pair(const ArgumentationFramework& af, ArgIndex a);

/// Registers the Cnf's variables in a fresh solver and adds its clauses.
/// Throws std::logic_error if the solver already has variables.
void load(sat::Solver& solver, const Cnf& cnf);

/// In-variable projection of the solver's current model.
ArgSet project(const sat::Solver& solver, std::span<const sat::Var> in_vars);

/// The exact-projection blocking clause: some in-variable differs from `s`.
sat::Clause block_projection(std::span<const sat::Var> in_vars, const ArgSet& s);

void write_dimacs(std::ostream& out, const Cnf& cnf);

}  // namespace argsat::enc

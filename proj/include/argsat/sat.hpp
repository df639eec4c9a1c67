#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace argsat::sat {

/// Variables are 1-based, as in DIMACS.
using Var = std::uint32_t;

class Lit {
 public:
  constexpr Lit() = default;

  static constexpr Lit positive(Var v) { return Lit{(v - 1) << 1}; }
  static constexpr Lit negative(Var v) { return Lit{((v - 1) << 1) | 1U}; }
  /// Throws std::invalid_argument for 0.
  static Lit from_dimacs(int value);

  [[nodiscard]] constexpr Var var() const { return (code_ >> 1) + 1; }
  [[nodiscard]] constexpr bool is_negative() const { return (code_ & 1U) != 0; }
  [[nodiscard]] constexpr int to_dimacs() const {
    return is_negative() ? -static_cast<int>(var()) : static_cast<int>(var());
  }
  /// Dense code: 2 * (var - 1) + sign.
  [[nodiscard]] constexpr std::uint32_t code() const { return code_; }

  constexpr Lit operator~() const { return Lit{code_ ^ 1U}; }
  friend constexpr auto operator<=>(Lit, Lit) = default;

 private:
  explicit constexpr Lit(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

using Clause = std::vector<Lit>;

enum class Status { Sat, Unsat };

/// Sorts and deduplicates; returns nullopt for a tautology.
std::optional<Clause> normalize(Clause clause);

/// DIMACS CNF: header `p cnf <vars> <clauses>`, one zero-terminated clause per line.
void write_dimacs(std::ostream& out, std::size_t num_vars, std::span<const Clause> clauses);

struct SolverStats {
  std::uint64_t solves = 0;
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learnt_clauses = 0;
};

/// Incremental CDCL solver. Clauses are permanent; assumptions passed to
/// solve() only hold for that call. Deterministic for a fixed call sequence.
/// Not thread-safe; distinct instances are independent.
class Solver {
 public:
  Solver() = default;

  Var new_var();
  [[nodiscard]] std::size_t num_vars() const { return assigns_.size(); }

  /// Throws std::invalid_argument if a literal names an unregistered variable.
  void add_clause(std::span<const Lit> lits);
  void add_clause(std::initializer_list<Lit> lits) { add_clause(std::span(lits.begin(), lits.size())); }

  Status solve(std::span<const Lit> assumptions = {});
  Status solve(std::initializer_list<Lit> assumptions) {
    return solve(std::span(assumptions.begin(), assumptions.size()));
  }

  /// Model value after a Sat result; throws std::logic_error otherwise.
  [[nodiscard]] bool value(Var v) const;
  [[nodiscard]] bool value(Lit l) const { return value(l.var()) != l.is_negative(); }
  [[nodiscard]] bool has_model() const { return has_model_; }

  /// Normalized input clauses (tautologies dropped), in insertion order.
  [[nodiscard]] std::span<const Clause> clauses() const { return original_; }
  void write_dimacs(std::ostream& out) const;

  [[nodiscard]] const SolverStats& stats() const { return stats_; }

 private:
  enum class LBool : std::uint8_t { False, True, Undef };
  using ClauseRef = std::uint32_t;
  static constexpr ClauseRef kNoReason = ~ClauseRef{0};

  struct Watcher {
    ClauseRef clause;
    Lit blocker;
  };

  struct StoredClause {
    std::vector<Lit> lits;
    bool learnt;
  };

  [[nodiscard]] LBool lit_value(Lit l) const {
    const LBool v = assigns_[l.var() - 1];
    if (v == LBool::Undef) return v;
    return (v == LBool::True) != l.is_negative() ? LBool::True : LBool::False;
  }
  [[nodiscard]] std::uint32_t decision_level() const {
    return static_cast<std::uint32_t>(trail_lim_.size());
  }

  void enqueue(Lit l, ClauseRef reason);
  ClauseRef attach(std::vector<Lit> lits, bool learnt);
  ClauseRef propagate();
  std::uint32_t analyze(ClauseRef conflict, std::vector<Lit>& learnt);
  bool redundant(Lit l) const;
  void cancel_until(std::uint32_t level);
  /// nullopt when the conflict budget runs out (restart).
  std::optional<Status> search(std::span<const Lit> assumptions, std::uint64_t conflict_budget);
  std::optional<Lit> pick_branch();

  void bump(Var v);
  void decay() { activity_inc_ /= kActivityDecay; }

  // Max-heap over activity, lower variable index first on ties.
  bool heap_before(Var a, Var b) const;
  void heap_insert(Var v);
  Var heap_pop();
  void heap_up(std::size_t pos);
  void heap_down(std::size_t pos);
  [[nodiscard]] bool in_heap(Var v) const { return heap_pos_[v - 1] >= 0; }

  static constexpr double kActivityDecay = 0.95;
  static constexpr std::uint64_t kRestartUnit = 100;

  bool ok_ = true;
  bool has_model_ = false;
  std::vector<LBool> assigns_;
  std::vector<bool> model_;
  std::vector<bool> saved_phase_;
  std::vector<std::uint32_t> level_;
  std::vector<ClauseRef> reason_;
  std::vector<double> activity_;
  double activity_inc_ = 1.0;
  std::vector<std::uint8_t> seen_;

  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<StoredClause> db_;
  std::vector<std::vector<Watcher>> watches_;  // indexed by Lit::code() of the literal becoming true
  std::vector<Clause> original_;

  std::vector<Var> heap_;
  std::vector<std::int64_t> heap_pos_;

  SolverStats stats_;
};

}  // namespace argsat::sat

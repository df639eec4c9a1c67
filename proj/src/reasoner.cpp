#include "argsat/reasoner.hpp"

#include <stdexcept>
#include <string>

#include "argsat/encodings.hpp"
#include "argsat/sat.hpp"

namespace argsat {

using sat::Lit;
using sat::Status;

TaskSpec::TaskSpec(Problem problem, Semantics semantics, std::optional<ArgIndex> query)
    : problem_(problem), semantics_(semantics), query_(query) {
  const bool decision = problem == Problem::Credulous || problem == Problem::Skeptical;
  if (decision && !query) {
    throw std::invalid_argument(std::string(to_string(problem)) + " needs a query argument");
  }
  if (!decision && query) {
    throw std::invalid_argument(std::string(to_string(problem)) + " takes no query argument");
  }
  if (problem_ == Problem::Credulous && is_unique_status(semantics_)) problem_ = Problem::Skeptical;
}

namespace {

void require_argument(const ArgumentationFramework& af, ArgIndex a) {
  if (a >= af.size()) throw UnknownArgument("argument index " + std::to_string(a) + " not declared");
}

// A solver loaded with one encoding, remembering the in-variables of copy X.
class Engine {
 public:
  explicit Engine(enc::Cnf cnf) : cnf_(std::move(cnf)) { enc::load(solver_, cnf_); }

  sat::Solver& solver() { return solver_; }
  [[nodiscard]] std::span<const sat::Var> in_vars(std::size_t copy = enc::kCopyX) const {
    return cnf_.vars.in_vars(copy);
  }
  [[nodiscard]] Lit in(ArgIndex a, std::size_t copy = enc::kCopyX) const {
    return Lit::positive(cnf_.vars.in_var(a, copy));
  }
  [[nodiscard]] ArgSet model(std::size_t copy = enc::kCopyX) const {
    return enc::project(solver_, in_vars(copy));
  }
  std::vector<Lit> in_lits(const ArgSet& s, std::size_t copy = enc::kCopyX) const {
    std::vector<Lit> out;
    s.for_each([&](ArgIndex b) { out.push_back(in(b, copy)); });
    return out;
  }
  // (OR in_b) over all b outside `s`: some argument beyond `s` is in.
  sat::Clause outside(const ArgSet& s, std::size_t copy = enc::kCopyX) const {
    return in_lits(s.complement(), copy);
  }

 private:
  enc::Cnf cnf_;
  sat::Solver solver_;
};

bool is_admissible_set(const ArgumentationFramework& af, const ArgSet& s) {
  if (set_attacks(af, s, s)) return false;
  for (const ArgIndex a : s.members()) {
    if (!defends(af, s, a)) return false;
  }
  return true;
}

std::uint64_t count_projections(enc::Cnf cnf) {
  Engine engine(std::move(cnf));
  std::uint64_t count = 0;
  while (engine.solver().solve() == Status::Sat) {
    ++count;
    engine.solver().add_clause(enc::block_projection(engine.in_vars(), engine.model()));
  }
  return count;
}

}  // namespace

ArgSet grounded(const ArgumentationFramework& af) {
  ArgSet current(af.size());
  for (;;) {
    ArgSet next(af.size());
    for (ArgIndex a = 0; a < af.size(); ++a) {
      if (defends(af, current, a)) next.insert(a);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

ArgSet maximize_admissible(const ArgumentationFramework& af, const ArgSet& seed) {
  if (seed.universe() != af.size() || !is_admissible_set(af, seed)) {
    throw std::invalid_argument("maximize_admissible: seed is not admissible");
  }
  Engine engine(enc::encode_admissible(af));
  ArgSet current = seed;
  for (;;) {
    const sat::Clause grow = engine.outside(current);
    if (grow.empty()) return current;
    // Later rounds only strengthen this clause, so it can stay.
    engine.solver().add_clause(grow);
    if (engine.solver().solve(engine.in_lits(current)) == Status::Unsat) return current;
    current = engine.model();
  }
}

std::vector<ArgSet> preferred_extensions(const ArgumentationFramework& af) {
  Engine engine(enc::encode_admissible(af));
  std::vector<ArgSet> found;
  while (engine.solver().solve() == Status::Sat) {
    found.push_back(maximize_admissible(af, engine.model()));
    engine.solver().add_clause(engine.outside(found.back()));
  }
  return found;
}

std::optional<ArgSet> some_extension(const ArgumentationFramework& af, Semantics sigma) {
  switch (sigma) {
    case Semantics::Complete:
    case Semantics::Grounded:
      return grounded(af);
    case Semantics::Stable: {
      Engine engine(enc::encode_stable(af));
      if (engine.solver().solve() == Status::Unsat) return std::nullopt;
      return engine.model();
    }
    case Semantics::Preferred:
      return maximize_admissible(af, ArgSet(af.size()));
    case Semantics::Ideal:
      return ideal(af);
  }
  throw std::logic_error("unhandled semantics");
}

std::uint64_t count_extensions(const ArgumentationFramework& af, Semantics sigma) {
  switch (sigma) {
    case Semantics::Grounded:
    case Semantics::Ideal:
      return 1;
    case Semantics::Complete:
      return count_projections(enc::encode_complete(af));
    case Semantics::Stable:
      return count_projections(enc::encode_stable(af));
    case Semantics::Preferred:
      return preferred_extensions(af).size();
  }
  throw std::logic_error("unhandled semantics");
}

bool credulous(const ArgumentationFramework& af, Semantics sigma, ArgIndex a) {
  require_argument(af, a);
  switch (sigma) {
    case Semantics::Grounded:
      return grounded(af).contains(a);
    case Semantics::Ideal:
      return ideal(af).contains(a);
    case Semantics::Stable: {
      Engine engine(enc::encode_stable(af));
      return engine.solver().solve({engine.in(a)}) == Status::Sat;
    }
    case Semantics::Complete:
    case Semantics::Preferred: {
      // Every admissible set lies inside some preferred (hence complete) extension.
      Engine engine(enc::encode_admissible(af));
      return engine.solver().solve({engine.in(a)}) == Status::Sat;
    }
  }
  throw std::logic_error("unhandled semantics");
}

bool skeptical(const ArgumentationFramework& af, Semantics sigma, ArgIndex a) {
  require_argument(af, a);
  switch (sigma) {
    case Semantics::Complete:
    case Semantics::Grounded:
      return grounded(af).contains(a);
    case Semantics::Ideal:
      return ideal(af).contains(a);
    case Semantics::Stable: {
      Engine engine(enc::encode_stable(af));
      return engine.solver().solve({~engine.in(a)}) == Status::Unsat;
    }
    case Semantics::Preferred:
      return ds_preferred(af, a);
  }
  throw std::logic_error("unhandled semantics");
}

bool ds_preferred(const ArgumentationFramework& af, ArgIndex a, DsPreferredStats* stats) {
  require_argument(af, a);
  DsPreferredStats local;
  DsPreferredStats& st = stats != nullptr ? *stats : local;

  {
    Engine probe(enc::encode_admissible(af));
    if (probe.solver().solve({probe.in(a)}) == Status::Unsat) return false;
  }

  Engine pair(enc::encode_counterexample_pair(af, a));
  for (;;) {
    if (pair.solver().solve() == Status::Unsat) return true;
    ++st.candidates;
    ArgSet attackers_set = pair.model(enc::kCopyY);
    attackers_set.insert(a);

    Engine probe(enc::encode_admissible(af));
    if (probe.solver().solve(probe.in_lits(attackers_set)) == Status::Unsat) return false;
    const ArgSet witness = probe.model();
    pair.solver().add_clause(pair.outside(witness, enc::kCopyY));
    ++st.refinements;
  }
}

IdealTrace ideal_trace(const ArgumentationFramework& af) {
  IdealTrace trace;
  trace.credulous = ArgSet(af.size());
  {
    Engine engine(enc::encode_admissible(af));
    for (ArgIndex b = 0; b < af.size(); ++b) {
      if (trace.credulous.contains(b)) continue;
      if (engine.solver().solve({engine.in(b)}) == Status::Sat) {
        // The whole model is admissible, so all of its members are credulous.
        trace.credulous |= engine.model();
      }
    }
  }

  trace.candidates = ArgSet(af.size());
  for (ArgIndex x = 0; x < af.size(); ++x) {
    bool safe = true;
    for (const ArgIndex b : af.attackers_of(x)) safe = safe && !trace.credulous.contains(b);
    if (safe) trace.candidates.insert(x);
  }

  ArgSet current = trace.candidates;
  trace.rounds.push_back(current);
  for (;;) {
    ArgSet next(af.size());
    current.for_each([&](ArgIndex x) {
      bool attacked_inside = false;
      for (const ArgIndex b : af.attackers_of(x)) attacked_inside = attacked_inside || current.contains(b);
      if (!attacked_inside && defends(af, current, x)) next.insert(x);
    });
    if (next == current) break;
    current = std::move(next);
    trace.rounds.push_back(current);
  }
  trace.result = std::move(current);
  return trace;
}

ArgSet ideal(const ArgumentationFramework& af) { return ideal_trace(af).result; }

Answer answer(const ArgumentationFramework& af, const TaskSpec& task) {
  const Semantics sigma = task.semantics();
  switch (task.problem()) {
    case Problem::SomeExtension:
      if (auto ext = some_extension(af, sigma)) return *ext;
      return NoExtension{};
    case Problem::Count:
      return Count{count_extensions(af, sigma)};
    case Problem::Credulous:
      return Verdict{credulous(af, sigma, *task.query())};
    case Problem::Skeptical:
      return Verdict{skeptical(af, sigma, *task.query())};
  }
  throw std::logic_error("unhandled problem");
}

}  // namespace argsat

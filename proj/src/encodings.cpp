#include "argsat/encodings.hpp"

#include <stdexcept>

namespace argsat::enc {

using sat::Lit;

std::size_t VarMap::add_copy(std::size_t num_args) {
  if (!aux_.empty()) throw std::logic_error("in-variable copies must precede auxiliaries");
  std::vector<sat::Var> vars(num_args);
  for (auto& v : vars) v = static_cast<sat::Var>(++num_vars_);
  copies_.push_back(std::move(vars));
  return copies_.size() - 1;
}

sat::Var VarMap::add_aux(std::string label) {
  const auto v = static_cast<sat::Var>(++num_vars_);
  aux_.push_back({std::move(label), v});
  return v;
}

sat::Var VarMap::in_var(ArgIndex a, std::size_t copy) const { return copies_.at(copy).at(a); }

std::span<const sat::Var> VarMap::in_vars(std::size_t copy) const { return copies_.at(copy); }

namespace {

Lit in(const VarMap& m, ArgIndex a, std::size_t copy = kCopyX) {
  return Lit::positive(m.in_var(a, copy));
}

void add_conflict_free(const ArgumentationFramework& af, std::size_t copy, Cnf& cnf) {
  for (const Attack& att : af.attacks()) {
    if (att.attacker == att.target) {
      cnf.clauses.push_back({~in(cnf.vars, att.attacker, copy)});
    } else {
      cnf.clauses.push_back({~in(cnf.vars, att.attacker, copy), ~in(cnf.vars, att.target, copy)});
    }
  }
}

void add_defense(const ArgumentationFramework& af, std::size_t copy, Cnf& cnf) {
  for (const Attack& att : af.attacks()) {
    sat::Clause clause{~in(cnf.vars, att.target, copy)};
    for (const ArgIndex c : af.attackers_of(att.attacker)) {
      clause.push_back(in(cnf.vars, c, copy));
    }
    // Self-defense against a self-attacker yields a tautology; skip it.
    if (auto norm = sat::normalize(clause)) cnf.clauses.push_back(std::move(clause));
  }
}

Cnf with_copies(const ArgumentationFramework& af, std::size_t copies) {
  Cnf cnf;
  for (std::size_t i = 0; i < copies; ++i) cnf.vars.add_copy(af.size());
  return cnf;
}

}  // namespace

Cnf encode_conflict_free(const ArgumentationFramework& af) {
  Cnf cnf = with_copies(af, 1);
  add_conflict_free(af, kCopyX, cnf);
  return cnf;
}

Cnf encode_stable(const ArgumentationFramework& af) {
  Cnf cnf = encode_conflict_free(af);
  for (ArgIndex a = 0; a < af.size(); ++a) {
    sat::Clause clause{in(cnf.vars, a)};
    for (const ArgIndex b : af.attackers_of(a)) {
      if (b != a) clause.push_back(in(cnf.vars, b));
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

Cnf encode_admissible(const ArgumentationFramework& af) {
  Cnf cnf = encode_conflict_free(af);
  add_defense(af, kCopyX, cnf);
  return cnf;
}

Cnf encode_complete(const ArgumentationFramework& af) {
  Cnf cnf = encode_admissible(af);
  std::vector<sat::Var> defeated(af.size(), 0);
  for (ArgIndex b = 0; b < af.size(); ++b) {
    if (af.attacked_by(b).empty()) continue;
    defeated[b] = cnf.vars.add_aux("att(" + af.name(b) + ")");
    const Lit att = Lit::positive(defeated[b]);
    sat::Clause some_attacker_in{~att};
    for (const ArgIndex c : af.attackers_of(b)) {
      some_attacker_in.push_back(in(cnf.vars, c));
      cnf.clauses.push_back({att, ~in(cnf.vars, c)});
    }
    cnf.clauses.push_back(std::move(some_attacker_in));
  }
  for (ArgIndex a = 0; a < af.size(); ++a) {
    sat::Clause clause{in(cnf.vars, a)};
    for (const ArgIndex b : af.attackers_of(a)) clause.push_back(~Lit::positive(defeated[b]));
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

Cnf encode_counterexample_pair(const ArgumentationFramework& af, ArgIndex a) {
  if (a >= af.size()) throw UnknownArgument("argument index " + std::to_string(a) + " not declared");
  Cnf cnf = with_copies(af, 2);
  add_conflict_free(af, kCopyX, cnf);
  add_defense(af, kCopyX, cnf);
  cnf.clauses.push_back({in(cnf.vars, a, kCopyX)});
  add_conflict_free(af, kCopyY, cnf);
  add_defense(af, kCopyY, cnf);

  sat::Clause some_selector;
  for (const Attack& att : af.attacks()) {
    const sat::Var sel =
        cnf.vars.add_aux("sel(" + af.name(att.attacker) + "," + af.name(att.target) + ")");
    cnf.clauses.push_back({~Lit::positive(sel), in(cnf.vars, att.attacker, kCopyY)});
    cnf.clauses.push_back({~Lit::positive(sel), in(cnf.vars, att.target, kCopyX)});
    some_selector.push_back(Lit::positive(sel));
  }
  cnf.clauses.push_back(std::move(some_selector));
  return cnf;
}

void load(sat::Solver& solver, const Cnf& cnf) {
  if (solver.num_vars() != 0) throw std::logic_error("load() expects a fresh solver");
  for (std::size_t i = 0; i < cnf.vars.num_vars(); ++i) solver.new_var();
  for (const auto& clause : cnf.clauses) solver.add_clause(clause);
}

ArgSet project(const sat::Solver& solver, std::span<const sat::Var> in_vars) {
  ArgSet s(in_vars.size());
  for (std::size_t i = 0; i < in_vars.size(); ++i) {
    if (solver.value(in_vars[i])) s.insert(static_cast<ArgIndex>(i));
  }
  return s;
}

sat::Clause block_projection(std::span<const sat::Var> in_vars, const ArgSet& s) {
  sat::Clause clause;
  clause.reserve(in_vars.size());
  for (std::size_t i = 0; i < in_vars.size(); ++i) {
    const Lit l = Lit::positive(in_vars[i]);
    clause.push_back(s.contains(static_cast<ArgIndex>(i)) ? ~l : l);
  }
  return clause;
}

void write_dimacs(std::ostream& out, const Cnf& cnf) {
  sat::write_dimacs(out, cnf.vars.num_vars(), cnf.clauses);
}

}  // namespace argsat::enc

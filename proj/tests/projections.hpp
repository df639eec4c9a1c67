#pragma once

#include <algorithm>
#include <vector>

#include "argsat/encodings.hpp"

namespace argsat::testing {

/// In-variable projections of all models, canonically ordered.
inline std::vector<ArgSet> projections(const enc::Cnf& cnf) {
  sat::Solver s;
  enc::load(s, cnf);
  std::vector<ArgSet> out;
  while (s.solve() == sat::Status::Sat) {
    out.push_back(enc::project(s, cnf.vars.in_vars()));
    s.add_clause(enc::block_projection(cnf.vars.in_vars(), out.back()));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Number of total models, blocking on every variable.
inline std::size_t total_models(const enc::Cnf& cnf) {
  sat::Solver s;
  enc::load(s, cnf);
  std::size_t count = 0;
  while (s.solve() == sat::Status::Sat) {
    ++count;
    sat::Clause block;
    for (sat::Var v = 1; v <= cnf.vars.num_vars(); ++v) {
      block.push_back(s.value(v) ? sat::Lit::negative(v) : sat::Lit::positive(v));
    }
    s.add_clause(block);
  }
  return count;
}

}  // namespace argsat::testing

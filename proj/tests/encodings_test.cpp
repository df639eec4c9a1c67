#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "argsat/encodings.hpp"
#include "argsat/oracle.hpp"
#include "projections.hpp"
#include "support.hpp"

using namespace argsat;
using argsat::testing::projections;
using argsat::testing::set_of;
using argsat::testing::total_models;
using sat::Lit;
using sat::Status;

namespace {

Lit in(const enc::Cnf& cnf, ArgIndex a, std::size_t copy = enc::kCopyX) {
  return Lit::positive(cnf.vars.in_var(a, copy));
}

std::vector<ArgSet> family(const ArgumentationFramework& af, Semantics sigma) {
  return oracle::enumerate(af, sigma).extensions;
}

bool contains_clause(const enc::Cnf& cnf, sat::Clause c) {
  auto key = *sat::normalize(std::move(c));
  return std::any_of(cnf.clauses.begin(), cnf.clauses.end(),
                     [&](const sat::Clause& d) { return *sat::normalize(d) == key; });
}

}  // namespace

TEST_CASE("conflict-free clauses") {
  const auto af = argsat::testing::make_af({"a", "b"}, {{"a", "b"}});
  const auto cnf = enc::encode_conflict_free(af);
  CHECK(cnf.clauses == std::vector<sat::Clause>{{~in(cnf, 0), ~in(cnf, 1)}});

  const auto none = argsat::testing::make_af({"a", "b"}, {});
  CHECK(enc::encode_conflict_free(none).clauses.empty());

  const auto self = argsat::testing::make_af({"a"}, {{"a", "a"}});
  const auto self_cnf = enc::encode_conflict_free(self);
  CHECK(self_cnf.clauses == std::vector<sat::Clause>{{~in(self_cnf, 0)}});
}

TEST_CASE("stable clauses on a chain") {
  const auto af = argsat::testing::af1();
  const auto cnf = enc::encode_stable(af);
  const Lit a = in(cnf, 0), b = in(cnf, 1), c = in(cnf, 2);
  const std::vector<sat::Clause> expected{{~a, ~b}, {~b, ~c}, {a}, {b, a}, {c, b}};
  CHECK(cnf.clauses == expected);
  CHECK(projections(cnf) == std::vector<ArgSet>{set_of(af, {"a", "c"})});
  CHECK(projections(enc::encode_stable(argsat::testing::af3())).empty());
}

TEST_CASE("admissible encoding") {
  const auto af2 = argsat::testing::af2();
  CHECK(projections(enc::encode_admissible(af2)) ==
        std::vector<ArgSet>{ArgSet(2), set_of(af2, {"a"}), set_of(af2, {"b"})});

  // {b} violates the defense clause for attack (a, b): a has no attackers.
  const auto af1 = argsat::testing::af1();
  const auto cnf = enc::encode_admissible(af1);
  CHECK(contains_clause(cnf, {~in(cnf, 1)}));
  sat::Solver s;
  enc::load(s, cnf);
  CHECK(s.solve({in(cnf, 1)}) == Status::Unsat);
  CHECK(s.solve({~in(cnf, 0), ~in(cnf, 1), ~in(cnf, 2)}) == Status::Sat);
}

TEST_CASE("complete encoding") {
  const auto af2 = argsat::testing::af2();
  CHECK(projections(enc::encode_complete(af2)).size() == 3);
  CHECK(projections(enc::encode_complete(argsat::testing::af3())) == std::vector<ArgSet>{ArgSet(3)});

  const auto lone = argsat::testing::make_af({"a"}, {});
  const auto cnf = enc::encode_complete(lone);
  CHECK(cnf.vars.aux().empty());
  CHECK(cnf.clauses == std::vector<sat::Clause>{{in(cnf, 0)}});
}

TEST_CASE("variable layout") {
  const auto af = argsat::testing::af4();
  const auto complete = enc::encode_complete(af);
  CHECK(complete.vars.in_var(0) == 1);
  CHECK(complete.vars.in_var(3) == 4);
  // att-auxes for b, c, d in argument order (a attacks nothing).
  REQUIRE(complete.vars.aux().size() == 3);
  CHECK(complete.vars.aux()[0].label == "att(b)");
  CHECK(complete.vars.aux()[0].var == 5);
  CHECK(complete.vars.aux()[2].label == "att(d)");

  const auto pair = enc::encode_counterexample_pair(af, 0);
  CHECK(pair.vars.in_var(0, enc::kCopyY) == 5);
  REQUIRE(pair.vars.aux().size() == af.attacks().size());
  CHECK(pair.vars.aux()[0].label == "sel(b,c)");
  CHECK(pair.vars.aux()[0].var == 9);
}

TEST_CASE("counterexample pair encoding") {
  SUBCASE("AF4: models are coupled admissible pairs") {
    const auto af = argsat::testing::af4();
    const auto cnf = enc::encode_counterexample_pair(af, af.index_of("a"));
    sat::Solver s;
    enc::load(s, cnf);
    REQUIRE(s.solve() == Status::Sat);
    const auto x = enc::project(s, cnf.vars.in_vars(enc::kCopyX));
    const auto y = enc::project(s, cnf.vars.in_vars(enc::kCopyY));
    CHECK(x.contains(af.index_of("a")));
    CHECK(oracle::is_admissible(af, x));
    CHECK(oracle::is_admissible(af, y));
    CHECK(set_attacks(af, y, x));
    // The pair ({a,b}, {c}) is one such model.
    CHECK(s.solve({in(cnf, 0), in(cnf, 1), ~in(cnf, 2), in(cnf, 2, enc::kCopyY)}) == Status::Sat);
  }
  SUBCASE("unattacked argument") {
    const auto af = argsat::testing::make_af({"a"}, {});
    sat::Solver s;
    enc::load(s, enc::encode_counterexample_pair(af, 0));
    CHECK(s.solve() == Status::Unsat);
  }
  SUBCASE("mutual attack") {
    const auto af = argsat::testing::af2();
    const auto cnf = enc::encode_counterexample_pair(af, 0);
    sat::Solver s;
    enc::load(s, cnf);
    REQUIRE(s.solve() == Status::Sat);
    CHECK(enc::project(s, cnf.vars.in_vars(enc::kCopyX)) == set_of(af, {"a"}));
    CHECK(enc::project(s, cnf.vars.in_vars(enc::kCopyY)) == set_of(af, {"b"}));
    CHECK(s.value(cnf.vars.aux()[1].var));  // selector of (b, a)
  }
  CHECK_THROWS_AS((void)enc::encode_counterexample_pair(argsat::testing::af2(), 5), UnknownArgument);
}

TEST_CASE("projections match oracle families on every 3-argument framework") {
  for (const auto& af : argsat::testing::exhaustive_three()) {
    CHECK(projections(enc::encode_conflict_free(af)) ==
          [&] {
            std::vector<ArgSet> cf;
            for (std::uint64_t m = 0; m < 8; ++m) {
              const auto s = ArgSet::from_mask(3, m);
              if (oracle::is_conflict_free(af, s)) cf.push_back(s);
            }
            std::sort(cf.begin(), cf.end(), canonical_less);
            return cf;
          }());
    CHECK(projections(enc::encode_stable(af)) == family(af, Semantics::Stable));
    CHECK(projections(enc::encode_admissible(af)) == oracle::admissible_sets(af));
    const auto complete = enc::encode_complete(af);
    const auto co = projections(complete);
    CHECK(co == family(af, Semantics::Complete));
    CHECK(total_models(complete) == co.size());
  }
}

TEST_CASE("conflict-free clauses are part of the stable and admissible encodings") {
  for (const auto& af : argsat::testing::random_corpus(4, 40, 2, 8, 0.3)) {
    const auto cf = enc::encode_conflict_free(af);
    const auto st = enc::encode_stable(af);
    const auto adm = enc::encode_admissible(af);
    for (const auto& c : cf.clauses) {
      CHECK(contains_clause(st, c));
      CHECK(contains_clause(adm, c));
    }
  }
}

TEST_CASE("pair encoding is unsat when the argument is in no admissible set") {
  for (const auto& af : argsat::testing::exhaustive_three()) {
    for (ArgIndex a = 0; a < 3; ++a) {
      const auto adm = oracle::admissible_sets(af);
      const bool credulous =
          std::any_of(adm.begin(), adm.end(), [&](const ArgSet& s) { return s.contains(a); });
      if (credulous) continue;
      sat::Solver s;
      enc::load(s, enc::encode_counterexample_pair(af, a));
      CHECK(s.solve() == Status::Unsat);
    }
  }
}

TEST_CASE("dimacs of an encoding") {
  std::ostringstream out;
  enc::write_dimacs(out, enc::encode_stable(argsat::testing::af1()));
  CHECK(out.str() == "p cnf 3 5\n-1 -2 0\n-2 -3 0\n1 0\n2 1 0\n3 2 0\n");
}

#include <doctest.h>

#include "argsat/oracle.hpp"
#include "support.hpp"

using namespace argsat;
using argsat::testing::set_of;

TEST_CASE("conflict-freeness and admissibility") {
  const auto af1 = argsat::testing::af1();
  CHECK(oracle::is_conflict_free(af1, set_of(af1, {"a", "c"})));
  CHECK(oracle::is_conflict_free(af1, ArgSet(3)));
  const auto self = argsat::testing::make_af({"a"}, {{"a", "a"}});
  CHECK_FALSE(oracle::is_conflict_free(self, ArgSet(1, {0})));

  const auto af2 = argsat::testing::af2();
  CHECK(oracle::is_admissible(af2, set_of(af2, {"a"})));
  CHECK_FALSE(oracle::is_admissible(af1, set_of(af1, {"c"})));
  CHECK(oracle::is_admissible(af1, ArgSet(3)));
}

TEST_CASE("enumerate on the named frameworks") {
  const auto af2 = argsat::testing::af2();
  CHECK(oracle::enumerate(af2, Semantics::Complete).extensions ==
        std::vector<ArgSet>{ArgSet(2), set_of(af2, {"a"}), set_of(af2, {"b"})});
  CHECK(oracle::enumerate(argsat::testing::af3(), Semantics::Stable).extensions.empty());

  const auto af4 = argsat::testing::af4();
  CHECK(oracle::enumerate(af4, Semantics::Preferred).extensions ==
        std::vector<ArgSet>{set_of(af4, {"a", "b"}), set_of(af4, {"a", "c"})});
  CHECK(oracle::enumerate(af4, Semantics::Ideal).extensions == std::vector<ArgSet>{ArgSet(4)});
  CHECK(oracle::enumerate(af4, Semantics::Grounded).extensions == std::vector<ArgSet>{ArgSet(4)});

  const auto af1 = argsat::testing::af1();
  for (const Semantics s : kAllSemantics) {
    CHECK(oracle::enumerate(af1, s).extensions == std::vector<ArgSet>{set_of(af1, {"a", "c"})});
  }
}

TEST_CASE("empty framework has the empty extension under every semantics") {
  const ArgumentationFramework empty;
  for (const Semantics s : kAllSemantics) {
    CHECK(oracle::enumerate(empty, s).extensions == std::vector<ArgSet>{ArgSet(0)});
  }
}

TEST_CASE("acceptance over families") {
  const auto af4 = argsat::testing::af4();
  const auto pr = oracle::enumerate(af4, Semantics::Preferred);
  CHECK(oracle::skeptically_accepted(pr, 0));
  CHECK(oracle::credulously_accepted(pr, 1));
  CHECK_FALSE(oracle::skeptically_accepted(pr, 1));
  const auto st = oracle::enumerate(argsat::testing::af3(), Semantics::Stable);
  CHECK(oracle::skeptically_accepted(st, 0));
  CHECK_FALSE(oracle::credulously_accepted(st, 0));
}

TEST_CASE("enumeration guard") {
  std::mt19937_64 rng(1);
  const auto big = argsat::testing::random_af(rng, oracle::kMaxArguments + 1, 0.1);
  CHECK_THROWS_AS((void)oracle::enumerate(big, Semantics::Complete), std::length_error);
}

TEST_CASE("family invariants") {
  auto corpus = argsat::testing::exhaustive_three();
  for (auto& af : argsat::testing::random_corpus(99, 60, 4, 7, 0.25)) corpus.push_back(std::move(af));

  for (const auto& af : corpus) {
    const auto co = oracle::enumerate(af, Semantics::Complete).extensions;
    const auto gr = oracle::enumerate(af, Semantics::Grounded).extensions;
    const auto st = oracle::enumerate(af, Semantics::Stable).extensions;
    const auto pr = oracle::enumerate(af, Semantics::Preferred).extensions;
    const auto id = oracle::enumerate(af, Semantics::Ideal).extensions;
    REQUIRE(gr.size() == 1);
    REQUIRE(id.size() == 1);

    auto in = [](const std::vector<ArgSet>& fam, const ArgSet& s) {
      return std::find(fam.begin(), fam.end(), s) != fam.end();
    };
    CHECK(in(co, gr[0]));
    for (const auto& e : st) CHECK(in(pr, e));
    for (const auto& e : pr) CHECK(in(co, e));
    for (const auto& e : pr) {
      for (const auto& f : pr) CHECK((e == f || !e.is_subset_of(f)));
    }

    CHECK(oracle::is_admissible(af, id[0]));
    for (const auto& e : pr) CHECK(id[0].is_subset_of(e));
    for (const auto& s : oracle::admissible_sets(af)) {
      const bool in_all = std::all_of(pr.begin(), pr.end(), [&](const ArgSet& e) { return s.is_subset_of(e); });
      if (in_all) CHECK(s.is_subset_of(id[0]));
    }

    const auto again = oracle::enumerate(af, Semantics::Preferred).extensions;
    CHECK(again == pr);
    CHECK(std::is_sorted(co.begin(), co.end(), canonical_less));
  }
}

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "argsat/af.hpp"

namespace argsat::testing {

inline ArgumentationFramework make_af(std::vector<std::string> names,
                                      const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<Attack> attacks;
  auto index = [&](const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == n) return static_cast<ArgIndex>(i);
    }
    throw std::invalid_argument("fixture: unknown " + n);
  };
  for (const auto& [from, to] : edges) attacks.push_back({index(from), index(to)});
  return {std::move(names), attacks};
}

// a -> b -> c
inline ArgumentationFramework af1() { return make_af({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
// a <-> b
inline ArgumentationFramework af2() { return make_af({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }
// a -> b -> c -> a
inline ArgumentationFramework af3() {
  return make_af({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}
// b <-> c, b -> d, c -> d, d -> a
inline ArgumentationFramework af4() {
  return make_af({"a", "b", "c", "d"}, {{"b", "c"}, {"c", "b"}, {"b", "d"}, {"c", "d"}, {"d", "a"}});
}

inline ArgSet set_of(const ArgumentationFramework& af, const std::vector<std::string>& names) {
  ArgSet s(af.size());
  for (const auto& n : names) s.insert(af.index_of(n));
  return s;
}

/// Framework on `n` arguments a0.. (or a, b, c for n <= 3) whose attack
/// relation is bit i*n+j of `mask` for the pair (i, j).
inline ArgumentationFramework from_relation_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 3 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  }
  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> (i * n + j)) & 1U) attacks.push_back({static_cast<ArgIndex>(i), static_cast<ArgIndex>(j)});
    }
  }
  return {std::move(names), attacks};
}

/// All 512 attack relations (self-attacks included) over three arguments.
inline std::vector<ArgumentationFramework> exhaustive_three() {
  std::vector<ArgumentationFramework> out;
  for (std::uint64_t mask = 0; mask < 512; ++mask) out.push_back(from_relation_mask(3, mask));
  return out;
}

inline ArgumentationFramework random_af(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (edge(rng)) attacks.push_back({static_cast<ArgIndex>(i), static_cast<ArgIndex>(j)});
    }
  }
  return {std::move(names), attacks};
}

/// `count` frameworks with |A| uniform in [min_args, max_args].
inline std::vector<ArgumentationFramework> random_corpus(std::uint64_t seed, std::size_t count,
                                                         std::size_t min_args, std::size_t max_args,
                                                         double p) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(min_args, max_args);
  std::vector<ArgumentationFramework> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_af(rng, size(rng), p));
  return out;
}

}  // namespace argsat::testing

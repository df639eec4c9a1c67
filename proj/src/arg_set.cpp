#include "argsat/arg_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace argsat {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

void require_same_universe(const ArgSet& a, const ArgSet& b) {
  if (a.universe() != b.universe()) {
    throw std::invalid_argument("ArgSet universes differ: " + std::to_string(a.universe()) +
                                " vs " + std::to_string(b.universe()));
  }
}

}  // namespace

ArgSet::ArgSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

ArgSet::ArgSet(std::size_t universe, std::initializer_list<ArgIndex> members) : ArgSet(universe) {
  for (const ArgIndex a : members) insert(a);
}

ArgSet ArgSet::full(std::size_t universe) {
  ArgSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (const std::size_t tail = universe % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

ArgSet ArgSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("from_mask needs universe <= 64");
  if (universe < 64 && (mask >> universe) != 0) {
    throw std::invalid_argument("mask has bits outside the universe");
  }
  ArgSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

std::size_t ArgSet::size() const {
  std::size_t n = 0;
  for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ArgSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void ArgSet::check(ArgIndex a) const {
  if (a >= universe_) {
    throw std::out_of_range("argument index " + std::to_string(a) + " outside universe of size " +
                            std::to_string(universe_));
  }
}

bool ArgSet::contains(ArgIndex a) const {
  check(a);
  return (words_[a / 64] >> (a % 64)) & 1U;
}

void ArgSet::insert(ArgIndex a) {
  check(a);
  words_[a / 64] |= std::uint64_t{1} << (a % 64);
}

void ArgSet::erase(ArgIndex a) {
  check(a);
  words_[a / 64] &= ~(std::uint64_t{1} << (a % 64));
}

std::vector<ArgIndex> ArgSet::members() const {
  std::vector<ArgIndex> out;
  out.reserve(size());
  for_each([&](ArgIndex a) { out.push_back(a); });
  return out;
}

bool ArgSet::is_subset_of(const ArgSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ArgSet ArgSet::complement() const {
  ArgSet out = full(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

ArgSet& ArgSet::operator|=(const ArgSet& other) {
  require_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ArgSet& ArgSet::operator&=(const ArgSet& other) {
  require_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

bool canonical_less(const ArgSet& lhs, const ArgSet& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  const auto l = lhs.members();
  const auto r = rhs.members();
  return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end());
}

}  // namespace argsat

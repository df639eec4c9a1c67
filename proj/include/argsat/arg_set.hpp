#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace argsat {

/// Dense 0-based index of an argument inside one framework.
using ArgIndex = std::uint32_t;

/// A subset of the arguments of a framework with `universe()` arguments,
/// stored as a bitset.
class ArgSet {
 public:
  ArgSet() = default;
  explicit ArgSet(std::size_t universe);
  ArgSet(std::size_t universe, std::initializer_list<ArgIndex> members);

  static ArgSet full(std::size_t universe);
  /// Bit i of `mask` selects argument i. Requires universe <= 64.
  static ArgSet from_mask(std::size_t universe, std::uint64_t mask);

  [[nodiscard]] std::size_t universe() const { return universe_; }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool empty() const;
  [[nodiscard]] bool contains(ArgIndex a) const;

  void insert(ArgIndex a);
  void erase(ArgIndex a);

  /// Members in increasing index order.
  [[nodiscard]] std::vector<ArgIndex> members() const;

  [[nodiscard]] bool is_subset_of(const ArgSet& other) const;
  [[nodiscard]] ArgSet complement() const;

  ArgSet& operator|=(const ArgSet& other);
  ArgSet& operator&=(const ArgSet& other);
  friend ArgSet operator|(ArgSet lhs, const ArgSet& rhs) { return lhs |= rhs; }
  friend ArgSet operator&(ArgSet lhs, const ArgSet& rhs) { return lhs &= rhs; }

  friend bool operator==(const ArgSet&, const ArgSet&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<ArgIndex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check(ArgIndex a) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order on sets: by cardinality, then lexicographically by the
/// increasing member sequence.
bool canonical_less(const ArgSet& lhs, const ArgSet& rhs);

}  // namespace argsat

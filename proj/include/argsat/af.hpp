#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "argsat/arg_set.hpp"

namespace argsat {

struct Attack {
  ArgIndex attacker;
  ArgIndex target;
  friend bool operator==(const Attack&, const Attack&) = default;
};

enum class Format { Tgf, Apx };

std::optional<Format> parse_format(std::string_view name);
std::string_view to_string(Format format);

/// Input text could not be read as a framework. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argumentation framework: arguments in declaration order and a
/// duplicate-free attack relation with both adjacency directions.
/// Immutable after construction.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;

  /// Throws std::invalid_argument on duplicate or malformed names and on
  /// attack endpoints outside the argument range. Duplicate attacks are
  /// dropped, keeping first-appearance order.
  ArgumentationFramework(std::vector<std::string> names, std::span<const Attack> attacks);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] bool empty() const { return names_.empty(); }

  [[nodiscard]] const std::string& name(ArgIndex a) const;
  [[nodiscard]] std::span<const std::string> names() const { return names_; }
  [[nodiscard]] std::optional<ArgIndex> find(std::string_view name) const;
  /// Like find(), but throws UnknownArgument.
  [[nodiscard]] ArgIndex index_of(std::string_view name) const;

  [[nodiscard]] std::span<const Attack> attacks() const { return attacks_; }
  [[nodiscard]] std::span<const ArgIndex> attackers_of(ArgIndex a) const;
  [[nodiscard]] std::span<const ArgIndex> attacked_by(ArgIndex a) const;
  [[nodiscard]] bool has_attack(ArgIndex attacker, ArgIndex target) const;

  friend bool operator==(const ArgumentationFramework& lhs, const ArgumentationFramework& rhs) {
    return lhs.names_ == rhs.names_ && lhs.attacks_ == rhs.attacks_;
  }

 private:
  void check(ArgIndex a) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgIndex> index_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<ArgIndex>> attackers_;
  std::vector<std::vector<ArgIndex>> targets_;
};

bool is_valid_argument_name(std::string_view name);

ArgumentationFramework parse(std::string_view text, Format format);
std::string serialize(const ArgumentationFramework& af, Format format);

/// {b | (b, a) in R}. Throws UnknownArgument.
ArgSet attackers(const ArgumentationFramework& af, ArgIndex a);
/// S+ : every argument attacked by some member of `s`.
ArgSet attacked_by_set(const ArgumentationFramework& af, const ArgSet& s);
/// True iff some member of `s` attacks some member of `t`.
bool set_attacks(const ArgumentationFramework& af, const ArgSet& s, const ArgSet& t);
/// True iff every attacker of `a` is attacked by a member of `s`.
bool defends(const ArgumentationFramework& af, const ArgSet& s, ArgIndex a);

}  // namespace argsat

#include "argsat/af.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

namespace argsat {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "tgf") return Format::Tgf;
  if (name == "apx") return Format::Apx;
  return std::nullopt;
}

std::string_view to_string(Format format) { return format == Format::Tgf ? "tgf" : "apx"; }

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

bool is_valid_argument_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
  });
}

ArgumentationFramework::ArgumentationFramework(std::vector<std::string> names,
                                               std::span<const Attack> attacks)
    : names_(std::move(names)), attackers_(names_.size()), targets_(names_.size()) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_argument_name(names_[i])) {
      throw std::invalid_argument("invalid argument name '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], static_cast<ArgIndex>(i)).second) {
      throw std::invalid_argument("duplicate argument '" + names_[i] + "'");
    }
  }
  std::set<std::pair<ArgIndex, ArgIndex>> seen;
  for (const Attack& att : attacks) {
    check(att.attacker);
    check(att.target);
    if (!seen.emplace(att.attacker, att.target).second) continue;
    attacks_.push_back(att);
    attackers_[att.target].push_back(att.attacker);
    targets_[att.attacker].push_back(att.target);
  }
}

void ArgumentationFramework::check(ArgIndex a) const {
  if (a >= names_.size()) {
    throw UnknownArgument("argument index " + std::to_string(a) + " not declared");
  }
}

const std::string& ArgumentationFramework::name(ArgIndex a) const {
  check(a);
  return names_[a];
}

std::optional<ArgIndex> ArgumentationFramework::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArgIndex ArgumentationFramework::index_of(std::string_view name) const {
  if (auto idx = find(name)) return *idx;
  throw UnknownArgument("unknown argument " + std::string(name));
}

std::span<const ArgIndex> ArgumentationFramework::attackers_of(ArgIndex a) const {
  check(a);
  return attackers_[a];
}

std::span<const ArgIndex> ArgumentationFramework::attacked_by(ArgIndex a) const {
  check(a);
  return targets_[a];
}

bool ArgumentationFramework::has_attack(ArgIndex attacker, ArgIndex target) const {
  const auto& out = targets_.at(attacker);
  return std::find(out.begin(), out.end(), target) != out.end();
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Accumulates declarations and attacks by name, reporting errors by line.
class Builder {
 public:
  void declare(std::string_view name, std::size_t line) {
    if (!is_valid_argument_name(name)) {
      throw ParseError(line, "invalid argument name '" + std::string(name) + "'");
    }
    if (!index_.emplace(std::string(name), static_cast<ArgIndex>(names_.size())).second) {
      throw ParseError(line, "duplicate argument declaration " + std::string(name));
    }
    names_.emplace_back(name);
  }

  void attack(std::string_view from, std::string_view to, std::size_t line) {
    pending_.push_back({std::string(from), std::string(to), line});
  }

  ArgumentationFramework build() && {
    std::vector<Attack> attacks;
    attacks.reserve(pending_.size());
    for (const auto& p : pending_) attacks.push_back({lookup(p.from, p.line), lookup(p.to, p.line)});
    return {std::move(names_), attacks};
  }

 private:
  struct Pending {
    std::string from;
    std::string to;
    std::size_t line;
  };

  ArgIndex lookup(const std::string& name, std::size_t line) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw ParseError(line, "undeclared argument " + name);
    return it->second;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgIndex> index_;
  std::vector<Pending> pending_;
};

ArgumentationFramework parse_tgf(std::string_view text) {
  Builder builder;
  bool in_attacks = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto toks = tokens(lines[i]);
    if (toks.empty()) continue;
    if (!in_attacks) {
      if (toks.size() == 1 && toks[0] == "#") {
        in_attacks = true;
      } else if (toks.size() == 1) {
        builder.declare(toks[0], lineno);
      } else {
        throw ParseError(lineno, "malformed argument line (labels are not supported)");
      }
    } else {
      if (toks.size() != 2) throw ParseError(lineno, "malformed attack line, expected 'src tgt'");
      builder.attack(toks[0], toks[1], lineno);
    }
  }
  return std::move(builder).build();
}

ArgumentationFramework parse_apx(std::string_view text) {
  static const std::regex arg_re(R"(^\s*arg\s*\(\s*([A-Za-z0-9_]+)\s*\)\s*\.\s*$)");
  static const std::regex att_re(
      R"(^\s*att\s*\(\s*([A-Za-z0-9_]+)\s*,\s*([A-Za-z0-9_]+)\s*\)\s*\.\s*$)");
  Builder builder;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const std::string line(lines[i]);
    if (tokens(line).empty()) continue;
    std::smatch m;
    if (std::regex_match(line, m, arg_re)) {
      builder.declare(m[1].str(), lineno);
    } else if (std::regex_match(line, m, att_re)) {
      builder.attack(m[1].str(), m[2].str(), lineno);
    } else {
      throw ParseError(lineno, "malformed line, expected arg(x). or att(x,y).");
    }
  }
  return std::move(builder).build();
}

}  // namespace

ArgumentationFramework parse(std::string_view text, Format format) {
  return format == Format::Tgf ? parse_tgf(text) : parse_apx(text);
}

std::string serialize(const ArgumentationFramework& af, Format format) {
  std::ostringstream out;
  if (format == Format::Tgf) {
    for (const auto& n : af.names()) out << n << '\n';
    out << "#\n";
    for (const auto& att : af.attacks()) {
      out << af.name(att.attacker) << ' ' << af.name(att.target) << '\n';
    }
  } else {
    for (const auto& n : af.names()) out << "arg(" << n << ").\n";
    for (const auto& att : af.attacks()) {
      out << "att(" << af.name(att.attacker) << ',' << af.name(att.target) << ").\n";
    }
  }
  return out.str();
}

ArgSet attackers(const ArgumentationFramework& af, ArgIndex a) {
  ArgSet out(af.size());
  for (const ArgIndex b : af.attackers_of(a)) out.insert(b);
  return out;
}

ArgSet attacked_by_set(const ArgumentationFramework& af, const ArgSet& s) {
  ArgSet out(af.size());
  s.for_each([&](ArgIndex a) {
    for (const ArgIndex t : af.attacked_by(a)) out.insert(t);
  });
  return out;
}

bool set_attacks(const ArgumentationFramework& af, const ArgSet& s, const ArgSet& t) {
  return std::any_of(af.attacks().begin(), af.attacks().end(), [&](const Attack& att) {
    return s.contains(att.attacker) && t.contains(att.target);
  });
}

bool defends(const ArgumentationFramework& af, const ArgSet& s, ArgIndex a) {
  for (const ArgIndex b : af.attackers_of(a)) {
    const auto counters = af.attackers_of(b);
    if (std::none_of(counters.begin(), counters.end(), [&](ArgIndex c) { return s.contains(c); })) {
      return false;
    }
  }
  return true;
}

}  // namespace argsat

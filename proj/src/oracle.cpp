#include "argsat/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace argsat::oracle {

namespace {

bool attacks_member(const ArgumentationFramework& af, const ArgSet& s, ArgIndex target) {
  for (const Attack& att : af.attacks()) {
    if (att.target == target && s.contains(att.attacker)) return true;
  }
  return false;
}

// Every attacker of `a` is attacked from within `s`.
bool defended_by(const ArgumentationFramework& af, const ArgSet& s, ArgIndex a) {
  for (const Attack& att : af.attacks()) {
    if (att.target == a && !attacks_member(af, s, att.attacker)) return false;
  }
  return true;
}

std::vector<ArgSet> all_subsets(const ArgumentationFramework& af) {
  if (af.size() > kMaxArguments) {
    throw std::length_error("oracle enumeration limited to " + std::to_string(kMaxArguments) +
                            " arguments, got " + std::to_string(af.size()));
  }
  std::vector<ArgSet> out;
  const std::uint64_t count = std::uint64_t{1} << af.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(ArgSet::from_mask(af.size(), mask));
  return out;
}

std::vector<ArgSet> filter(std::vector<ArgSet> sets, auto pred) {
  std::erase_if(sets, [&](const ArgSet& s) { return !pred(s); });
  std::sort(sets.begin(), sets.end(), canonical_less);
  return sets;
}

std::vector<ArgSet> maximal(const std::vector<ArgSet>& sets) {
  return filter(sets, [&](const ArgSet& s) {
    return std::none_of(sets.begin(), sets.end(),
                        [&](const ArgSet& t) { return s != t && s.is_subset_of(t); });
  });
}

// The unique member that is a superset (or subset, when `greatest` is false)
// of every other member; throws if there is none.
ArgSet unique_extreme(const std::vector<ArgSet>& sets, bool greatest, const char* what) {
  for (const ArgSet& s : sets) {
    const bool extreme = std::all_of(sets.begin(), sets.end(), [&](const ArgSet& t) {
      return greatest ? t.is_subset_of(s) : s.is_subset_of(t);
    });
    if (extreme) return s;
  }
  throw std::logic_error(std::string("oracle: no unique ") + what);
}

}  // namespace

bool is_conflict_free(const ArgumentationFramework& af, const ArgSet& s) {
  for (const Attack& att : af.attacks()) {
    if (s.contains(att.attacker) && s.contains(att.target)) return false;
  }
  return true;
}

bool is_admissible(const ArgumentationFramework& af, const ArgSet& s) {
  if (!is_conflict_free(af, s)) return false;
  for (const ArgIndex a : s.members()) {
    if (!defended_by(af, s, a)) return false;
  }
  return true;
}

bool is_complete(const ArgumentationFramework& af, const ArgSet& s) {
  if (!is_admissible(af, s)) return false;
  for (ArgIndex a = 0; a < af.size(); ++a) {
    if (!s.contains(a) && defended_by(af, s, a)) return false;
  }
  return true;
}

bool is_stable(const ArgumentationFramework& af, const ArgSet& s) {
  if (!is_conflict_free(af, s)) return false;
  for (ArgIndex a = 0; a < af.size(); ++a) {
    if (!s.contains(a) && !attacks_member(af, s, a)) return false;
  }
  return true;
}

std::vector<ArgSet> admissible_sets(const ArgumentationFramework& af) {
  return filter(all_subsets(af), [&](const ArgSet& s) { return is_admissible(af, s); });
}

ExtensionFamily enumerate(const ArgumentationFramework& af, Semantics sigma) {
  ExtensionFamily family{sigma, {}};
  switch (sigma) {
    case Semantics::Complete:
      family.extensions = filter(all_subsets(af), [&](const ArgSet& s) { return is_complete(af, s); });
      break;
    case Semantics::Grounded: {
      const auto complete = enumerate(af, Semantics::Complete).extensions;
      family.extensions = {unique_extreme(complete, false, "grounded extension")};
      break;
    }
    case Semantics::Stable:
      family.extensions = filter(all_subsets(af), [&](const ArgSet& s) { return is_stable(af, s); });
      break;
    case Semantics::Preferred:
      family.extensions = maximal(admissible_sets(af));
      break;
    case Semantics::Ideal: {
      ArgSet common = ArgSet::full(af.size());
      for (const ArgSet& e : maximal(admissible_sets(af))) common &= e;
      const auto candidates =
          filter(admissible_sets(af), [&](const ArgSet& s) { return s.is_subset_of(common); });
      family.extensions = {unique_extreme(candidates, true, "ideal extension")};
      break;
    }
  }
  return family;
}

bool credulously_accepted(const ExtensionFamily& family, ArgIndex a) {
  return std::any_of(family.extensions.begin(), family.extensions.end(),
                     [&](const ArgSet& e) { return e.contains(a); });
}

bool skeptically_accepted(const ExtensionFamily& family, ArgIndex a) {
  return std::all_of(family.extensions.begin(), family.extensions.end(),
                     [&](const ArgSet& e) { return e.contains(a); });
}

}  // namespace argsat::oracle

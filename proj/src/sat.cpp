#include "argsat/sat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace argsat::sat {

Lit Lit::from_dimacs(int value) {
  if (value == 0) throw std::invalid_argument("literal 0 is not a variable");
  const auto v = static_cast<Var>(value < 0 ? -static_cast<long long>(value) : value);
  return value < 0 ? negative(v) : positive(v);
}

std::optional<Clause> normalize(Clause clause) {
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  // x and ~x are adjacent after sorting by code.
  for (std::size_t i = 1; i < clause.size(); ++i) {
    if (clause[i].var() == clause[i - 1].var()) return std::nullopt;
  }
  return clause;
}

void write_dimacs(std::ostream& out, std::size_t num_vars, std::span<const Clause> clauses) {
  out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
  for (const auto& clause : clauses) {
    for (const Lit l : clause) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

namespace {

// Luby sequence 1 1 2 1 1 2 4 ... scaled by powers of `y`.
double luby(double y, std::uint64_t x) {
  std::uint64_t size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

}  // namespace

Var Solver::new_var() {
  assigns_.push_back(LBool::Undef);
  saved_phase_.push_back(false);
  level_.push_back(0);
  reason_.push_back(kNoReason);
  activity_.push_back(0.0);
  seen_.push_back(0);
  heap_pos_.push_back(-1);
  watches_.emplace_back();
  watches_.emplace_back();
  const auto v = static_cast<Var>(assigns_.size());
  heap_insert(v);
  return v;
}

void Solver::add_clause(std::span<const Lit> lits) {
  for (const Lit l : lits) {
    if (l.var() == 0 || l.var() > num_vars()) {
      throw std::invalid_argument("clause uses unregistered variable " + std::to_string(l.var()));
    }
  }
  auto norm = normalize(Clause(lits.begin(), lits.end()));
  if (!norm) return;
  original_.push_back(*norm);
  if (!ok_) return;

  // Outside solve() the trail only holds level-0 facts.
  std::vector<Lit> kept;
  kept.reserve(norm->size());
  for (const Lit l : *norm) {
    const LBool v = lit_value(l);
    if (v == LBool::True) return;
    if (v == LBool::Undef) kept.push_back(l);
  }
  if (kept.empty()) {
    ok_ = false;
  } else if (kept.size() == 1) {
    enqueue(kept[0], kNoReason);
    if (propagate() != kNoReason) ok_ = false;
  } else {
    attach(std::move(kept), false);
  }
}

bool Solver::value(Var v) const {
  if (!has_model_) throw std::logic_error("no model: last solve() was not satisfiable");
  if (v == 0 || v > model_.size()) {
    throw std::out_of_range("variable " + std::to_string(v) + " not in model");
  }
  return model_[v - 1];
}

void Solver::write_dimacs(std::ostream& out) const { sat::write_dimacs(out, num_vars(), original_); }

void Solver::enqueue(Lit l, ClauseRef reason) {
  const Var v = l.var();
  assigns_[v - 1] = l.is_negative() ? LBool::False : LBool::True;
  level_[v - 1] = decision_level();
  reason_[v - 1] = reason;
  trail_.push_back(l);
}

Solver::ClauseRef Solver::attach(std::vector<Lit> lits, bool learnt) {
  const auto ref = static_cast<ClauseRef>(db_.size());
  watches_[(~lits[0]).code()].push_back({ref, lits[1]});
  watches_[(~lits[1]).code()].push_back({ref, lits[0]});
  db_.push_back({std::move(lits), learnt});
  return ref;
}

Solver::ClauseRef Solver::propagate() {
  ClauseRef conflict = kNoReason;
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    const Lit false_lit = ~p;
    auto& ws = watches_[p.code()];
    ++stats_.propagations;

    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ws.size()) {
      const Watcher w = ws[i];
      if (lit_value(w.blocker) == LBool::True) {
        ws[j++] = ws[i++];
        continue;
      }
      auto& c = db_[w.clause].lits;
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      ++i;

      const Lit first = c[0];
      const Watcher keep{w.clause, first};
      if (first != w.blocker && lit_value(first) == LBool::True) {
        ws[j++] = keep;
        continue;
      }

      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (lit_value(c[k]) != LBool::False) {
          std::swap(c[1], c[k]);
          watches_[(~c[1]).code()].push_back(keep);
          moved = true;
          break;
        }
      }
      if (moved) continue;

      ws[j++] = keep;
      if (lit_value(first) == LBool::False) {
        conflict = w.clause;
        qhead_ = trail_.size();
        while (i < ws.size()) ws[j++] = ws[i++];
      } else {
        enqueue(first, w.clause);
      }
    }
    ws.resize(j);
    if (conflict != kNoReason) break;
  }
  return conflict;
}

bool Solver::redundant(Lit l) const {
  const ClauseRef r = reason_[l.var() - 1];
  if (r == kNoReason) return false;
  const auto& c = db_[r].lits;
  for (std::size_t k = 1; k < c.size(); ++k) {
    const Var v = c[k].var();
    if (seen_[v - 1] == 0 && level_[v - 1] > 0) return false;
  }
  return true;
}

std::uint32_t Solver::analyze(ClauseRef conflict, std::vector<Lit>& learnt) {
  learnt.clear();
  learnt.emplace_back();  // slot for the asserting literal

  int open = 0;
  bool have_p = false;
  Lit p;
  std::size_t idx = trail_.size();
  ClauseRef ref = conflict;
  do {
    const auto& c = db_[ref].lits;
    for (std::size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
      const Lit q = c[k];
      const Var v = q.var();
      if (seen_[v - 1] == 0 && level_[v - 1] > 0) {
        seen_[v - 1] = 1;
        bump(v);
        if (level_[v - 1] >= decision_level()) {
          ++open;
        } else {
          learnt.push_back(q);
        }
      }
    }
    do {
      --idx;
    } while (seen_[trail_[idx].var() - 1] == 0);
    p = trail_[idx];
    have_p = true;
    ref = reason_[p.var() - 1];
    seen_[p.var() - 1] = 0;
    --open;
  } while (open > 0);
  learnt[0] = ~p;

  // Local minimization: drop literals implied by other learnt literals.
  const std::vector<Lit> marked(learnt.begin() + 1, learnt.end());
  std::size_t kept = 1;
  for (std::size_t i = 1; i < learnt.size(); ++i) {
    if (!redundant(learnt[i])) learnt[kept++] = learnt[i];
  }
  learnt.resize(kept);
  for (const Lit l : marked) seen_[l.var() - 1] = 0;

  if (learnt.size() == 1) return 0;
  std::size_t max_i = 1;
  for (std::size_t i = 2; i < learnt.size(); ++i) {
    if (level_[learnt[i].var() - 1] > level_[learnt[max_i].var() - 1]) max_i = i;
  }
  std::swap(learnt[1], learnt[max_i]);
  return level_[learnt[1].var() - 1];
}

void Solver::cancel_until(std::uint32_t level) {
  if (decision_level() <= level) return;
  for (std::size_t i = trail_.size(); i-- > trail_lim_[level];) {
    const Var v = trail_[i].var();
    saved_phase_[v - 1] = assigns_[v - 1] == LBool::True;
    assigns_[v - 1] = LBool::Undef;
    reason_[v - 1] = kNoReason;
    if (!in_heap(v)) heap_insert(v);
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

std::optional<Lit> Solver::pick_branch() {
  while (!heap_.empty()) {
    const Var v = heap_pop();
    if (assigns_[v - 1] == LBool::Undef) {
      return saved_phase_[v - 1] ? Lit::positive(v) : Lit::negative(v);
    }
  }
  return std::nullopt;
}

std::optional<Status> Solver::search(std::span<const Lit> assumptions,
                                     std::uint64_t conflict_budget) {
  std::uint64_t conflicts = 0;
  std::vector<Lit> learnt;
  for (;;) {
    const ClauseRef conflict = propagate();
    if (conflict != kNoReason) {
      ++stats_.conflicts;
      ++conflicts;
      if (decision_level() == 0) {
        ok_ = false;
        return Status::Unsat;
      }
      const std::uint32_t back = analyze(conflict, learnt);
      cancel_until(back);
      if (learnt.size() == 1) {
        enqueue(learnt[0], kNoReason);
      } else {
        const ClauseRef ref = attach(learnt, true);
        ++stats_.learnt_clauses;
        enqueue(learnt[0], ref);
      }
      decay();
      continue;
    }

    if (conflicts >= conflict_budget) {
      cancel_until(0);
      return std::nullopt;
    }

    std::optional<Lit> next;
    while (decision_level() < assumptions.size()) {
      const Lit a = assumptions[decision_level()];
      const LBool v = lit_value(a);
      if (v == LBool::True) {
        trail_lim_.push_back(trail_.size());  // keep level k <-> assumption k
      } else if (v == LBool::False) {
        return Status::Unsat;
      } else {
        next = a;
        break;
      }
    }
    if (!next) {
      next = pick_branch();
      if (!next) return Status::Sat;
      ++stats_.decisions;
    }
    trail_lim_.push_back(trail_.size());
    enqueue(*next, kNoReason);
  }
}

Status Solver::solve(std::span<const Lit> assumptions) {
  ++stats_.solves;
  has_model_ = false;
  for (const Lit l : assumptions) {
    if (l.var() == 0 || l.var() > num_vars()) {
      throw std::invalid_argument("assumption uses unregistered variable " +
                                  std::to_string(l.var()));
    }
  }
  if (!ok_) return Status::Unsat;

  Status status = Status::Unsat;
  for (std::uint64_t round = 0;; ++round) {
    const auto budget = static_cast<std::uint64_t>(luby(2.0, round) * kRestartUnit);
    if (auto result = search(assumptions, budget)) {
      status = *result;
      break;
    }
    ++stats_.restarts;
  }

  if (status == Status::Sat) {
    model_.assign(num_vars(), false);
    for (std::size_t i = 0; i < num_vars(); ++i) model_[i] = assigns_[i] == LBool::True;
    has_model_ = true;
  }
  cancel_until(0);
  return status;
}

void Solver::bump(Var v) {
  activity_[v - 1] += activity_inc_;
  if (activity_[v - 1] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    activity_inc_ *= 1e-100;
  }
  if (in_heap(v)) heap_up(static_cast<std::size_t>(heap_pos_[v - 1]));
}

bool Solver::heap_before(Var a, Var b) const {
  const double aa = activity_[a - 1];
  const double ab = activity_[b - 1];
  return aa > ab || (aa == ab && a < b);
}

void Solver::heap_insert(Var v) {
  heap_pos_[v - 1] = static_cast<std::int64_t>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_.size() - 1);
}

Var Solver::heap_pop() {
  const Var top = heap_.front();
  heap_pos_[top - 1] = -1;
  const Var last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last - 1] = 0;
    heap_down(0);
  }
  return top;
}

void Solver::heap_up(std::size_t pos) {
  const Var v = heap_[pos];
  while (pos > 0) {
    const std::size_t parent = (pos - 1) / 2;
    if (!heap_before(v, heap_[parent])) break;
    heap_[pos] = heap_[parent];
    heap_pos_[heap_[pos] - 1] = static_cast<std::int64_t>(pos);
    pos = parent;
  }
  heap_[pos] = v;
  heap_pos_[v - 1] = static_cast<std::int64_t>(pos);
}

void Solver::heap_down(std::size_t pos) {
  const Var v = heap_[pos];
  for (;;) {
    std::size_t child = 2 * pos + 1;
    if (child >= heap_.size()) break;
    if (child + 1 < heap_.size() && heap_before(heap_[child + 1], heap_[child])) ++child;
    if (!heap_before(heap_[child], v)) break;
    heap_[pos] = heap_[child];
    heap_pos_[heap_[pos] - 1] = static_cast<std::int64_t>(pos);
    pos = child;
  }
  heap_[pos] = v;
  heap_pos_[v - 1] = static_cast<std::int64_t>(pos);
}

}  // namespace argsat::sat

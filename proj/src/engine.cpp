#include "ookb/engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "ookb/error.hpp"

namespace ookb {

std::string_view policy_name(Policy p) noexcept {
  return p == Policy::random ? "random" : "min-depth";
}

std::string_view violation_kind_name(ViolationKind k) noexcept {
  switch (k) {
    case ViolationKind::min: return "min";
    case ViolationKind::max: return "max";
    case ViolationKind::exact_low: return "exact-low";
    case ViolationKind::exact_high: return "exact-high";
    case ViolationKind::domain: return "domain";
    case ViolationKind::range: return "range";
  }
  return "min";
}

int EqClasses::class_of(const Term& t) const {
  auto it = index.find(t);
  return it == index.end() ? -1 : it->second;
}

bool AnswerSet::consistent() const {
  if (!conflicts.empty()) return false;
  return std::all_of(violations.begin(), violations.end(),
                     [](const ConstraintViolation& v) { return v.depth_sensitive; });
}

namespace {

Atom instance(const Term& t, const std::string& c, bool neg = false) {
  return make_atom(Predicate::instance_of, {t, sym(c)}, neg);
}

Atom value(const std::string& r, const Term& x, const Term& y) {
  return make_atom(Predicate::value, {sym(r), x, y});
}

class Fixpoint {
 public:
  explicit Fixpoint(const GroundProgram& p) : p_(p) {
    std::map<std::string, std::set<std::string>> parents;
    std::set<std::pair<std::string, std::string>> disjoint;
    for (const auto& a : p.facts) {
      const auto s = [&](std::size_t i) { return a.symbol_at(i); };
      switch (a.pred) {
        case Predicate::subclass_of: parents[s(0)].insert(s(1)); break;
        case Predicate::disjoint:
          disjoint.insert({s(0), s(1)});
          disjoint.insert({s(1), s(0)});
          break;
        case Predicate::subrelation_of: subrel_[s(0)].push_back(s(1)); break;
        case Predicate::inverse: inverse_[s(0)].push_back(s(1)); break;
        case Predicate::compose: compose_.emplace_back(s(0), s(1), s(2)); break;
        default: break;
      }
    }
    for (const auto& [c, ps] : parents) {
      std::deque<std::string> todo(ps.begin(), ps.end());
      auto& up = supers_[c];
      while (!todo.empty()) {
        auto x = todo.front();
        todo.pop_front();
        if (!up.insert(x).second) continue;
        if (auto it = parents.find(x); it != parents.end())
          for (const auto& q : it->second) todo.push_back(q);
      }
      for (const auto& x : up) out_.insert(make_atom(Predicate::subclass_of, {sym(c), sym(x)}));
    }
    for (const auto& [a, b] : disjoint) {
      disjoint_[a].push_back(b);
      out_.insert(make_atom(Predicate::disjoint, {sym(a), sym(b)}));
    }
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
      std::set<Atom> body(p.rules[i].body.begin(), p.rules[i].body.end());
      pending_.push_back(body.size());
      for (const auto& b : body) waiting_[b].push_back(i);
    }
  }

  AtomSet run() {
    for (const auto& a : p_.facts) add(a);
    for (std::size_t i = 0; i < p_.rules.size(); ++i)
      if (pending_[i] == 0) add(p_.rules[i].head);
    while (!queue_.empty()) {
      Atom a = std::move(queue_.front());
      queue_.pop_front();
      process(a);
    }
    return std::move(out_);
  }

 private:
  void add(const Atom& a) {
    if (out_.insert(a)) queue_.push_back(a);
  }

  void process(const Atom& a) {
    if (auto it = waiting_.find(a); it != waiting_.end())
      for (std::size_t r : it->second)
        if (--pending_[r] == 0) add(p_.rules[r].head);
    if (a.neg) return;
    if (a.pred == Predicate::instance_of) {
      const Term& x = a.term_at(0);
      const std::string& d = a.symbol_at(1);
      if (auto it = supers_.find(d); it != supers_.end())
        for (const auto& c : it->second) add(instance(x, c));
      if (auto it = disjoint_.find(d); it != disjoint_.end())
        for (const auto& c : it->second) add(instance(x, c, true));
    } else if (a.pred == Predicate::value) {
      const std::string& r = a.symbol_at(0);
      const Term& x = a.term_at(1);
      const Term& y = a.term_at(2);
      by_subject_[x].emplace_back(r, y);
      by_object_[y].emplace_back(r, x);
      add(make_atom(Predicate::term, {x}));
      add(make_atom(Predicate::term, {y}));
      if (auto it = subrel_.find(r); it != subrel_.end())
        for (const auto& t : it->second) add(value(t, x, y));
      if (auto it = inverse_.find(r); it != inverse_.end())
        for (const auto& t : it->second) add(value(t, y, x));
      for (const auto& [s, t, u] : compose_) {
        if (r == s) {
          auto next = by_subject_[y];
          for (const auto& [rel, z] : next)
            if (rel == t) add(value(u, x, z));
        }
        if (r == t) {
          auto prev = by_object_[x];
          for (const auto& [rel, w] : prev)
            if (rel == s) add(value(u, w, y));
        }
      }
    }
  }

  const GroundProgram& p_;
  std::map<std::string, std::set<std::string>> supers_;
  std::map<std::string, std::vector<std::string>> disjoint_;
  std::map<std::string, std::vector<std::string>> subrel_;
  std::map<std::string, std::vector<std::string>> inverse_;
  std::vector<std::tuple<std::string, std::string, std::string>> compose_;
  std::map<Atom, std::vector<std::size_t>> waiting_;
  std::vector<std::size_t> pending_;
  std::map<Term, std::vector<std::pair<std::string, Term>>> by_subject_;
  std::map<Term, std::vector<std::pair<std::string, Term>>> by_object_;
  std::deque<Atom> queue_;
  AtomSet out_;
};

// Union-find over terms.
class Partition {
 public:
  const Term& find(const Term& t) {
    auto it = parent_.try_emplace(t, t).first;
    if (it->second == t) return it->first;
    Term root = find(it->second);
    it->second = root;
    return parent_.find(root)->first;
  }

  void unite(const Term& a, const Term& b) {
    Term ra = find(a);
    Term rb = find(b);
    if (ra != rb) parent_[ra] = rb;
  }

  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (const auto& [t, p] : parent_) out.push_back(t);
    return out;
  }

 private:
  std::map<Term, Term> parent_;
};

}  // namespace

AtomSet base_fixpoint(const GroundProgram& program) { return Fixpoint(program).run(); }

std::vector<Conflict> literal_conflicts(const AtomSet& atoms) {
  std::vector<Conflict> out;
  for (const auto& a : atoms) {
    if (!a.neg || a.pred != Predicate::instance_of) continue;
    Atom pos = a;
    pos.neg = false;
    if (atoms.contains(pos)) out.push_back({pos, a});
  }
  return out;
}

EqClasses congruence_closure(const AtomSet& atoms) {
  Partition uf;
  for (const auto& a : atoms)
    if (a.pred == Predicate::eq) uf.unite(a.term_at(0), a.term_at(1));
  std::map<Term, std::vector<Term>> groups;
  for (const auto& t : uf.terms()) groups[uf.find(t)].push_back(t);
  EqClasses out;
  std::vector<std::vector<Term>> classes;
  for (auto& [root, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), min_depth_less);
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return min_depth_less(a.front(), b.front()); });
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& t : classes[i]) out.index.emplace(t, static_cast<int>(i));
  out.classes = std::move(classes);
  for (const auto& a : atoms) {
    if (a.pred != Predicate::neq) continue;
    int c = out.class_of(a.term_at(0));
    if (c >= 0 && c == out.class_of(a.term_at(1)))
      out.conflicts.push_back({make_atom(Predicate::eq, {a.term_at(0), a.term_at(1)}), a});
  }
  return out;
}

Substitution select_representatives(const EqClasses& classes, const AtomSet& atoms, Policy policy,
                                    std::uint64_t seed) {
  Substitution s;
  std::mt19937_64 rng(seed);
  for (const auto& members : classes.classes) {
    std::size_t pick = 0;
    if (policy == Policy::random)
      pick = std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng);
    for (const auto& m : members) s.emplace(m, members[pick]);
  }
  for (const auto& a : atoms)
    if (a.pred == Predicate::term) s.emplace(a.term_at(0), a.term_at(0));
  return s;
}

AtomSet project_value_e(const AtomSet& atoms, const Substitution& subst) {
  AtomSet out;
  const auto rep = [&](const Term& t) {
    auto it = subst.find(t);
    return it == subst.end() ? t : it->second;
  };
  for (const auto& a : atoms)
    if (a.pred == Predicate::value)
      out.insert(make_atom(Predicate::value_e, {a.args[0], rep(a.term_at(1)), rep(a.term_at(2))}));
  return out;
}

std::vector<ConstraintViolation> check_constraints(const AtomSet& atoms) {
  std::map<std::string, std::vector<std::string>> domain, range;
  std::map<std::pair<std::string, Term>, std::vector<Term>> fillers;
  for (const auto& a : atoms) {
    if (a.pred == Predicate::domain) domain[a.symbol_at(0)].push_back(a.symbol_at(1));
    if (a.pred == Predicate::range) range[a.symbol_at(0)].push_back(a.symbol_at(1));
    if (a.pred == Predicate::value_e) fillers[{a.symbol_at(0), a.term_at(1)}].push_back(a.term_at(2));
  }
  std::vector<ConstraintViolation> out;
  for (const auto& a : atoms) {
    if (a.pred == Predicate::value) {
      const auto check = [&](const auto& table, const Term& t, ViolationKind kind) {
        auto it = table.find(a.symbol_at(0));
        if (it == table.end()) return;
        for (const auto& c : it->second) {
          if (atoms.contains(instance(t, c))) continue;
          ConstraintViolation v;
          v.constraint = a;
          v.kind = kind;
          v.witnesses.insert(make_atom(kind == ViolationKind::domain ? Predicate::domain : Predicate::range,
                                       {a.args[0], sym(c)}));
          out.push_back(std::move(v));
        }
      };
      check(domain, a.term_at(1), ViolationKind::domain);
      check(range, a.term_at(2), ViolationKind::range);
      continue;
    }
    if (a.pred != Predicate::constraint) continue;
    const std::string& kind = a.symbol_at(0);
    const Term& y = a.term_at(1);
    const std::string& rel = a.symbol_at(2);
    const std::string& cls = a.symbol_at(3);
    const std::int64_t m = std::get<std::int64_t>(a.args[4]);
    ConstraintViolation v;
    v.constraint = a;
    if (auto it = fillers.find({rel, y}); it != fillers.end()) {
      for (const auto& z : it->second) {
        if (!atoms.contains(instance(z, cls))) continue;
        v.witnesses.insert(make_atom(Predicate::value_e, {sym(rel), y, z}));
      }
    }
    v.count = static_cast<std::int64_t>(v.witnesses.size());
    const bool low = v.count <= m - 1;
    const bool high = v.count >= m + 1;
    if (kind == "min" && low) {
      v.kind = ViolationKind::min;
    } else if (kind == "max" && high) {
      v.kind = ViolationKind::max;
    } else if (kind == "exact" && low) {
      v.kind = ViolationKind::exact_low;
    } else if (kind == "exact" && high) {
      v.kind = ViolationKind::exact_high;
    } else {
      continue;
    }
    v.depth_sensitive = v.kind == ViolationKind::min || v.kind == ViolationKind::exact_low;
    out.push_back(std::move(v));
  }
  return out;
}

AnswerSet solve(const GroundProgram& program, const SolveOptions& opts) {
  AnswerSet result;
  result.depth = opts.max_depth;
  result.universe_size = program.universe.size();
  result.atoms = base_fixpoint(program);
  result.conflicts = literal_conflicts(result.atoms);

  EqClasses classes = congruence_closure(result.atoms);
  for (const auto& members : classes.classes)
    for (const auto& x : members)
      for (const auto& y : members)
        if (x != y) result.atoms.insert(make_atom(Predicate::eq, {x, y}));
  for (auto& c : classes.conflicts) result.conflicts.push_back(std::move(c));

  result.substitution = select_representatives(classes, result.atoms, opts.policy, opts.seed);
  for (const auto& [t, rep] : result.substitution) {
    result.atoms.insert(make_atom(Predicate::substitute, {t, rep}));
    if (t != rep) result.atoms.insert(make_atom(Predicate::is_substituted, {t}));
  }
  for (const auto& a : project_value_e(result.atoms, result.substitution)) result.atoms.insert(a);
  result.violations = check_constraints(result.atoms);
  return result;
}

AnswerSet answer_set(const OOKBDomain& domain, const std::vector<Seed>& seeds,
                     const SolveOptions& opts) {
  return solve(ground_program(domain, seeds, opts.grounding()), opts);
}

bool invariant_predicate(Predicate p) noexcept {
  return p != Predicate::substitute && p != Predicate::is_substituted && p != Predicate::value_e;
}

bool entails(const OOKBDomain& domain, const std::vector<Seed>& seeds, const Atom& atom,
             const SolveOptions& opts, EntailmentMode mode) {
  if (mode == EntailmentMode::cautious && !invariant_predicate(atom.pred))
    throw Error(ErrorCode::invariant_family,
                std::string(predicate_name(atom.pred)) +
                    " differs between answer sets; cautious entailment needs credulous mode");
  AnswerSet as = answer_set(domain, seeds, opts);
  if (!as.consistent()) throw Error(ErrorCode::inconsistent, "the knowledge base is inconsistent");
  return as.contains(atom);
}

}  // namespace ookb

#include "ookb/grounder.hpp"

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <tuple>

#include "ookb/error.hpp"
#include "ookb/parser.hpp"

namespace ookb {
namespace {

using Bindings = std::map<std::string, Term>;

Term extend(const Term& t, const std::vector<std::string>& fns) {
  Term r = t;
  for (const auto& f : fns) r.skolems.push_back(f);
  return r;
}

bool unify(const PatternArg& p, const Arg& a, Bindings& b, std::vector<std::string>& bound) {
  if (const auto* v = std::get_if<Variable>(&p)) {
    const auto* t = std::get_if<Term>(&a);
    if (!t) return false;
    auto it = b.find(v->name);
    if (it != b.end()) return it->second == *t;
    b.emplace(v->name, *t);
    bound.push_back(v->name);
    return true;
  }
  if (const auto* c = std::get_if<Term>(&p)) {
    const auto* t = std::get_if<Term>(&a);
    return t && *t == *c;
  }
  const auto* n = std::get_if<std::int64_t>(&a);
  return n && *n == std::get<std::int64_t>(p);
}

Atom substitute_pattern(const PatternAtom& p, const Bindings& b) {
  Atom a;
  a.pred = p.pred;
  for (const auto& arg : p.args) {
    if (const auto* v = std::get_if<Variable>(&arg))
      a.args.emplace_back(b.at(v->name));
    else if (const auto* t = std::get_if<Term>(&arg))
      a.args.emplace_back(*t);
    else
      a.args.emplace_back(std::get<std::int64_t>(arg));
  }
  return a;
}

class Closure {
 public:
  Closure(const OOKBDomain& d, const GroundOptions& opts)
      : d_(d), opts_(opts), skolems_(d) {
    out_.universe.max_depth = opts.max_depth;
    for (const auto& r : d.rules) rules_by_owner_[r.owner_class].push_back(&r);
    std::map<std::string, std::set<std::string>> parents;
    for (const auto& a : d.facts) {
      const auto s = [&](std::size_t i) { return a.symbol_at(i); };
      switch (a.pred) {
        case Predicate::subclass_of: parents[s(0)].insert(s(1)); break;
        case Predicate::subrelation_of: subrel_[s(0)].push_back(s(1)); break;
        case Predicate::inverse: inverse_[s(0)].push_back(s(1)); break;
        case Predicate::compose: compose_.emplace_back(s(0), s(1), s(2)); break;
        default: break;
      }
    }
    for (const auto& [c, ps] : parents) {
      auto& up = supers_[c];
      std::deque<std::string> todo(ps.begin(), ps.end());
      while (!todo.empty()) {
        auto p = todo.front();
        todo.pop_front();
        if (!up.insert(p).second) continue;
        if (auto it = parents.find(p); it != parents.end())
          for (const auto& q : it->second) todo.push_back(q);
      }
    }
  }

  GroundProgram run(const std::vector<Seed>& seeds) {
    for (const auto& c : d_.classes) out_.facts.insert(make_atom(Predicate::class_, {sym(c)}));
    for (const auto& r : d_.relations) out_.facts.insert(make_atom(Predicate::relation, {sym(r)}));
    for (const auto& i : d_.individuals) {
      out_.facts.insert(make_atom(Predicate::individual, {sym(i)}));
      add_term(Term(i));
    }
    for (const auto& a : d_.facts) {
      out_.facts.insert(a);
      derive(a);
    }
    for (const auto& s : seeds) {
      Atom a = make_atom(Predicate::instance_of, {s.term, sym(s.class_name)});
      out_.facts.insert(a);
      derive(a);
    }
    do {
      while (!queue_.empty()) {
        Atom a = std::move(queue_.front());
        queue_.pop_front();
        process(a);
      }
      fire_conditions();
    } while (!queue_.empty());
    return std::move(out_);
  }

 private:
  void add_term(const Term& t) {
    if (out_.universe.terms.insert(t).second && out_.universe.terms.size() > opts_.universe_cap)
      throw Error(ErrorCode::resource_cap,
                  "term universe exceeds cap of " + std::to_string(opts_.universe_cap));
  }

  void derive(const Atom& a) {
    switch (a.pred) {
      case Predicate::instance_of:
        if (!members_.insert({a.term_at(0), a.symbol_at(1)}).second) return;
        add_term(a.term_at(0));
        break;
      case Predicate::value:
        if (!values_.insert({a.symbol_at(0), a.term_at(1), a.term_at(2)}).second) return;
        add_term(a.term_at(1));
        add_term(a.term_at(2));
        by_subject_[a.term_at(1)].insert({a.symbol_at(0), a.term_at(2)});
        by_object_[a.term_at(2)].insert({a.symbol_at(0), a.term_at(1)});
        break;
      case Predicate::constraint:
        if (!constraints_.insert(a).second) return;
        add_term(a.term_at(1));
        break;
      case Predicate::eq:
      case Predicate::neq:
        add_term(a.term_at(0));
        add_term(a.term_at(1));
        return;
      default:
        return;
    }
    by_pred_[a.pred].push_back(a);
    queue_.push_back(a);
  }

  void emit(Atom head, std::vector<Atom> body, const std::string& origin) {
    if (!emitted_.insert({head, body}).second) return;
    derive(head);
    out_.rules.push_back({std::move(head), std::move(body), {}, origin});
  }

  std::optional<Atom> instantiate(const DescriptiveRule& r, const Term& t) const {
    const auto term = [&](const SkolemChain& c) {
      return extend(t, skolems_.resolve(r.owner_class, c));
    };
    struct Visitor {
      const decltype(term)& at;
      Atom operator()(const ValueHead& h) const {
        return make_atom(Predicate::value, {sym(h.relation), at(h.subject), at(h.object)});
      }
      Atom operator()(const MemberHead& h) const {
        return make_atom(Predicate::instance_of, {at(h.term), sym(h.class_name)});
      }
      Atom operator()(const EqualityHead& h) const {
        return make_atom(h.negated ? Predicate::neq : Predicate::eq, {at(h.lhs), at(h.rhs)});
      }
      Atom operator()(const ConstraintHead& h) const {
        return make_atom(Predicate::constraint, {sym(std::string(bound_name(h.bound))), at(h.term),
                                                 sym(h.relation), sym(h.filler), h.count});
      }
    };
    Atom a = std::visit(Visitor{term}, r.head);
    for (const auto& arg : a.args)
      if (const auto* x = std::get_if<Term>(&arg);
          x && static_cast<int>(x->depth()) > opts_.max_depth)
        return std::nullopt;
    return a;
  }

  void process(const Atom& a) {
    if (a.pred == Predicate::instance_of) {
      const Term& t = a.term_at(0);
      const std::string& c = a.symbol_at(1);
      if (auto it = supers_.find(c); it != supers_.end())
        for (const auto& s : it->second) derive(make_atom(Predicate::instance_of, {t, sym(s)}));
      auto owned = rules_by_owner_.find(c);
      if (owned == rules_by_owner_.end()) return;
      for (const DescriptiveRule* r : owned->second) {
        auto head = instantiate(*r, t);
        if (!head) continue;
        auto [it, fresh] = origins_.try_emplace(r);
        if (fresh) it->second = render_rule(*r);
        emit(std::move(*head), {a}, it->second);
      }
    } else if (a.pred == Predicate::value) {
      const std::string& r = a.symbol_at(0);
      const Term& x = a.term_at(1);
      const Term& y = a.term_at(2);
      auto value = [](const std::string& rel, const Term& s, const Term& o) {
        return make_atom(Predicate::value, {sym(rel), s, o});
      };
      if (auto it = subrel_.find(r); it != subrel_.end())
        for (const auto& t : it->second) derive(value(t, x, y));
      if (auto it = inverse_.find(r); it != inverse_.end())
        for (const auto& t : it->second) derive(value(t, y, x));
      for (const auto& [s, t, u] : compose_) {
        if (r == s) {
          std::vector<Term> zs;
          for (const auto& [rel, z] : by_subject_[y])
            if (rel == t) zs.push_back(z);
          for (const auto& z : zs) derive(value(u, x, z));
        }
        if (r == t) {
          std::vector<Term> ws;
          for (const auto& [rel, w] : by_object_[x])
            if (rel == s) ws.push_back(w);
          for (const auto& w : ws) derive(value(u, w, y));
        }
      }
    }
  }

  void fire_conditions() {
    for (const auto& sc : d_.sufficient_conditions) {
      const std::string origin = render_condition(sc);
      std::vector<std::pair<Atom, std::vector<Atom>>> found;
      Bindings b;
      std::vector<Atom> body;
      match(sc, 0, b, body, [&] {
        found.emplace_back(make_atom(Predicate::instance_of, {b.at(sc.head_var), sym(sc.target_class)}),
                           body);
      });
      for (auto& [head, lits] : found) emit(std::move(head), std::move(lits), origin);
    }
  }

  void match(const SufficientCondition& sc, std::size_t i, Bindings& b, std::vector<Atom>& body,
             const std::function<void()>& found) {
    if (i == sc.body.size()) return found();
    const PatternAtom& p = sc.body[i];
    const auto& candidates = by_pred_[p.pred];
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Atom cand = candidates[k];
      std::vector<std::string> bound;
      bool ok = cand.args.size() == p.args.size();
      for (std::size_t j = 0; ok && j < p.args.size(); ++j) ok = unify(p.args[j], cand.args[j], b, bound);
      if (ok) {
        body.push_back(substitute_pattern(p, b));
        match(sc, i + 1, b, body, found);
        body.pop_back();
      }
      for (const auto& v : bound) b.erase(v);
    }
  }

  const OOKBDomain& d_;
  GroundOptions opts_;
  SkolemTable skolems_;
  std::map<std::string, std::set<std::string>> supers_;
  std::map<std::string, std::vector<std::string>> subrel_;
  std::map<std::string, std::vector<std::string>> inverse_;
  std::vector<std::tuple<std::string, std::string, std::string>> compose_;
  std::map<std::string, std::vector<const DescriptiveRule*>> rules_by_owner_;
  std::map<const DescriptiveRule*, std::string> origins_;

  std::set<std::pair<Term, std::string>> members_;
  std::set<std::tuple<std::string, Term, Term>> values_;
  std::set<Atom> constraints_;
  std::map<Term, std::set<std::pair<std::string, Term>>> by_subject_;
  std::map<Term, std::set<std::pair<std::string, Term>>> by_object_;
  std::map<Predicate, std::vector<Atom>> by_pred_;
  std::set<std::pair<Atom, std::vector<Atom>>> emitted_;
  std::deque<Atom> queue_;
  GroundProgram out_;
};

}  // namespace

GroundProgram ground_program(const OOKBDomain& domain, const std::vector<Seed>& seeds,
                             const GroundOptions& opts) {
  if (opts.max_depth < 0) throw Error(ErrorCode::invalid_argument, "max_depth must be non-negative");
  return Closure(domain, opts).run(seeds);
}

TermUniverse build_universe(const OOKBDomain& domain, const std::vector<Seed>& seeds,
                            const GroundOptions& opts) {
  return ground_program(domain, seeds, opts).universe;
}

std::string render_program(const GroundProgram& program) {
  std::string out = render_atoms(program.facts, Format::text);
  for (const auto& r : program.rules) {
    out += r.head.str();
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      out += i ? ", " : " :- ";
      out += r.body[i].str();
    }
    out += ".\n";
  }
  return out;
}

}  // namespace ookb

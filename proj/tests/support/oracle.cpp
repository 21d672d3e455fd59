#include "oracle.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <map>
#include <set>
#include <unordered_map>

#include "ookb/error.hpp"
#include "ookb/parser.hpp"

namespace oracle {
namespace {

// Atoms are tuples of interned symbols: {predicate, arg...}. Negative
// entries in rule patterns are variables.
using Tuple = std::vector<int>;
using Model = std::set<Tuple>;

struct Index {
  std::map<int, std::vector<const Tuple*>> by_pred;
  std::map<std::pair<int, int>, std::vector<const Tuple*>> by_first;

  explicit Index(const Model& m) {
    for (const auto& t : m) {
      by_pred[t[0]].push_back(&t);
      if (t.size() > 1) by_first[{t[0], t[1]}].push_back(&t);
    }
  }

  const std::vector<const Tuple*>& lookup(int pred) const {
    static const std::vector<const Tuple*> none;
    auto it = by_pred.find(pred);
    return it == by_pred.end() ? none : it->second;
  }

  const std::vector<const Tuple*>& lookup(int pred, int first) const {
    static const std::vector<const Tuple*> none;
    auto it = by_first.find({pred, first});
    return it == by_first.end() ? none : it->second;
  }
};

class Symbols {
 public:
  int id(const std::string& s) {
    auto [it, fresh] = ids_.emplace(s, static_cast<int>(names_.size()));
    if (fresh) names_.push_back(s);
    return it->second;
  }
  const std::string& name(int i) const { return names_[i]; }

 private:
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> names_;
};

struct Rule {
  Tuple head;
  std::vector<Tuple> pos;
  std::vector<Tuple> naf;
  std::vector<std::pair<int, int>> distinct;  // variable pairs that must differ
  int vars = 0;
};

class RuleBuilder {
 public:
  explicit RuleBuilder(Symbols& s) : syms_(s) {}

  // "pred(A,B)"; capitalized arguments are variables.
  Tuple pattern(const std::string& text) {
    Tuple t;
    auto open = text.find('(');
    t.push_back(syms_.id(text.substr(0, open)));
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::size_t start = 0;
    while (start <= inner.size()) {
      auto comma = inner.find(',', start);
      if (comma == std::string::npos) comma = inner.size();
      t.push_back(arg(inner.substr(start, comma - start)));
      start = comma + 1;
    }
    return t;
  }

  Rule rule(const std::string& head, std::vector<std::string> pos, std::vector<std::string> naf = {},
            std::vector<std::pair<std::string, std::string>> distinct = {}) {
    vars_.clear();
    Rule r;
    r.head = pattern(head);
    for (const auto& p : pos) r.pos.push_back(pattern(p));
    for (const auto& p : naf) r.naf.push_back(pattern(p));
    for (const auto& [a, b] : distinct) r.distinct.emplace_back(arg(a), arg(b));
    r.vars = static_cast<int>(vars_.size());
    return r;
  }

 private:
  int arg(const std::string& a) {
    if (std::isupper(static_cast<unsigned char>(a[0]))) {
      auto [it, fresh] = vars_.emplace(a, -1 - static_cast<int>(vars_.size()));
      return it->second;
    }
    return syms_.id(a);
  }

  Symbols& syms_;
  std::map<std::string, int> vars_;
};

class Evaluator {
 public:
  Evaluator(const ookb::GroundProgram& program, const Budget& budget) : budget_(budget) {
    RuleBuilder b(syms_);
    axioms_ = {
        b.rule("subclass_of(C,B)", {"subclass_of(C,A)", "subclass_of(A,B)"}),
        b.rule("instance_of(X,C)", {"instance_of(X,D)", "subclass_of(D,C)"}),
        b.rule("disjoint(C,D)", {"disjoint(D,C)"}),
        b.rule("-instance_of(X,C)", {"instance_of(X,D)", "disjoint(D,C)"}),
        b.rule("value(U,X,Z)", {"compose(S,T,U)", "value(S,X,Y)", "value(T,Y,Z)"}),
        b.rule("value(T,X,Y)", {"subrelation_of(S,T)", "value(S,X,Y)"}),
        b.rule("value(T,Y,X)", {"inverse(S,T)", "value(S,X,Y)"}),
        b.rule("eq(X,Y)", {"eq(Y,X)"}),
        b.rule("eq(X,Z)", {"eq(X,Y)", "eq(Y,Z)"}, {}, {{"X", "Z"}}),
        b.rule("substitute(Y,Z)", {"substitute(X,Z)", "eq(X,Y)"}, {}, {{"X", "Z"}}),
        b.rule("is_substituted(X)", {"substitute(X,Y)"}, {}, {{"X", "Y"}}),
        b.rule("substitute(X,X)", {"term(X)"}, {"is_substituted(X)"}),
        b.rule("term(X)", {"value(S,X,Y)"}),
        b.rule("term(Y)", {"value(S,X,Y)"}),
        b.rule("value_e(S,P,Q)", {"value(S,X,Y)", "substitute(X,P)", "substitute(Y,Q)"}),
    };
    for (const char* p : {"eq", "neq", "substitute", "value", "value_e", "instance_of", "-instance_of",
                          "domain", "range", "constraint", "term", "min", "max", "exact"})
      pred_[p] = syms_.id(p);
    for (const auto& a : program.facts) facts_.insert(tuple(a));
    for (const auto& r : program.rules) {
      Rule g;
      g.head = tuple(r.head);
      for (const auto& x : r.body) g.pos.push_back(tuple(x));
      for (const auto& x : r.naf) g.naf.push_back(tuple(x));
      ground_.push_back(std::move(g));
    }
  }

  std::vector<ookb::AtomSet> run() {
    // Positive closure with every naf literal assumed true and every choice
    // atom chosen; it bounds all answer sets.
    base_ = facts_;
    base_ = least_model({}, nullptr, Mode::base);
    Model closure = least_model({}, nullptr, Mode::closure);

    // eq is closed under symmetry and transitivity and does not depend on the
    // guess, so its classes are cliques. A guess that picks z for some member
    // forces every other member to pick z as well, or the derived substitute
    // atoms would differ from the guess; only such closed guesses are tried.
    std::map<int, std::set<int>> mates;
    for (const auto& t : closure)
      if (t[0] == pred_["eq"]) mates[t[1]].insert(t[2]);
    std::vector<std::vector<Model>> options;
    std::set<int> seen;
    for (const auto& [x, ys] : mates) {
      if (seen.count(x)) continue;
      std::set<int> clique = ys;
      clique.insert(x);
      seen.insert(clique.begin(), clique.end());
      std::vector<Model> choices{{}};
      for (int z : clique) {
        Model g;
        for (int y : clique)
          if (y != z) g.insert({pred_["substitute"], y, z});
        choices.push_back(std::move(g));
      }
      if (clique.size() == 2) {
        const int a = *clique.begin(), b = *clique.rbegin();
        choices.push_back({{pred_["substitute"], a, b}, {pred_["substitute"], b, a}});
      }
      options.push_back(std::move(choices));
    }
    double guesses = 1;
    for (const auto& o : options) guesses *= static_cast<double>(o.size());
    if (guesses > static_cast<double>(budget_.guess_budget))
      throw ookb::Error(ookb::ErrorCode::resource_cap, "oracle guess budget exceeded");

    std::set<Model> found;
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      Model guess;
      for (std::size_t k = 0; k < options.size(); ++k) guess.insert(options[k][pick[k]].begin(), options[k][pick[k]].end());
      if (auto m = stable_model(guess)) {
        found.insert(std::move(*m));
        if (found.size() >= budget_.limit) break;
      }
      std::size_t k = 0;
      for (; k < options.size(); ++k) {
        if (++pick[k] < options[k].size()) break;
        pick[k] = 0;
      }
      if (k == options.size()) break;
    }
    std::vector<ookb::AtomSet> out;
    for (const auto& m : found) out.push_back(to_atoms(m));
    return out;
  }

 private:
  Tuple tuple(const ookb::Atom& a) {
    Tuple t{syms_.id((a.neg ? "-" : "") + std::string(ookb::predicate_name(a.pred)))};
    for (const auto& x : a.args) t.push_back(syms_.id(ookb::arg_str(x)));
    return t;
  }

  ookb::AtomSet to_atoms(const Model& m) const {
    ookb::AtomSet out;
    for (const auto& t : m) {
      std::string text = syms_.name(t[0]) + "(";
      for (std::size_t i = 1; i < t.size(); ++i) text += (i > 1 ? ", " : "") + syms_.name(t[i]);
      out.insert(ookb::parse_atom(text + ")"));
    }
    return out;
  }

  // reduct: least model of the program reduct with respect to `reference`,
  // with the chosen atoms of `guess` as choice rules. closure: every choice
  // atom whose body holds is taken and naf literals are ignored. base: no
  // choices and every naf literal false; every reduct model contains it.
  enum class Mode { reduct, closure, base };

  Model least_model(const Model& guess, const Model* reference, Mode mode) {
    Model m = base_;
    const bool all_choices = mode == Mode::closure;
    bool changed = true;
    while (changed) {
      changed = false;
      if (m.size() > budget_.atom_budget)
        throw ookb::Error(ookb::ErrorCode::resource_cap, "oracle atom budget exceeded");
      Index index(m);
      std::vector<Tuple> fresh;
      const auto blocked = [&](const Tuple& a) {
        return mode == Mode::base || (reference && reference->count(a));
      };
      for (const auto& r : ground_) {
        bool ok = std::all_of(r.pos.begin(), r.pos.end(), [&](const Tuple& a) { return m.count(a); }) &&
                  std::none_of(r.naf.begin(), r.naf.end(), blocked);
        if (ok && !m.count(r.head)) fresh.push_back(r.head);
      }
      for (const auto& r : axioms_) {
        std::vector<int> env(r.vars, -1);
        join(r, 0, env, index, [&] {
          for (const auto& [a, b] : r.distinct)
            if (env[-1 - a] == env[-1 - b]) return;
          for (const auto& n : r.naf)
            if (blocked(instantiate(n, env))) return;
          Tuple h = instantiate(r.head, env);
          if (!m.count(h)) fresh.push_back(std::move(h));
        });
      }
      for (const auto* t : index.lookup(pred_["eq"])) {
        Tuple choice{pred_["substitute"], (*t)[1], (*t)[2]};
        if ((all_choices || guess.count(choice)) && mode != Mode::base && !m.count(choice))
          fresh.push_back(choice);
      }
      for (auto& t : fresh) changed |= m.insert(std::move(t)).second;
    }
    return m;
  }

  Tuple instantiate(const Tuple& p, const std::vector<int>& env) const {
    Tuple t = p;
    for (std::size_t i = 1; i < t.size(); ++i)
      if (t[i] < 0) t[i] = env[-1 - t[i]];
    return t;
  }

  void join(const Rule& r, std::size_t i, std::vector<int>& env,
            const Index& index, const std::function<void()>& done) const {
    if (i == r.pos.size()) return done();
    const Tuple& p = r.pos[i];
    int first = p.size() > 1 ? (p[1] >= 0 ? p[1] : env[-1 - p[1]]) : -1;
    const auto& candidates = first >= 0 ? index.lookup(p[0], first) : index.lookup(p[0]);
    for (const Tuple* cand : candidates) {
      if (cand->size() != p.size()) continue;
      std::vector<int> bound;
      bool ok = true;
      for (std::size_t k = 1; ok && k < p.size(); ++k) {
        if (p[k] >= 0) {
          ok = p[k] == (*cand)[k];
        } else if (env[-1 - p[k]] < 0) {
          env[-1 - p[k]] = (*cand)[k];
          bound.push_back(-1 - p[k]);
        } else {
          ok = env[-1 - p[k]] == (*cand)[k];
        }
      }
      if (ok) join(r, i + 1, env, index, done);
      for (int v : bound) env[v] = -1;
    }
  }

  std::optional<Model> stable_model(const Model& guess) {
    // Alternating fixpoint: `under` grows, `over` shrinks; equal bounds give
    // the unique stable model compatible with the guess.
    Model under;
    Model over = least_model(guess, &under, Mode::reduct);
    while (true) {
      Model next_under = least_model(guess, &over, Mode::reduct);
      Model next_over = least_model(guess, &next_under, Mode::reduct);
      if (next_under == under && next_over == over) break;
      under = std::move(next_under);
      over = std::move(next_over);
    }
    if (under != over)
      throw ookb::Error(ookb::ErrorCode::internal, "oracle: well-founded model is not total");
    Model& m = under;
    if (least_model(guess, &m, Mode::reduct) != m) return std::nullopt;
    for (const auto& t : m)
      if (t[0] == pred_["substitute"] && t[1] != t[2] &&
          m.count({pred_["eq"], t[1], t[2]}) && !guess.count(t))
        return std::nullopt;
    for (const auto& t : guess)
      if (!m.count(t)) return std::nullopt;
    if (violates_constraint(m)) return std::nullopt;
    return m;
  }

  bool violates_constraint(const Model& m) {
    const int eq = pred_["eq"], neq = pred_["neq"], sub = pred_["substitute"];
    const Index ix(m);
    const auto index = [&](int p) { return ix.lookup(p); };
    for (const Tuple* t : index(pred_["instance_of"]))
      if (m.count({pred_["-instance_of"], (*t)[1], (*t)[2]})) return true;
    // eq(X,Y), neq(X,Y)
    for (const Tuple* t : index(eq))
      if (m.count({neq, (*t)[1], (*t)[2]})) return true;
    // eq(X,Y) with neither X nor Y substituted by an eq-mate
    const auto substituted = [&](int x) {
      for (const Tuple* s : index(sub))
        if ((*s)[1] == x && m.count({eq, x, (*s)[2]})) return true;
      return false;
    };
    for (const Tuple* t : index(eq))
      if (!substituted((*t)[1]) && !substituted((*t)[2])) return true;
    // substitute(X,Y), substitute(X,Z), X, Y, Z pairwise distinct
    std::map<int, std::set<int>> targets;
    for (const Tuple* s : index(sub))
      if ((*s)[1] != (*s)[2]) targets[(*s)[1]].insert((*s)[2]);
    for (const auto& [x, ys] : targets)
      if (ys.size() > 1) return true;
    // substitute(X,Y), X != Y, neq(X,Y)
    for (const Tuple* s : index(sub))
      if ((*s)[1] != (*s)[2] && m.count({neq, (*s)[1], (*s)[2]})) return true;
    // domain and range
    for (const Tuple* v : index(pred_["value"])) {
      for (const Tuple* d : index(pred_["domain"]))
        if ((*d)[1] == (*v)[1] && !m.count({pred_["instance_of"], (*v)[2], (*d)[2]})) return true;
      for (const Tuple* r : index(pred_["range"]))
        if ((*r)[1] == (*v)[1] && !m.count({pred_["instance_of"], (*v)[3], (*r)[2]})) return true;
    }
    // cardinality aggregates
    for (const Tuple* c : index(pred_["constraint"])) {
      const int kind = (*c)[1], y = (*c)[2], s = (*c)[3], d = (*c)[4];
      const long bound = std::stol(syms_.name((*c)[5]));
      long count = 0;
      for (const Tuple* ve : index(pred_["value_e"]))
        if ((*ve)[1] == s && (*ve)[2] == y && m.count({pred_["instance_of"], (*ve)[3], d})) ++count;
      const bool low = count <= bound - 1;
      const bool high = count >= bound + 1;
      if (kind == pred_["min"] && low) return true;
      if (kind == pred_["max"] && high) return true;
      if (kind == pred_["exact"] && (low || high)) return true;
    }
    return false;
  }

  Budget budget_;
  Symbols syms_;
  std::map<std::string, int> pred_;
  std::vector<Rule> axioms_;
  std::vector<Rule> ground_;
  Model facts_;
  Model base_;
};

}  // namespace

std::vector<ookb::AtomSet> enumerate_answer_sets(const ookb::GroundProgram& program, const Budget& budget) {
  return Evaluator(program, budget).run();
}

}  // namespace oracle
